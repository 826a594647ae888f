use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::newton::b_coefs;
use super::pk::{assemble_pk, check_params, master_sign, PkFamily};
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, LaurentPoly, Ring, ShiftOp, Var};
use crate::seqgen::{a_sum, binom_floor};

/// `sum_k p_k(n, m, x+1, x) == 1 + (-1)^(m(n-1)) x^n`, exactly.
pub fn check_master_identity(family: &PkFamily) -> bool {
    let (n, m) = (family.n, family.m);
    let mut lhs = IntPoly::zero_in(Var::X);
    for p in &family.polys {
        lhs = &lhs + &p.substitute_shifted();
    }
    let rhs = &IntPoly::one() + &IntPoly::monomial(Var::X, master_sign(n, m), n as usize);
    lhs == rhs
}

/// The shift operators `p_k(i, m, E, 1)`.
fn operators(i: i64, m: i64) -> Result<Vec<ShiftOp<BigInt>>> {
    let fam = assemble_pk(i, m)?;
    Ok(fam.polys.iter().map(|p| ShiftOp::from_poly(&p.at_s(&BigInt::from(1)))).collect())
}

/// The recurrence for `a(n, i, l, m, z)` in `n`, checked for `n <= n_max`,
/// together with the underlying identity on the floored binomial array.
pub fn check_shift_identity(i: i64, l: i64, m: i64, n_max: usize) -> Result<bool> {
    check_params(i, m)?;
    if i < 1 {
        return Err(Error::usage("the step i must be at least 1"));
    }
    let ops = operators(i, m)?;
    let sigma = master_sign(i, m);
    let order = ops.iter().map(|op| op.order() as usize).max().unwrap_or(0);
    let len = n_max + 1 + order;

    let seq: Vec<LaurentPoly<BigInt>> = (0..len as i64).map(|n| a_sum(n, i, l, m)).collect();
    let mut lhs: Vec<LaurentPoly<BigInt>> = vec![LaurentPoly::zero_in(Var::Z); n_max + 1];
    for (k, op) in ops.iter().enumerate() {
        for (n, v) in op.apply(&seq).into_iter().take(n_max + 1).enumerate() {
            lhs[n] = &lhs[n] + &v.shift(k as i64);
        }
    }
    let factor = LaurentPoly::from_terms(Var::Z, [(-1, BigInt::from(1)), (m - 1, sigma.clone())]);
    if (0..=n_max).any(|n| lhs[n] != &factor * &seq[n]) {
        return Ok(false);
    }

    // array form: sum_j p_j(i, m, E, 1) t(m, n, k - (j-1)i) = t(m, n, k+i) + sigma t(m, n, k-(m-1)i)
    let width = m * (len as i64 + 1) + m * i;
    for n in 0..=n_max as i64 {
        for k in -width..=width {
            let mut acc = BigInt::zero();
            for (j, op) in ops.iter().enumerate() {
                for (&e, c) in op.terms() {
                    acc += c * binom_floor(m, n + e as i64, k - j as i64 * i);
                }
            }
            let rhs = binom_floor(m, n, k + i) + &sigma * binom_floor(m, n, k - (m - 1) * i);
            if acc != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `sum_j x^((j-1)i) p_j(i, m, x^(m-1) + 1/x, 1) == x^(-i) + (-1)^(m(i-1)) x^((m-1)i)`.
pub fn check_laurent_identity_8(i: i64, m: i64) -> Result<bool> {
    check_params(i, m)?;
    if i < 1 {
        return Err(Error::usage("the step i must be at least 1"));
    }
    let fam = assemble_pk(i, m)?;
    let at = LaurentPoly::from_terms(Var::X, [(m - 1, BigInt::from(1)), (-1, BigInt::from(1))]);
    let one = LaurentPoly::constant(Var::X, BigInt::from(1));
    let mut lhs = LaurentPoly::zero_in(Var::X);
    for (j, p) in fam.polys.iter().enumerate() {
        let weight = LaurentPoly::monomial(Var::X, BigInt::from(1), j as i64 * i);
        lhs = &lhs + &(&weight * &p.eval_in(&at, &one));
    }
    let rhs = LaurentPoly::from_terms(Var::X, [(-i, BigInt::from(1)), ((m - 1) * i, master_sign(i, m))]);
    Ok(lhs == rhs)
}

/// Expands `prod_{k=1..n} (x - zeta^(-mk) (zeta^k - 1))` in floating point and
/// compares each coefficient with the exact `b(n, m, j)`, relative to
/// `max(1, |b|)`.
pub fn roots_of_unity_check(n: i64, m: i64, tol: f64) -> Result<bool> {
    if n < 1 || m < 2 {
        return Err(Error::usage(format!("need n >= 1 and m >= 2, got n={n}, m={m}")));
    }
    let table = b_coefs(n, m)?;
    let zeta = |e: i64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e.rem_euclid(n) as f64 / n as f64);
    // coeffs[j] is the coefficient of x^j
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for k in 1..=n {
        let root = zeta(-m * k) * (zeta(k) - 1.0);
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * root;
        }
        coeffs = next;
    }
    Ok(coeffs.iter().enumerate().all(|(j, c)| {
        let exact = table.b(j as i64).to_f64().unwrap_or(f64::INFINITY);
        (c - exact).norm() <= tol * exact.abs().max(1.0)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{pk_closed, pk_oracle};

    #[test]
    fn master_identity_all_sources() {
        for m in 2..=7 {
            for n in 0..=30 {
                assert!(check_master_identity(&assemble_pk(n, m).unwrap()), "newton n={n} m={m}");
            }
        }
        for m in 2..=6 {
            for n in 0..=16 {
                assert!(check_master_identity(&pk_oracle(n, m).unwrap()), "oracle n={n} m={m}");
            }
        }
    }

    #[test]
    fn master_identity_detects_damage() {
        let mut fam = assemble_pk(4, 2).unwrap();
        fam.polys[0].add_term(BigInt::from(1), 2, 1);
        assert!(!check_master_identity(&fam));
    }

    #[test]
    fn master_identity_at_zero() {
        for m in 2..=7 {
            let fam = assemble_pk(0, m).unwrap();
            let total: BigInt = fam.polys.iter().map(|p| p.coeff(0, 0)).sum();
            assert_eq!(total, BigInt::from(1) + BigInt::sign_pow(m));
            assert!(check_master_identity(&fam));
        }
    }

    #[test]
    fn shift_identity_examples() {
        assert!(check_shift_identity(5, 0, 2, 20).unwrap());
        assert!(check_shift_identity(1, 0, 2, 10).unwrap());
        assert!(check_shift_identity(3, 1, 3, 20).unwrap());
        assert_eq!(pk_closed(5, 2, 1).unwrap().at_s(&BigInt::from(1)), "x^5 - 5*x^3 + 5*x".parse().unwrap());
    }

    #[test]
    fn shift_identity_grid() {
        for m in 2..=5 {
            for i in 1..=6 {
                for l in -2..=2 {
                    assert!(check_shift_identity(i, l, m, 30).unwrap(), "i={i} l={l} m={m}");
                }
            }
        }
    }

    #[test]
    fn laurent_identity() {
        for m in 2..=6 {
            for i in 1..=12 {
                assert!(check_laurent_identity_8(i, m).unwrap(), "i={i} m={m}");
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        assert!(roots_of_unity_check(2, 2, 1e-9).unwrap());
        assert!(roots_of_unity_check(1, 2, 1e-9).unwrap());
        assert!(roots_of_unity_check(5, 2, 1e-6).unwrap());
        for m in 2..=6 {
            for n in 1..=16 {
                assert!(roots_of_unity_check(n, m, 1e-6).unwrap(), "n={n} m={m}");
            }
        }
    }
}
