use num_bigint::BigInt;
use num_rational::BigRational;

use super::pk::{check_params, master_sign, PkFamily, Provenance};
use crate::error::{Error, Result};
use crate::exactalg::{binomial, BiPoly, Ring};

/// One unknown coefficient: `p_k` gains `c x^(kn-mj) s^j`.
struct Unknown {
    k: i64,
    j: i64,
}

/// Solve `A u = rhs` exactly. Errors unless the solution exists and is unique.
fn solve_unique(mut a: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>, cols: usize) -> Result<Vec<BigRational>> {
    let rows = a.len();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::internal(format!("coefficient system is singular in column {col}")));
        };
        a.swap(pivot_row, p);
        rhs.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for v in a[pivot_row].iter_mut() {
            *v *= &inv;
        }
        rhs[pivot_row] *= &inv;
        for r in 0..rows {
            if r == pivot_row || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            let pivot = a[pivot_row][col..cols].to_vec();
            for (dst, p) in a[r][col..cols].iter_mut().zip(&pivot) {
                *dst -= &f * p;
            }
            let sub = &f * &rhs[pivot_row];
            rhs[r] -= sub;
        }
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|v| !v.is_zero()) {
        return Err(Error::internal("coefficient system is inconsistent"));
    }
    Ok(rhs.into_iter().take(cols).collect())
}

/// `p_k(n, m, x, s)` by solving for the coefficients directly.
///
/// The unknowns are the coefficients allowed by the degree windows; the
/// equations say that the coefficients of `sum_k p_k(n, m, x+1, x)` match
/// `1 + (-1)^(m(n-1)) x^n`. The system is solved over the rationals and the
/// solution must be unique and integral.
pub fn pk_oracle(n: i64, m: i64) -> Result<PkFamily> {
    check_params(n, m)?;
    if n == 0 {
        let polys = (1..m).map(|k| BiPoly::constant(BigInt::sign_pow(k - 1) * binomial(m, k))).collect();
        return Ok(PkFamily { n, m, polys, provenance: Provenance::Oracle });
    }
    let unknowns: Vec<Unknown> = (1..m)
        .flat_map(|k| ((k - 1) * n / m + 1..=k * n / m).map(move |j| Unknown { k, j }))
        .collect();
    // (x+1)^(kn-mj) x^j has degree kn - (m-1)j
    let deg = unknowns.iter().map(|u| u.k * n - (m - 1) * u.j).chain([n]).max().unwrap() as usize;
    let mut a = vec![vec![BigRational::zero(); unknowns.len()]; deg + 1];
    for (col, u) in unknowns.iter().enumerate() {
        let e = u.k * n - m * u.j;
        for i in 0..=e {
            a[(i + u.j) as usize][col] = BigRational::from_integer(binomial(e, i));
        }
    }
    // rhs = 1 + sigma x^n - (x+1)^n, moving the fixed x^n of p_1 across
    let mut rhs: Vec<BigRational> =
        (0..=deg as i64).map(|i| BigRational::from_integer(-binomial(n, i))).collect();
    rhs[0] += BigRational::one();
    rhs[n as usize] += BigRational::from_integer(master_sign(n, m));
    let sol = solve_unique(a, rhs, unknowns.len())?;
    let mut polys: Vec<BiPoly> = (1..m).map(|_| BiPoly::zero()).collect();
    polys[0].add_term(BigInt::from(1), n as u32, 0);
    for (u, c) in unknowns.iter().zip(sol) {
        if !c.is_integer() {
            return Err(Error::internal(format!("non-integral coefficient {c} for k={}, j={}", u.k, u.j)));
        }
        polys[(u.k - 1) as usize].add_term(c.to_integer(), (u.k * n - m * u.j) as u32, u.j as u32);
    }
    Ok(PkFamily { n, m, polys, provenance: Provenance::Oracle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::assemble_pk;

    fn bp(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(*pk_oracle(4, 2).unwrap().get(1), bp("x^4 - 4*x^2*s + 2*s^2"));
        let f = pk_oracle(2, 3).unwrap();
        assert_eq!((f.get(1).clone(), f.get(2).clone()), (bp("x^2"), bp("-2*x*s")));
        assert_eq!(*pk_oracle(6, 4).unwrap().get(2), bp("-2*s^3 - 3*s^2*x^4"));
    }

    #[test]
    fn oracle_equals_newton() {
        for m in 2..=6 {
            for n in 0..=24 {
                let oracle = pk_oracle(n, m).unwrap();
                let newton = assemble_pk(n, m).unwrap();
                assert_eq!(oracle.polys, newton.polys, "n={n} m={m}");
            }
        }
    }
}
