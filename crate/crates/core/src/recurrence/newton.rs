use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::{binomial, Ring};

/// `d(n, m, j) = (-1)^(j - r) n C(j, r)` with `r = mj mod n`; `d(n, m, 0) = n`.
pub fn d_coef(n: i64, m: i64, j: i64) -> BigInt {
    assert!(n >= 1 && m >= 2 && j >= 0, "d_coef needs n >= 1, m >= 2, j >= 0");
    if j == 0 {
        return BigInt::from(n);
    }
    let r = (m * j).rem_euclid(n);
    BigInt::sign_pow(j - r) * binomial(j, r) * n
}

/// The `j`-th power sum of the roots `zeta^(-mk) (zeta^k - 1)`, `k = 1..n`.
///
/// Agrees with [`d_coef`] for `0 <= j < n`. At `j = n` both residues `0` and
/// `n` contribute, which `d_coef` misses.
pub fn power_sum(n: i64, m: i64, j: i64) -> BigInt {
    assert!(n >= 1 && m >= 2 && j >= 0, "power_sum needs n >= 1, m >= 2, j >= 0");
    if j == 0 {
        return BigInt::from(n);
    }
    let target = (m * j).rem_euclid(n);
    let mut acc = BigInt::zero();
    let mut i = target;
    while i <= j {
        acc += BigInt::sign_pow(j - i) * binomial(j, i);
        i += n;
    }
    acc * n
}

/// Power sums and the coefficients `b(n, m, j)`, both indexed by `j = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonTable {
    pub n: i64,
    pub m: i64,
    pub d: Vec<BigInt>,
    pub b: Vec<BigInt>,
}

impl NewtonTable {
    pub fn d(&self, j: i64) -> &BigInt {
        &self.d[j as usize]
    }

    pub fn b(&self, j: i64) -> &BigInt {
        &self.b[j as usize]
    }
}

/// Newton's identities: `b(n, m, n-j) = -(1/j) sum_{i<j} d(j-i) b(n-i)`.
///
/// Runs in exact rationals and fails if any `b` is not an integer.
pub fn b_coefs(n: i64, m: i64) -> Result<NewtonTable> {
    assert!(n >= 1 && m >= 2, "b_coefs needs n >= 1, m >= 2");
    let d: Vec<BigInt> = (0..=n).map(|j| power_sum(n, m, j)).collect();
    let mut b = vec![BigRational::zero(); n as usize + 1];
    b[n as usize] = BigRational::from_integer(BigInt::from(1));
    for j in 1..=n {
        let mut acc = BigRational::zero();
        for i in 0..j {
            acc += BigRational::from_integer(d[(j - i) as usize].clone()) * &b[(n - i) as usize];
        }
        b[(n - j) as usize] = -acc / BigRational::from_integer(BigInt::from(j));
    }
    let b = b
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Error::internal(format!("b({n},{m},{j}) = {v} is not an integer")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NewtonTable { n, m, d, b })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_examples() {
        assert_eq!(d_coef(5, 2, 4), BigInt::from(-20));
        assert_eq!(d_coef(5, 2, 1), BigInt::from(0));
        for n in 1..10 {
            assert_eq!(d_coef(n, 3, 0), BigInt::from(n));
        }
    }

    #[test]
    fn power_sum_matches_d_below_n() {
        for m in 2..=7 {
            for n in 1..=20 {
                for j in 0..n {
                    assert_eq!(power_sum(n, m, j), d_coef(n, m, j), "n={n} m={m} j={j}");
                }
                let even = if n % 2 == 0 { 2 } else { 0 };
                assert_eq!(power_sum(n, m, n), BigInt::from(n * even), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn b_examples() {
        let t = b_coefs(5, 2).unwrap();
        assert_eq!(t.b(1), &BigInt::from(5));
        assert_eq!(t.b(2), &BigInt::from(-5));
        assert_eq!(t.b(5), &BigInt::from(1));
        assert_eq!(t.b(0), &BigInt::from(0));
        let t = b_coefs(2, 2).unwrap();
        assert_eq!((t.b(0), t.b(1), t.b(2)), (&BigInt::from(0), &BigInt::from(2), &BigInt::from(1)));
    }

    #[test]
    fn table_invariants() {
        for m in 2..=7 {
            for n in 1..=30 {
                let t = b_coefs(n, m).unwrap();
                assert_eq!(t.b(n), &BigInt::from(1));
                assert_eq!(t.d(0), &BigInt::from(n));
                assert_eq!(t.b(0), &BigInt::from(0));
                for j in 1..=n {
                    if m * j < n {
                        assert_eq!(t.d(j), &BigInt::from(0), "d n={n} m={m} j={j}");
                        assert_eq!(t.b(n - j), &BigInt::from(0), "b n={n} m={m} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn vanishing_window_is_strict_when_m_divides_n() {
        let t = b_coefs(4, 2).unwrap();
        assert_eq!(t.d(2), &BigInt::from(4));
        assert_eq!(t.b(2), &BigInt::from(-2));
    }

    #[test]
    fn b_top_window_closed_form() {
        for m in 2..=6i64 {
            for n in 1..=30i64 {
                let t = b_coefs(n, m).unwrap();
                for j in 1..n {
                    if (m - 2) * n < m * j && m * j <= (m - 1) * n {
                        let e = (m - 1) * n - m * j;
                        let (q, r) = num_integer::Integer::div_rem(&(binomial(n - j, e) * n), &BigInt::from(n - j));
                        assert_eq!(r, BigInt::from(0));
                        let want = -BigInt::sign_pow(n + j + e) * q;
                        assert_eq!(t.b(j), &want, "n={n} m={m} j={j}");
                    }
                }
            }
        }
    }
}
