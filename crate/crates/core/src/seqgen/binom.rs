use num_bigint::BigInt;

use crate::exactalg::{binomial, floor_div};

/// `t(m, n, k) = C(n, floor((n + k) / m))`, zero outside `0 <= floor <= n`.
pub fn binom_floor(m: i64, n: i64, k: i64) -> BigInt {
    assert!(m >= 2, "binom_floor needs m >= 2");
    binomial(n, floor_div(n + k, m))
}

/// Row `n` of the floored binomial array for a fixed `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinomArray {
    pub m: i64,
    pub n: i64,
}

impl BinomArray {
    pub fn new(m: i64, n: i64) -> Self {
        assert!(m >= 2, "BinomArray needs m >= 2");
        BinomArray { m, n }
    }

    pub fn get(&self, k: i64) -> BigInt {
        binom_floor(self.m, self.n, k)
    }

    /// Smallest and largest `k` with a nonzero entry (`n >= 0`).
    pub fn support(&self) -> (i64, i64) {
        (-self.n, self.m * self.n + self.m - 1 - self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(binom_floor(3, 4, 2), BigInt::from(6));
        assert_eq!(binom_floor(2, 3, -9), BigInt::from(0));
        assert_eq!(binom_floor(2, 4, 1), BigInt::from(6));
    }

    #[test]
    fn pascal_like_recurrence() {
        for m in 2..=6 {
            for n in 1..=40 {
                for k in -2 * m * n..=2 * m * n {
                    let lhs = binom_floor(m, n, k);
                    let rhs = binom_floor(m, n - 1, k - m + 1) + binom_floor(m, n - 1, k + 1);
                    assert_eq!(lhs, rhs, "m={m} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn support_is_tight() {
        let row = BinomArray::new(3, 4);
        let (lo, hi) = row.support();
        assert_ne!(row.get(lo), BigInt::from(0));
        assert_ne!(row.get(hi), BigInt::from(0));
        assert_eq!(row.get(lo - 1), BigInt::from(0));
        assert_eq!(row.get(hi + 1), BigInt::from(0));
    }
}
