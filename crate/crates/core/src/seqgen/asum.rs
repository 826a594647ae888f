use num_bigint::BigInt;

use crate::exactalg::{binomial, ceil_div, floor_div, LaurentPoly, Ring, Var};

/// `a(n, i, l, m, z) = sum_k C(n, floor((n + i k + l) / m)) z^k`.
///
/// The sum runs over exactly the `k` with `0 <= n + i k + l < m (n + 1)`,
/// i.e. where the floored index lies in `[0, n]`.
pub fn a_sum(n: i64, i: i64, l: i64, m: i64) -> LaurentPoly<BigInt> {
    assert!(n >= 0 && i >= 1 && m >= 2, "a_sum needs n >= 0, i >= 1, m >= 2");
    let lo = ceil_div(-n - l, i);
    let hi = floor_div(m * n + m - 1 - n - l, i);
    LaurentPoly::from_terms(Var::Z, (lo..=hi).map(|k| (k, binomial(n, floor_div(n + i * k + l, m)))))
}

/// `a(n, i, l, m, -1)` without building the Laurent polynomial.
pub fn a_sum_at_minus_one(n: i64, i: i64, l: i64, m: i64) -> BigInt {
    a_sum(n, i, l, m).eval_at_unit(&BigInt::from(-1)).expect("-1 is a unit")
}

/// Closed form of `a(n, 1, 0, m, z)`: `(1 - z^m)/(1 - z) * ((1 + z^m)/z)^n`.
pub fn a_closed_i1(n: i64, m: i64) -> LaurentPoly<BigInt> {
    assert!(n >= 0 && m >= 2, "a_closed_i1 needs n >= 0, m >= 2");
    let geometric = LaurentPoly::from_terms(Var::Z, (0..m).map(|e| (e, BigInt::from(1))));
    let factor = LaurentPoly::from_terms(Var::Z, [(-1, BigInt::from(1)), (m - 1, BigInt::from(1))]);
    let mut acc = geometric;
    for _ in 0..n {
        acc = acc.mul_ref(&factor);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    fn lp(s: &str) -> LaurentPoly<BigInt> {
        parse_poly(s).unwrap().into_laurent(Var::Z).unwrap()
    }

    /// Independent oracle: scan a generous window of k and keep what is nonzero.
    fn brute(n: i64, i: i64, l: i64, m: i64) -> LaurentPoly<BigInt> {
        let w = (m + 2) * (n + 2) + l.abs();
        LaurentPoly::from_terms(Var::Z, (-w..=w).map(|k| (k, binomial(n, floor_div(n + i * k + l, m)))))
    }

    #[test]
    fn examples() {
        assert_eq!(a_sum(0, 1, 0, 3), lp("1 + z + z^2"));
        assert_eq!(a_sum(3, 5, 0, 2), lp("3"));
        assert_eq!(a_sum(2, 1, 0, 2), lp("z^-2 + z^-1 + 2 + 2*z + z^2 + z^3"));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(a_closed_i1(0, 4), lp("1 + z + z^2 + z^3"));
        assert_eq!(a_closed_i1(2, 2), lp("z^-2 + z^-1 + 2 + 2*z + z^2 + z^3"));
        assert_eq!(a_closed_i1(1, 2), lp("z^-1 + 1 + z + z^2"));
    }

    #[test]
    fn support_matches_brute_force() {
        for m in 2..=4 {
            for i in 1..=5 {
                for l in -3..=3 {
                    for n in 0..=8 {
                        let a = a_sum(n, i, l, m);
                        assert_eq!(a, brute(n, i, l, m), "n={n} i={i} l={l} m={m}");
                        let lo = ceil_div(-n - l, i);
                        let hi = floor_div(m * n + m - 1 - n - l, i);
                        if lo <= hi {
                            // the exact bounds are tight whenever the window is nonempty
                            assert_eq!(a.min_exp(), Some(lo));
                            assert_eq!(a.max_exp(), Some(hi));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sum_matches_closed_form() {
        for m in 2..=6 {
            for n in 0..=30 {
                assert_eq!(a_sum(n, 1, 0, m), a_closed_i1(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn closed_form_at_one() {
        for m in 2..=6 {
            for n in 0..=12 {
                let at_one: BigInt = a_closed_i1(n, m).terms().map(|(_, c)| c.clone()).sum();
                assert_eq!(at_one, BigInt::from(m) * BigInt::from(2).pow(n as u32));
            }
        }
    }
}
