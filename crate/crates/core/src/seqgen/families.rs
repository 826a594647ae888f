use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactalg::{binomial, series_coeffs, BiPoly, IntPoly, Ring, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FibKind {
    Fibonacci,
    Lucas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RsKind {
    R,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BcKind {
    B,
    C,
}

/// `C(top, k) * n / top`, which is always an integer for the families below.
fn scaled_binomial(top: i64, k: i64, n: i64) -> BigInt {
    let (q, r) = (binomial(top, k) * n).div_rem(&BigInt::from(top));
    assert!(r == BigInt::from(0), "non-integral coefficient C({top},{k})*{n}/{top}");
    q
}

/// First `count` terms of `F_n(x, s)` or `L_n(x, s)` from the three-term recurrence.
pub fn fib_lucas_sequence(kind: FibKind, count: usize) -> Vec<BiPoly> {
    let (a, b) = match kind {
        FibKind::Fibonacci => (BiPoly::zero(), BiPoly::constant(1)),
        FibKind::Lucas => (BiPoly::constant(2), BiPoly::x()),
    };
    let mut out = vec![a, b];
    while out.len() < count {
        let k = out.len();
        let next = out[k - 1].shift(1, 0) + out[k - 2].shift(0, 1);
        out.push(next);
    }
    out.truncate(count);
    out
}

pub fn fib_lucas(n: usize, kind: FibKind) -> BiPoly {
    fib_lucas_sequence(kind, n + 1).pop().unwrap()
}

/// Explicit binomial sums for `F_n` and `L_n`.
pub fn fib_lucas_explicit(n: usize, kind: FibKind) -> BiPoly {
    let n = n as i64;
    match kind {
        FibKind::Fibonacci if n == 0 => BiPoly::zero(),
        FibKind::Fibonacci => BiPoly::from_terms(
            (0..=(n - 1) / 2).map(|k| ((n - 1 - 2 * k) as u32, k as u32, binomial(n - 1 - k, k))),
        ),
        FibKind::Lucas if n == 0 => BiPoly::constant(2),
        FibKind::Lucas => BiPoly::from_terms(
            (0..=n / 2).map(|j| ((n - 2 * j) as u32, j as u32, scaled_binomial(n - j, j, n))),
        ),
    }
}

/// First `count` terms of `v_n(m, x, s)` from its order-`m` recurrence.
pub fn v_sequence(m: usize, count: usize) -> Vec<BiPoly> {
    assert!(m >= 2, "v_sequence needs m >= 2");
    let mut out: Vec<BiPoly> = Vec::with_capacity(count);
    for n in 0..count {
        let next = if n == 0 {
            BiPoly::constant(m as i64)
        } else if n < m {
            BiPoly::term(1, n as u32, 0)
        } else {
            out[n - 1].shift(1, 0) - out[n - m].shift(0, 1)
        };
        out.push(next);
    }
    out
}

pub fn v_poly(n: usize, m: usize) -> BiPoly {
    v_sequence(m, n + 1).pop().unwrap()
}

/// `v_n(m, x, s) = sum_j (-1)^j C(n-(m-1)j, j) n/(n-(m-1)j) x^(n-mj) s^j`.
pub fn v_poly_explicit(n: usize, m: usize) -> BiPoly {
    assert!(m >= 2, "v_poly_explicit needs m >= 2");
    if n == 0 {
        return BiPoly::constant(m as i64);
    }
    let (n, m) = (n as i64, m as i64);
    BiPoly::from_terms((0..=n / m).map(|j| {
        let top = n - (m - 1) * j;
        let c = scaled_binomial(top, j, n) * BigInt::sign_pow(j);
        ((n - m * j) as u32, j as u32, c)
    }))
}

/// First `count` terms of `w_n(m, x, s)` from its order-`m` recurrence.
pub fn w_sequence(m: usize, count: usize) -> Vec<BiPoly> {
    assert!(m >= 2, "w_sequence needs m >= 2");
    let lead = BiPoly::term(1, 1, (m - 2) as u32);
    let tail = BiPoly::term(1, 0, (m - 1) as u32);
    let mut out: Vec<BiPoly> = Vec::with_capacity(count);
    for n in 0..count {
        let next = if n == 0 {
            BiPoly::constant(m as i64)
        } else if n + 1 < m {
            BiPoly::zero()
        } else if n + 1 == m {
            BiPoly::term(m as i64 - 1, 1, (m - 2) as u32)
        } else {
            &lead * &out[n + 1 - m] + &tail * &out[n - m]
        };
        out.push(next);
    }
    out
}

pub fn w_poly(n: usize, m: usize) -> BiPoly {
    w_sequence(m, n + 1).pop().unwrap()
}

/// `w_n(m, x, s) = sum_j C(n-j, (m-1)n-mj) n/(n-j) x^((m-1)n-mj) s^j`.
pub fn w_poly_explicit(n: usize, m: usize) -> BiPoly {
    assert!(m >= 2, "w_poly_explicit needs m >= 2");
    if n == 0 {
        return BiPoly::constant(m as i64);
    }
    let (n, m) = (n as i64, m as i64);
    BiPoly::from_terms((0..n).filter_map(|j| {
        let xe = (m - 1) * n - m * j;
        (xe >= 0).then(|| (xe as u32, j as u32, scaled_binomial(n - j, xe, n)))
    }))
}

/// Closed forms of `r_n(x)` and `s_n(x)`.
///
/// `r_n = sum_k (-1)^k C(n-2k, k) x^(3k)`; the alternating sign is forced by
/// the generating function `1/(1 - t + x^3 t^3)`.
pub fn rs_poly(n: usize, kind: RsKind) -> IntPoly {
    let n = n as i64;
    match kind {
        RsKind::R => IntPoly::from_terms(
            Var::X,
            (0..=n / 2).map(|k| (3 * k as usize, binomial(n - 2 * k, k) * BigInt::sign_pow(k))),
        ),
        RsKind::S => {
            let eps = match n % 3 {
                2 => -1,
                r => r,
            };
            let q = (n + 1) / 3;
            IntPoly::from_terms(
                Var::X,
                (0..=q).filter_map(|j| {
                    let e = n - 3 * j + eps;
                    (e >= 0).then(|| (e as usize, binomial(q + j, 3 * j - eps)))
                }),
            )
        }
    }
}

/// First `count` values of `r_n` or `s_n` read off their generating functions.
pub fn rs_series(kind: RsKind, count: usize) -> Vec<IntPoly> {
    let c = |v: &[i64]| IntPoly::from_i64s(Var::X, v);
    let den = match kind {
        RsKind::R => vec![c(&[1]), c(&[-1]), c(&[0]), c(&[0, 0, 0, 1])],
        RsKind::S => vec![c(&[1]), c(&[0]), c(&[0, -1]), c(&[0, 0, 0, -1])],
    };
    series_coeffs(&[c(&[1])], &den, count).expect("constant term of the denominator is 1")
}

/// `b_i(x)` or `c_i(x)` (`i >= 1`) from their order-3 recurrences.
pub fn bc_poly(i: usize, kind: BcKind) -> IntPoly {
    assert!(i >= 1, "bc_poly needs i >= 1");
    let c = |v: &[i64]| IntPoly::from_i64s(Var::X, v);
    let mut seq = match kind {
        BcKind::B => vec![c(&[1]), c(&[1, 1]), c(&[1, 1, 1])],
        BcKind::C => vec![c(&[1]), c(&[1, -1]), c(&[0, 1, 2])],
    };
    let x = c(&[0, 1]);
    let x3 = c(&[0, 0, 0, 1]);
    while seq.len() < i {
        let k = seq.len();
        let next = match kind {
            BcKind::B => &seq[k - 1] - &(&x3 * &seq[k - 3]),
            BcKind::C => &(&x * &seq[k - 2]) + &(&x3 * &seq[k - 3]),
        };
        seq.push(next);
    }
    seq.swap_remove(i - 1)
}

/// `b_i` or `c_i` as a short convolution of `r_n` or `s_n`.
pub fn bc_convolution(i: usize, kind: BcKind) -> IntPoly {
    assert!(i >= 1, "bc_convolution needs i >= 1");
    let (base, weights) = match kind {
        BcKind::B => (rs_series(RsKind::R, i), [IntPoly::from_i64s(Var::X, &[1]), IntPoly::from_i64s(Var::X, &[0, 1]), IntPoly::from_i64s(Var::X, &[0, 0, 1])]),
        BcKind::C => (rs_series(RsKind::S, i), [IntPoly::from_i64s(Var::X, &[1]), IntPoly::from_i64s(Var::X, &[1, -1]), IntPoly::from_i64s(Var::X, &[0, 0, 2])]),
    };
    let mut acc = IntPoly::zero_in(Var::X);
    for (d, w) in weights.iter().enumerate() {
        if let Some(idx) = (i - 1).checked_sub(d) {
            acc = &acc + &(w * &base[idx]);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn ip(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn fibonacci_and_lucas_examples() {
        assert_eq!(fib_lucas(5, FibKind::Lucas), bp("x^5 + 5*x^3*s + 5*x*s^2"));
        assert_eq!(fib_lucas(3, FibKind::Fibonacci), bp("x^2 + s"));
        assert_eq!(fib_lucas(0, FibKind::Lucas), bp("2"));
        assert_eq!(fib_lucas(0, FibKind::Fibonacci), BiPoly::zero());
        // at s = -1 the Lucas list reads x^5 - 5x^3 + 5x
        assert_eq!(fib_lucas(5, FibKind::Lucas).at_s(&BigInt::from(-1)), ip("x^5 - 5*x^3 + 5*x"));
    }

    #[test]
    fn fibonacci_and_lucas_recurrence_vs_sum() {
        for kind in [FibKind::Fibonacci, FibKind::Lucas] {
            let seq = fib_lucas_sequence(kind, 41);
            for (n, p) in seq.iter().enumerate() {
                assert_eq!(*p, fib_lucas_explicit(n, kind), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn v_and_w_table_values() {
        let one = BigInt::from(1);
        assert_eq!(v_poly(3, 3).at_s(&one), ip("x^3 - 3"));
        assert_eq!(v_poly(7, 3).at_s(&one), ip("x^7 - 7*x^4 + 7*x"));
        assert_eq!(v_poly(0, 5), bp("5"));
        assert_eq!(w_poly(2, 3).at_s(&one), ip("2*x"));
        assert_eq!(w_poly(6, 3).at_s(&one), ip("3 + 2*x^3"));
        assert_eq!(w_poly(1, 4), BiPoly::zero());
    }

    #[test]
    fn v_and_w_recurrence_vs_sum() {
        for m in 2..=6 {
            let vs = v_sequence(m, 41);
            let ws = w_sequence(m, 41);
            for n in 0..=40 {
                assert_eq!(vs[n], v_poly_explicit(n, m), "v m={m} n={n}");
                assert_eq!(ws[n], w_poly_explicit(n, m), "w m={m} n={n}");
            }
        }
    }

    #[test]
    fn rs_listed_values() {
        let r = ["1", "1", "1", "1 - x^3", "1 - 2*x^3", "1 - 3*x^3", "1 - 4*x^3 + x^6"];
        for (n, want) in r.iter().enumerate() {
            assert_eq!(rs_poly(n, RsKind::R), ip(want), "r_{n}");
        }
        let s = ["1", "0", "x", "x^3", "x^2", "2*x^4", "x^3 + x^6", "3*x^5", "x^4 + 3*x^7"];
        for (n, want) in s.iter().enumerate() {
            assert_eq!(rs_poly(n, RsKind::S), ip(want), "s_{n}");
        }
    }

    #[test]
    fn rs_closed_form_vs_series() {
        for kind in [RsKind::R, RsKind::S] {
            for (n, p) in rs_series(kind, 60).iter().enumerate() {
                assert_eq!(*p, rs_poly(n, kind), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn bc_examples() {
        assert_eq!(bc_poly(3, BcKind::B), ip("1 + x + x^2"));
        assert_eq!(bc_poly(4, BcKind::B), ip("1 + x + x^2 - x^3"));
        assert_eq!(bc_poly(2, BcKind::C), ip("1 - x"));
        assert_eq!(bc_poly(3, BcKind::C), ip("x + 2*x^2"));
    }

    #[test]
    fn bc_recurrence_vs_convolution() {
        for kind in [BcKind::B, BcKind::C] {
            for i in 1..=40 {
                assert_eq!(bc_poly(i, kind), bc_convolution(i, kind), "{kind:?} i={i}");
            }
        }
    }
}
