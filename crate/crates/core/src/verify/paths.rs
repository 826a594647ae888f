use num_bigint::BigInt;

use super::result::{CheckResult, Witness};
use crate::error::Error;
use crate::exactalg::{BiPoly, DensePoly, IntPoly, ShiftOp, Var};
use crate::seqgen::{a_sum_at_minus_one, compare_formula, enumerate_paths, fib_lucas, FibKind, FormulaComparison};

type Operator = DensePoly<IntPoly>;

fn t_poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(Var::T, coeffs)
}

/// `F_m(X, S) - (1 + E) F_{m-1}(X, S) + E F_{m-2}(X, S)` with
/// `X = E^2 + 1 - t`, `S = -E^2`, as a polynomial in `E` over `Z[t]`.
pub fn path_operator(m: usize) -> Operator {
    assert!(m >= 2, "lattice paths need m >= 2");
    let e = Operator::monomial(Var::E, t_poly(&[1]), 1);
    let xv = Operator::new(Var::E, vec![t_poly(&[1, -1]), t_poly(&[]), t_poly(&[1])]);
    let sv = Operator::monomial(Var::E, t_poly(&[-1]), 2);
    let f = |j: usize| -> Operator { fib_lucas(j, FibKind::Fibonacci).eval_in(&xv, &sv) };
    let one_plus_e = &Operator::constant(Var::E, t_poly(&[1])) + &e;
    &(&f(m) - &(&one_plus_e * &f(m - 1))) + &(&e * &f(m - 2))
}

/// `F_{m+1}(E, -1) - F_m(E, -1)`, the operator at `t = 1`.
pub fn path_operator_at_one(m: usize) -> IntPoly {
    let ev = IntPoly::from_i64s(Var::E, &[0, 1]);
    let minus_one = IntPoly::from_i64s(Var::E, &[-1]);
    let at = |p: BiPoly| p.eval_in(&ev, &minus_one);
    &at(fib_lucas(m + 1, FibKind::Fibonacci)) - &at(fib_lucas(m, FibKind::Fibonacci))
}

fn weights(m: usize, n_max: usize, cap: u64) -> Result<Vec<IntPoly>, Error> {
    (0..=n_max).map(|n| enumerate_paths(n, m, cap).map(|w| w.into_poly())).collect()
}

fn nonzero_witness<T: ToString>(label: &str, residues: &[T], is_zero: impl Fn(&T) -> bool) -> Option<Witness> {
    residues
        .iter()
        .position(|r| !is_zero(r))
        .map(|n| Witness { index: format!("{label}, n={n}"), lhs: residues[n].to_string(), rhs: "0".into() })
}

/// The order `2m - 2` operator annihilates the enumerated weights for every
/// `n` whose shifts stay within `n_max`, and its `t = 1` reduction
/// annihilates `a(n, 2m+1, 0, 2, -1)`.
pub fn pathweight_recurrence_check(m: usize, n_max: usize, cap: u64) -> CheckResult {
    let id = "paths-recurrence";
    let params = format!("m={m}, n_max={n_max}");
    let op = path_operator(m);
    if op.degree() != Some(2 * m - 2) {
        let w = Witness { index: "operator order".into(), lhs: op.to_string(), rhs: format!("order {}", 2 * m - 2) };
        return CheckResult::fail(id, params, w);
    }
    let seq = match weights(m, n_max, cap) {
        Ok(s) => s,
        Err(e) => return CheckResult::report(id, params, e.to_string()),
    };
    let residues = ShiftOp::from_poly(&op).apply(&seq);
    if let Some(w) = nonzero_witness("weights", &residues, |r| r.coeffs().is_empty()) {
        return CheckResult::fail(id, params, w);
    }

    let reduced = path_operator_at_one(m);
    let sums: Vec<BigInt> = (0..=n_max as i64).map(|n| a_sum_at_minus_one(n, 2 * m as i64 + 1, 0, 2)).collect();
    let residues = ShiftOp::from_poly(&reduced).apply(&sums);
    let zero = BigInt::from(0);
    if let Some(w) = nonzero_witness("t=1 reduction", &residues, |r| *r == zero) {
        return CheckResult::fail(id, params, w);
    }
    CheckResult::pass(id, params).with_note(format!("operator {op}"))
}

/// Enumerated weights at `t = 1` equal `a(n, 2m+1, 0, 2, -1)`, and for
/// `m = 2` the weights are `F_{n+1}(1, t)`.
pub fn pathweight_values_check(m: usize, n_max: usize, cap: u64) -> CheckResult {
    let id = "paths-values";
    let params = format!("m={m}, n_max={n_max}");
    let seq = match weights(m, n_max, cap) {
        Ok(s) => s,
        Err(e) => return CheckResult::report(id, params, e.to_string()),
    };
    let one = t_poly(&[1]);
    let t = t_poly(&[0, 1]);
    for (n, w) in seq.iter().enumerate() {
        let at_one: BigInt = w.coeffs().iter().sum();
        let want = a_sum_at_minus_one(n as i64, 2 * m as i64 + 1, 0, 2);
        if at_one != want {
            let wit = Witness { index: format!("t=1, n={n}"), lhs: at_one.to_string(), rhs: want.to_string() };
            return CheckResult::fail(id, params, wit);
        }
        if m == 2 {
            let fib = fib_lucas(n + 1, FibKind::Fibonacci).eval_in(&one, &t);
            if *w != fib {
                let wit = Witness { index: format!("F(n+1)(1, t), n={n}"), lhs: w.to_string(), rhs: fib.to_string() };
                return CheckResult::fail(id, params, wit);
            }
        }
    }
    CheckResult::pass(id, params)
}

/// Compares the closed double-sum formula with enumeration; never fails.
pub fn pathweight_formula_report(m: usize, n_max: usize, cap: u64) -> CheckResult {
    let id = "paths-formula";
    let params = format!("m={m}, n_max={n_max}");
    let mut differing = Vec::new();
    for n in 0..=n_max {
        match compare_formula(n, m, cap) {
            FormulaComparison::Equal => {}
            FormulaComparison::Unequal { formula, enumerated } => {
                if differing.is_empty() {
                    differing.push(format!("first difference at n={n}: formula {formula}, enumerated {enumerated}"));
                }
                differing.push(n.to_string());
            }
            FormulaComparison::Skipped { reason } => return CheckResult::report(id, params, reason),
        }
    }
    let note = if differing.is_empty() {
        format!("formula agrees with enumeration for n <= {n_max}")
    } else {
        format!("{}; differing n: {}", differing[0], differing[1..].join(", "))
    };
    CheckResult::report(id, params, note)
}
