use num_bigint::BigInt;

use super::result::{CheckResult, Witness};
use crate::exactalg::{IntPoly, Var};
use crate::seqgen::a_sum_at_minus_one;

/// `F_0, ..., F_{count-1}` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci_numbers(count: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for _ in 0..count {
        out.push(a.clone());
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    out
}

/// Both alternating sums with step 5 and modulus 2 against Fibonacci numbers,
/// plus the factorization of their annihilating operator.
pub fn schur_fibonacci_check(n_max: usize) -> CheckResult {
    let id = "schur";
    let params = format!("n_max={n_max}");
    let fib = fibonacci_numbers(n_max + 2);
    for n in 0..=n_max {
        let ni = n as i64;
        for (l, want) in [(2, &fib[n]), (0, &fib[n + 1])] {
            let got = a_sum_at_minus_one(ni, 5, l, 2);
            if &got != want {
                let w = Witness { index: format!("n={n}, l={l}"), lhs: got.to_string(), rhs: want.to_string() };
                return CheckResult::fail(id, params, w);
            }
        }
    }
    let lhs = IntPoly::from_i64s(Var::E, &[2, 5, 0, -5, 0, 1]);
    let golden = IntPoly::from_i64s(Var::E, &[-1, -1, 1]);
    let rhs = &IntPoly::from_i64s(Var::E, &[2, 1]) * &(&golden * &golden);
    if lhs != rhs {
        let w = Witness { index: "operator factorization".into(), lhs: lhs.to_string(), rhs: rhs.to_string() };
        return CheckResult::fail(id, params, w);
    }
    CheckResult::pass(id, params)
}
