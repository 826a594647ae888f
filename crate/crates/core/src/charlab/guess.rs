use num_bigint::BigInt;
use num_rational::BigRational;

use super::bm::berlekamp_massey;
use super::charpoly::CharPoly;
use crate::error::{Error, Result};
use crate::exactalg::{DensePoly, Field, IntPoly, RatFunc, Ring, Var};

/// Result of a recurrence search.
#[derive(Clone, Debug, PartialEq)]
pub enum GuessOutcome {
    Found(CharPoly),
    NotFound { max_order: usize, reason: String },
}

impl GuessOutcome {
    pub fn found(&self) -> Option<&CharPoly> {
        match self {
            GuessOutcome::Found(c) => Some(c),
            GuessOutcome::NotFound { .. } => None,
        }
    }
}

fn check_length(len: usize, max_order: usize) -> Result<()> {
    if len < 2 * max_order + 2 {
        return Err(Error::usage(format!(
            "recurrence guessing up to order {max_order} needs at least {} terms, got {len}",
            2 * max_order + 2
        )));
    }
    Ok(())
}

/// Characteristic polynomial (lowest power of `z` first) of a connection polynomial.
fn reversed<F: Field>(l: usize, c: Vec<F>) -> Vec<F> {
    let mut out = c;
    out.resize(l + 1, F::zero());
    out.reverse();
    out
}

/// Berlekamp-Massey directly over `Q(x)`.
pub fn guess_recurrence_ratfunc(seq: &[RatFunc], max_order: usize) -> Result<GuessOutcome> {
    check_length(seq.len(), max_order)?;
    let (l, c) = berlekamp_massey(seq);
    if l > max_order {
        return Ok(GuessOutcome::NotFound { max_order, reason: format!("shortest recurrence has order {l}") });
    }
    Ok(GuessOutcome::Found(CharPoly::from_ratfunc_coeffs(&reversed(l, c))))
}

const FIRST_POINT: i64 = 2;
const MAX_POINTS: usize = 96;
const CONFIRMATIONS: usize = 3;

/// Incremental Newton interpolation over `Q`.
#[derive(Default)]
struct Newton {
    xs: Vec<BigRational>,
    coefs: Vec<BigRational>,
}

impl Newton {
    fn push(&mut self, x: &BigRational, y: BigRational) {
        let mut v = y;
        for (xi, a) in self.xs.iter().zip(&self.coefs) {
            v = (v - a) / (x - xi);
        }
        self.xs.push(x.clone());
        self.coefs.push(v);
    }

    fn settled(&self) -> bool {
        self.coefs.len() > CONFIRMATIONS && self.coefs.iter().rev().take(CONFIRMATIONS).all(|c| c.is_zero())
    }

    /// Monomial coefficients, if all are integers.
    fn to_intpoly(&self) -> Option<IntPoly> {
        let mut acc: Vec<BigRational> = Vec::new();
        for k in (0..self.coefs.len()).rev() {
            // acc = acc * (x - xs[k]) + coefs[k]
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * &self.xs[k];
            }
            next[0] += &self.coefs[k];
            acc = next;
        }
        let ints = acc.into_iter().map(|c| c.is_integer().then(|| c.to_integer())).collect::<Option<Vec<_>>>()?;
        Some(IntPoly::new(Var::X, ints))
    }
}

/// Guess by specializing `x` to integers, running Berlekamp-Massey over `Q`
/// and interpolating the coefficients. `None` if the interpolants do not
/// settle or are not integral.
fn guess_by_evaluation(seq: &[IntPoly], max_order: usize) -> Option<std::result::Result<CharPoly, usize>> {
    let mut order = 0usize;
    let mut interp: Vec<Newton> = Vec::new();
    for step in 0..MAX_POINTS {
        let x0 = BigInt::from(FIRST_POINT + step as i64);
        let vals: Vec<BigRational> = seq.iter().map(|p| BigRational::from_integer(p.eval(&x0))).collect();
        let (l, c) = berlekamp_massey(&vals);
        if l > max_order {
            return Some(Err(l));
        }
        if l < order {
            continue;
        }
        if l > order || interp.is_empty() {
            order = l;
            interp = (0..=l).map(|_| Newton::default()).collect();
        }
        let x0 = BigRational::from_integer(x0);
        for (n, v) in interp.iter_mut().zip(reversed(l, c)) {
            n.push(&x0, v);
        }
        if interp.iter().all(Newton::settled) {
            let coeffs = interp.iter().map(Newton::to_intpoly).collect::<Option<Vec<_>>>()?;
            return Some(Ok(CharPoly::from_nested(&DensePoly::new(Var::Z, coeffs))));
        }
    }
    None
}

/// Minimal recurrence of a sequence of polynomials in `x`, as a
/// characteristic polynomial over `Q(x)` brought to primitive integer form.
///
/// Evaluation and interpolation are tried first; the candidate is accepted
/// only if it annihilates the exact sequence. Otherwise Berlekamp-Massey runs
/// directly over rational functions.
pub fn guess_recurrence(seq: &[IntPoly], max_order: usize) -> Result<GuessOutcome> {
    check_length(seq.len(), max_order)?;
    match guess_by_evaluation(seq, max_order) {
        Some(Err(l)) => {
            return Ok(GuessOutcome::NotFound {
                max_order,
                reason: format!("a specialization already needs order {l}"),
            })
        }
        Some(Ok(c)) if c.annihilates(seq) => return Ok(GuessOutcome::Found(c)),
        _ => {}
    }
    let rf: Vec<RatFunc> = seq.iter().map(|p| RatFunc::from_poly(p.clone().with_var(Var::X))).collect();
    guess_recurrence_ratfunc(&rf, max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(s: &str) -> CharPoly {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<IntPoly> {
        v.iter().map(|&c| IntPoly::constant(Var::X, BigInt::from(c))).collect()
    }

    #[test]
    fn power_plus_one() {
        let seq: Vec<IntPoly> = (0..8).map(|n| &IntPoly::monomial(Var::X, BigInt::from(1), n) + &IntPoly::one()).collect();
        let want = cp("z^2 - (x+1)*z + x");
        assert_eq!(guess_recurrence(&seq, 3).unwrap(), GuessOutcome::Found(want.clone()));
        let rf: Vec<RatFunc> = seq.iter().cloned().map(RatFunc::from_poly).collect();
        assert_eq!(guess_recurrence_ratfunc(&rf, 3).unwrap(), GuessOutcome::Found(want));
    }

    #[test]
    fn constant_and_fibonacci() {
        assert_eq!(guess_recurrence(&ints(&[1; 8]), 3).unwrap(), GuessOutcome::Found(cp("z - 1")));
        let fib = ints(&[0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        assert_eq!(guess_recurrence(&fib, 3).unwrap(), GuessOutcome::Found(cp("z^2 - z - 1")));
    }

    #[test]
    fn not_found_and_short_input() {
        let seq = ints(&[1, 2, 4, 9, 1, 7, 3, 8, 2, 6]);
        assert!(matches!(guess_recurrence(&seq, 2).unwrap(), GuessOutcome::NotFound { .. }));
        assert!(guess_recurrence(&ints(&[1, 2, 3]), 2).is_err());
    }
}
