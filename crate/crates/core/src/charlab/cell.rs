use rayon::prelude::*;

use super::charpoly::CharPoly;
use super::guess::{guess_recurrence, GuessOutcome};
use crate::error::{Error, Result};
use crate::exactalg::{binomial, IntPoly, Var};
use crate::recurrence::assemble_pk;

/// `p_k(n, m, x+1, x)` for `n < count`, one row per `k = 1..m-1`.
pub fn shifted_pk_table(m: i64, count: usize) -> Result<Vec<Vec<IntPoly>>> {
    let cols: Vec<Vec<IntPoly>> = (0..count as i64)
        .into_par_iter()
        .map(|n| {
            let fam = assemble_pk(n, m)?;
            Ok(fam.polys.iter().map(|p| p.substitute_shifted().with_var(Var::X)).collect())
        })
        .collect::<Result<_>>()?;
    Ok((0..(m - 1) as usize).map(|k| cols.iter().map(|c| c[k].clone()).collect()).collect())
}

/// One characteristic-polynomial search for `(m, k)`.
#[derive(Clone, Debug)]
pub struct CharCell {
    pub m: i64,
    pub k: i64,
    pub charpoly: Option<CharPoly>,
    /// Whether the order bound had to be doubled.
    pub escalated: bool,
    /// Order found when the `n = 0` term is dropped, if that is lower.
    pub order_without_zero: Option<usize>,
    /// The terms the search and certification used.
    pub sequence: Vec<IntPoly>,
    pub failure: Option<String>,
}

fn check_cell(m: i64, k: i64) -> Result<()> {
    if m < 2 || k < 1 || k >= m {
        return Err(Error::usage(format!("need m >= 2 and 1 <= k <= m-1, got m={m}, k={k}")));
    }
    Ok(())
}

/// Search window for expected order `c`: `2c + 7` terms to guess from and
/// `c + 4` more held out.
fn window(c: usize) -> (usize, usize) {
    (2 * c + 7, c + 4)
}

/// `c_{m,k}(x+1, x, z)`: the minimal recurrence of `n -> p_k(n, m, x+1, x)`,
/// certified on held-out terms and on `n <= 2r + 10`.
pub fn charpoly(m: i64, k: i64) -> Result<CharCell> {
    check_cell(m, k)?;
    let expected = binomial(m, k).try_into().map_err(|_| Error::Resource("binomial too large".into()))?;
    charpoly_with(m, k, expected)
}

fn charpoly_with(m: i64, k: i64, expected: usize) -> Result<CharCell> {
    let first = attempt(m, k, expected + 2)?;
    let (result, escalated) = match first {
        Ok(found) => (Ok(found), false),
        Err(_) => (attempt(m, k, 2 * (expected + 2))?, true),
    };
    Ok(match result {
        Ok((c, sequence)) => {
            let order_without_zero = lower_order_without_zero(&sequence, c.order())?;
            CharCell { m, k, charpoly: Some(c), escalated, order_without_zero, sequence, failure: None }
        }
        Err((why, sequence)) => {
            CharCell { m, k, charpoly: None, escalated, order_without_zero: None, sequence, failure: Some(why) }
        }
    })
}

type Attempt = std::result::Result<(CharPoly, Vec<IntPoly>), (String, Vec<IntPoly>)>;

fn attempt(m: i64, k: i64, max_order: usize) -> Result<Attempt> {
    let (fit, held) = window(max_order - 2);
    let fit = fit.max(2 * max_order + 2);
    let seq = shifted_pk_table_row(m, k, fit + held)?;
    let c = match guess_recurrence(&seq[..fit], max_order)? {
        GuessOutcome::Found(c) => c,
        GuessOutcome::NotFound { reason, .. } => {
            return Ok(Err((format!("no recurrence of order <= {max_order}: {reason}"), seq)))
        }
    };
    let r = c.order();
    let seq = if seq.len() < 2 * r + 11 { shifted_pk_table_row(m, k, 2 * r + 11)? } else { seq };
    Ok(match c.first_violation(&seq) {
        None => Ok((c, seq)),
        Some(n) => Err((format!("the order-{r} guess fails on held-out term n={n}"), seq)),
    })
}

fn shifted_pk_table_row(m: i64, k: i64, count: usize) -> Result<Vec<IntPoly>> {
    let mut table = shifted_pk_table(m, count)?;
    Ok(table.swap_remove((k - 1) as usize))
}

fn lower_order_without_zero(seq: &[IntPoly], order: usize) -> Result<Option<usize>> {
    let tail = &seq[1..];
    let bound = (tail.len() - 2) / 2;
    Ok(match guess_recurrence(tail, bound.min(order))? {
        GuessOutcome::Found(c) if c.order() < order && c.annihilates(tail) => Some(c.order()),
        _ => None,
    })
}
