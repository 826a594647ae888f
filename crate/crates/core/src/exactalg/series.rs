//! Power-series expansion of rational generating functions.

use super::ring::Ring;
use crate::error::{Error, Result};

/// First `count` coefficients of `numerator / denominator` as a power series.
///
/// Both arguments are coefficient lists in the expansion variable, lowest
/// degree first. The constant term of the denominator must be a unit of the
/// coefficient ring.
pub fn series_coeffs<R: Ring>(numerator: &[R], denominator: &[R], count: usize) -> Result<Vec<R>> {
    let lead = denominator.first().filter(|c| !c.is_zero()).ok_or_else(|| {
        Error::usage("series expansion needs a nonzero constant term in the denominator")
    })?;
    let inv = lead
        .unit_inverse()
        .ok_or_else(|| Error::usage(format!("denominator constant term {lead:?} is not invertible")))?;
    let mut out: Vec<R> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = numerator.get(k).cloned().unwrap_or_else(R::zero);
        for (j, d) in denominator.iter().enumerate().take(k + 1).skip(1) {
            if !d.is_zero() {
                let t = d.mul_ref(&out[k - j]);
                acc.sub_assign_ref(&t);
            }
        }
        out.push(acc.mul_ref(&inv));
    }
    Ok(out)
}
