//! Polynomials in the shift operator `E`, acting on finite sequence tables.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::dense::{DensePoly, IntPoly};
use super::laurent::LaurentPoly;
use super::ring::Ring;

/// Sequence elements that can be multiplied by an operator coefficient.
pub trait ScaleBy<C> {
    fn scale_by(&self, c: &C) -> Self;
}

impl ScaleBy<BigInt> for BigInt {
    fn scale_by(&self, c: &BigInt) -> Self {
        self * c
    }
}

impl ScaleBy<BigInt> for IntPoly {
    fn scale_by(&self, c: &BigInt) -> Self {
        self.scale(c)
    }
}

impl ScaleBy<IntPoly> for IntPoly {
    fn scale_by(&self, c: &IntPoly) -> Self {
        self * c
    }
}

impl<R: Ring> ScaleBy<BigInt> for LaurentPoly<R> {
    fn scale_by(&self, c: &BigInt) -> Self {
        self.scale(&R::from_bigint(c))
    }
}

/// `sum_k c_k E^k` where `E^k f(n) = f(n + k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftOp<C> {
    terms: BTreeMap<u32, C>,
}

impl<C: Ring> ShiftOp<C> {
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, C)>) -> Self {
        let mut map: BTreeMap<u32, C> = BTreeMap::new();
        for (k, c) in terms {
            let e = map.entry(k).or_insert_with(C::zero);
            e.add_assign_ref(&c);
        }
        map.retain(|_, c| !c.is_zero());
        ShiftOp { terms: map }
    }

    pub fn from_poly(p: &DensePoly<C>) -> Self {
        Self::from_terms(p.terms().map(|(k, c)| (k as u32, c.clone())))
    }

    pub fn to_poly(&self, var: super::Var) -> DensePoly<C> {
        DensePoly::from_terms(var, self.terms.iter().map(|(&k, c)| (k as usize, c.clone())))
    }

    /// Highest power of `E`, or 0 for the zero operator.
    pub fn order(&self) -> u32 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &C)> {
        self.terms.iter()
    }

    /// Apply to `seq[0..]`; entry `n` of the result is `sum_k c_k seq[n + k]`.
    ///
    /// The result has `seq.len() - order` entries: only indices whose every
    /// shifted argument lies in the table.
    pub fn apply<S: Ring + ScaleBy<C>>(&self, seq: &[S]) -> Vec<S> {
        let ord = self.order() as usize;
        if seq.len() <= ord {
            return Vec::new();
        }
        (0..seq.len() - ord)
            .map(|n| {
                let mut acc = S::zero();
                for (&k, c) in &self.terms {
                    acc.add_assign_ref(&seq[n + k as usize].scale_by(c));
                }
                acc
            })
            .collect()
    }

    /// Index of the first entry where the operator does not annihilate `seq`.
    pub fn first_nonzero<S: Ring + ScaleBy<C>>(&self, seq: &[S]) -> Option<usize> {
        self.apply(seq).iter().position(|v| !v.is_zero())
    }
}
