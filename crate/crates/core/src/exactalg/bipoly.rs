//! Sparse integer polynomials in `x` and `s`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::dense::IntPoly;
use super::ring::{binomial, Ring};
use super::var::Var;

/// Sparse polynomial in `(x, s)` keyed by `(x-exponent, s-exponent)`.
///
/// No zero coefficient is ever stored, so structural equality of the maps is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: impl Into<BigInt>, xe: u32, se: u32) -> Self {
        let mut p = BiPoly::default();
        p.add_term(c.into(), xe, se);
        p
    }

    pub fn x() -> Self {
        Self::term(1, 1, 0)
    }

    pub fn s() -> Self {
        Self::term(1, 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, BigInt)>) -> Self {
        let mut p = BiPoly::default();
        for (xe, se, c) in terms {
            p.add_term(c, xe, se);
        }
        p
    }

    /// Add `c * x^xe * s^se` in place.
    pub fn add_term(&mut self, c: BigInt, xe: u32, se: u32) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((xe, se)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(xe, se));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, xe: u32, se: u32) -> BigInt {
        self.terms.get(&(xe, se)).cloned().unwrap_or_default()
    }

    /// Terms as `((x-exp, s-exp), coefficient)` in ascending key order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// Smallest and largest `s`-exponent present.
    pub fn s_range(&self) -> Option<(u32, u32)> {
        let lo = self.terms.keys().map(|k| k.1).min()?;
        let hi = self.terms.keys().map(|k| k.1).max()?;
        Some((lo, hi))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Multiply by `x^xe s^se`.
    pub fn shift(&self, xe: u32, se: u32) -> Self {
        BiPoly { terms: self.terms.iter().map(|(k, v)| ((k.0 + xe, k.1 + se), v.clone())).collect() }
    }

    /// Evaluate with `x -> xv`, `s -> sv` in any ring.
    pub fn eval_in<R: Ring>(&self, xv: &R, sv: &R) -> R {
        let mut xpow: Vec<R> = vec![R::one()];
        let mut spow: Vec<R> = vec![R::one()];
        let mut acc = R::zero();
        for (&(xe, se), c) in &self.terms {
            while xpow.len() <= xe as usize {
                let next = xpow.last().unwrap().mul_ref(xv);
                xpow.push(next);
            }
            while spow.len() <= se as usize {
                let next = spow.last().unwrap().mul_ref(sv);
                spow.push(next);
            }
            let mono = xpow[xe as usize].mul_ref(&spow[se as usize]);
            acc.add_assign_ref(&mono.mul_ref(&R::from_bigint(c)));
        }
        acc
    }

    /// Specialize `s` to an integer, leaving a polynomial in `x`.
    pub fn at_s(&self, sv: &BigInt) -> IntPoly {
        IntPoly::from_terms(
            Var::X,
            self.terms.iter().map(|(&(xe, se), c)| (xe as usize, c * Ring::pow(sv, se))),
        )
    }

    /// Replace `s` by `c * s`.
    pub fn scale_s(&self, c: &BigInt) -> Self {
        BiPoly::from_terms(self.terms.iter().map(|(&(xe, se), v)| (xe, se, v * Ring::pow(c, se))))
    }

    /// The univariate polynomial `p(x + 1, x)`.
    ///
    /// Each term `c x^a s^b` becomes `c (x+1)^a x^b`, expanded binomially.
    pub fn substitute_shifted(&self) -> IntPoly {
        let deg = self.terms.keys().map(|&(a, b)| (a + b) as usize).max().unwrap_or(0);
        let mut out = vec![BigInt::zero(); deg + 1];
        let mut row_cache: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            let row = row_cache
                .entry(a)
                .or_insert_with(|| (0..=a as i64).map(|i| binomial(a as i64, i)).collect());
            for (i, bin) in row.iter().enumerate() {
                out[i + b as usize] += c * bin;
            }
        }
        IntPoly::new(Var::X, out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Ring::pow(self, exp)
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }
    fn one() -> Self {
        BiPoly::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(xe, se), c) in &rhs.terms {
            out.add_term(c.clone(), xe, se);
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(xe, se), c) in &rhs.terms {
            out.add_term(-c, xe, se);
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut acc: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                *acc.entry((a1 + a2, b1 + b2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        BiPoly { terms: acc }
    }
    fn neg_ref(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
    fn from_bigint(n: &BigInt) -> Self {
        BiPoly::constant(n.clone())
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.terms.get(&(0, 0)) {
            Some(c) if self.terms.len() == 1 && c.abs().is_one() => Some(self.clone()),
            _ => None,
        }
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (&(xe, se), c) in &rhs.terms {
            self.add_term(c.clone(), xe, se);
        }
    }
}

macro_rules! bipoly_binop {
    ($tr:ident, $method:ident, $ring:ident) => {
        impl $tr<&BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                Ring::$ring(self, rhs)
            }
        }
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                Ring::$ring(&self, &rhs)
            }
        }
    };
}

bipoly_binop!(Add, add, add_ref);
bipoly_binop!(Sub, sub, sub_ref);
bipoly_binop!(Mul, mul, mul_ref);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.neg_ref()
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_cancels_terms() {
        let a = BiPoly::term(1, 2, 0) - BiPoly::term(2, 0, 1);
        let b = BiPoly::term(2, 0, 1);
        assert_eq!(a + b, BiPoly::term(1, 2, 0));
    }

    #[test]
    fn substitute_lucas_five() {
        // x^5 - 5x^3 s + 5x s^2 at (x+1, x)
        let p = BiPoly::from_terms([
            (5, 0, BigInt::from(1)),
            (3, 1, BigInt::from(-5)),
            (1, 2, BigInt::from(5)),
        ]);
        assert_eq!(p.substitute_shifted(), IntPoly::from_i64s(Var::X, &[1, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn substitute_constant_and_square() {
        assert_eq!(BiPoly::constant(7).substitute_shifted(), IntPoly::from_i64s(Var::X, &[7]));
        let d = BiPoly::x() - BiPoly::s();
        assert_eq!((&d * &d).substitute_shifted(), IntPoly::from_i64s(Var::X, &[1]));
    }

    #[test]
    fn eval_in_matches_substitution() {
        let p = BiPoly::from_terms([(3, 1, BigInt::from(2)), (0, 2, BigInt::from(-1)), (1, 0, BigInt::from(4))]);
        let xv = IntPoly::from_i64s(Var::X, &[1, 1]);
        let sv = IntPoly::from_i64s(Var::X, &[0, 1]);
        assert_eq!(p.eval_in(&xv, &sv), p.substitute_shifted());
    }
}
