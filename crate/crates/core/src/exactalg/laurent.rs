//! Laurent polynomials over an exact coefficient ring.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::dense::DensePoly;
use super::ring::Ring;
use super::var::Var;
use crate::error::{Error, Result};

/// Finite sum `sum c_e var^e` with `e` ranging over all integers.
#[derive(Clone, Debug)]
pub struct LaurentPoly<R> {
    var: Var,
    terms: BTreeMap<i64, R>,
}

impl<R: Ring> PartialEq for LaurentPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        let is_const = |p: &Self| p.terms.keys().all(|&e| e == 0);
        self.terms == other.terms && (is_const(self) || self.var == other.var)
    }
}

impl<R: Ring> LaurentPoly<R> {
    pub fn zero_in(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn monomial(var: Var, c: R, exp: i64) -> Self {
        let mut p = Self::zero_in(var);
        p.add_term(exp, c);
        p
    }

    pub fn constant(var: Var, c: R) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut p = Self::zero_in(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_dense(p: &DensePoly<R>) -> Self {
        Self::from_terms(p.var(), p.terms().map(|(e, c)| (e as i64, c.clone())))
    }

    pub fn add_term(&mut self, exp: i64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                v.add_assign_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeff(&self, exp: i64) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &R)> {
        self.terms.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn join_var(&self, other: &Self) -> Result<Var> {
        let nonconst = |p: &Self| p.terms.keys().any(|&e| e != 0);
        match (nonconst(self), nonconst(other)) {
            (true, true) if self.var != other.var => Err(Error::VariableMismatch(self.var, other.var)),
            (false, true) => Ok(other.var),
            _ => Ok(self.var),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let var = self.join_var(other)?;
        let mut out = self.clone();
        out.var = var;
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let var = self.join_var(other)?;
        let mut out = Self::zero_in(var);
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    /// Multiply by `var^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (e + exp, c.clone())).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(e, v)| (*e, v.mul_ref(c))))
    }

    /// Evaluate at a unit of the coefficient ring.
    pub fn eval_at_unit(&self, at: &R) -> Option<R> {
        let inv = at.unit_inverse()?;
        let mut acc = R::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 { at.pow(e as u32) } else { inv.pow((-e) as u32) };
            acc.add_assign_ref(&c.mul_ref(&p));
        }
        Some(acc)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_terms(self.var, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(self.var, R::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<R: Ring> Ring for LaurentPoly<R> {
    fn zero() -> Self {
        Self::zero_in(Var::Z)
    }
    fn one() -> Self {
        Self::constant(Var::Z, R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (*e, c.neg_ref())).collect() }
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(Var::Z, R::from_bigint(n))
    }
    /// Units are monomials with a unit coefficient.
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        c.unit_inverse().map(|ci| Self::monomial(self.var, ci, -e))
    }
}

macro_rules! laurent_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<R: Ring> $tr<&LaurentPoly<R>> for &LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<R: Ring> $tr for LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: LaurentPoly<R>) -> LaurentPoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

laurent_binop!(Add, add, checked_add);
laurent_binop!(Sub, sub, checked_sub);
laurent_binop!(Mul, mul, checked_mul);

impl<R: Ring> Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        self.neg_ref()
    }
}

impl<R: Ring> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_monomials() {
        let z = LaurentPoly::monomial(Var::Z, BigInt::from(1), 1);
        let zi = z.unit_inverse().unwrap();
        assert!((&z * &zi).is_one());
        let two_z = LaurentPoly::monomial(Var::Z, BigInt::from(2), 1);
        assert!(two_z.unit_inverse().is_none());
    }

    #[test]
    fn evaluate_at_minus_one() {
        let p = LaurentPoly::from_terms(Var::Z, [(-2, BigInt::from(1)), (1, BigInt::from(3)), (0, BigInt::from(2))]);
        assert_eq!(p.eval_at_unit(&BigInt::from(-1)), Some(BigInt::from(0)));
    }
}
