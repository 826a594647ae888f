//! Dense univariate polynomials over an arbitrary coefficient ring.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::ring::{Field, GcdDomain, Ring};
use super::var::Var;
use crate::error::{Error, Result};

/// A univariate polynomial `sum coeffs[i] * var^i`.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has no degree. The variable label only matters for
/// non-constant polynomials: constants combine with anything.
#[derive(Clone, Debug)]
pub struct DensePoly<R> {
    var: Var,
    coeffs: Vec<R>,
}

/// Integer polynomial in one variable.
pub type IntPoly = DensePoly<BigInt>;

impl<R: Ring> PartialEq for DensePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.coeffs.len() <= 1 || self.var == other.var)
    }
}

impl<R: Ring> Eq for DensePoly<R> where R: Eq {}

impl<R: Ring> DensePoly<R> {
    pub fn new(var: Var, coeffs: Vec<R>) -> Self {
        let mut p = DensePoly { var, coeffs };
        p.trim();
        p
    }

    pub fn zero_in(var: Var) -> Self {
        DensePoly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: R) -> Self {
        Self::new(var, vec![c])
    }

    pub fn monomial(var: Var, c: R, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero_in(var);
        }
        let mut coeffs = vec![R::zero(); exp + 1];
        coeffs[exp] = c;
        DensePoly { var, coeffs }
    }

    /// The polynomial `var`.
    pub fn variable(var: Var) -> Self {
        Self::monomial(var, R::one(), 1)
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (usize, R)>) -> Self {
        let mut coeffs: Vec<R> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, R::zero());
            }
            coeffs[e].add_assign_ref(&c);
        }
        Self::new(var, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, exp: usize) -> R {
        self.coeffs.get(exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(exponent, coefficient)` in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &R)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn join_var(&self, other: &Self) -> Result<Var> {
        match (self.is_constant(), other.is_constant()) {
            (false, false) if self.var != other.var => Err(Error::VariableMismatch(self.var, other.var)),
            (true, false) => Ok(other.var),
            _ => Ok(self.var),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let var = self.join_var(other)?;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            c.add_assign_ref(s);
        }
        Ok(Self::new(var, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let var = self.join_var(other)?;
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < other.coeffs.len() {
            coeffs.resize(other.coeffs.len(), R::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&other.coeffs) {
            c.sub_assign_ref(s);
        }
        Ok(Self::new(var, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let var = self.join_var(other)?;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(Self::zero_in(var));
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].mul_acc(a, b);
            }
        }
        Ok(Self::new(var, coeffs))
    }

    pub fn neg(&self) -> Self {
        DensePoly { var: self.var, coeffs: self.coeffs.iter().map(R::neg_ref).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiply by `var^exp`.
    pub fn shift_up(&self, exp: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); exp];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { var: self.var, coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(self.var, R::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluate at a point of the coefficient ring (Horner).
    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at);
            acc.add_assign_ref(c);
        }
        acc
    }

    /// Evaluate in any ring the coefficients map into.
    pub fn eval_in<S: Ring>(&self, at: &S, embed: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at);
            acc.add_assign_ref(&embed(c));
        }
        acc
    }

    /// `p(var + a)` by repeated synthetic division (Taylor shift).
    pub fn taylor_shift(&self, a: &R) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].mul_ref(a);
                c[j].add_assign_ref(&t);
            }
        }
        Self::new(self.var, c)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> DensePoly<S> {
        DensePoly::new(self.var, self.coeffs.iter().map(f).collect())
    }

    /// `p(var)^rev = var^d p(1/var)` with `d` the given target degree.
    pub fn reverse(&self, d: usize) -> Self {
        assert!(self.coeffs.len() <= d + 1, "reverse: degree exceeds target");
        let mut coeffs = vec![R::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Self::new(self.var, coeffs)
    }

    /// Pseudo-remainder: `lc(d)^k * self = q * d + r` with `deg r < deg d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let lc = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let off = top - dd;
            for c in r.iter_mut() {
                *c = c.mul_ref(&lc);
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = lr.mul_ref(dc);
                r[off + i].sub_assign_ref(&t);
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::new(self.var, r)
    }
}

impl<R: Field> DensePoly<R> {
    /// Euclidean division over a field.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = r[top].mul_ref(&inv);
            let off = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = f.mul_ref(dc);
                r[off + i].sub_assign_ref(&t);
            }
            q[off] = f;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Some((Self::new(self.var, q), Self::new(self.var, r)))
    }

    /// Scale so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }
}

impl<R: GcdDomain> DensePoly<R> {
    /// Gcd of the coefficients.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        let p = self.map_coeffs(|a| a.exact_div(&c).expect("content divides every coefficient"));
        p.normalized_assoc()
    }

    fn normalized_assoc(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let unit = lc.normalized().exact_div(lc).expect("associates differ by a unit");
                if unit.is_one() {
                    self.clone()
                } else {
                    self.scale(&unit)
                }
            }
        }
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn exact_quotient(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        if r.is_empty() {
            return Some(Self::zero_in(self.var));
        }
        if r.len() <= dd {
            return None;
        }
        let mut q = vec![R::zero(); r.len() - dd];
        while r.len() > dd {
            let top = r.len() - 1;
            let f = r[top].exact_div(lc)?;
            let off = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = f.mul_ref(dc);
                r[off + i].sub_assign_ref(&t);
            }
            q[off] = f;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        if r.is_empty() {
            Some(Self::new(self.var, q))
        } else {
            None
        }
    }

    /// Gcd by the primitive polynomial-remainder sequence.
    ///
    /// The result is primitive up to the gcd of the contents and its leading
    /// coefficient is in canonical form.
    pub fn primitive_gcd(&self, other: &Self) -> Result<Self> {
        let var = self.join_var(other)?;
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return Err(Error::usage("gcd of two zero polynomials"));
        }
        if self.coeffs.is_empty() {
            return Ok(other.normalized_assoc().with_var(var));
        }
        if other.coeffs.is_empty() {
            return Ok(self.normalized_assoc().with_var(var));
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.coeffs.is_empty() {
                break;
            }
            a = b;
            b = r.primitive_part();
        }
        Ok(b.scale(&c).normalized_assoc().with_var(var))
    }
}

impl<R: Ring> Ring for DensePoly<R> {
    fn zero() -> Self {
        Self::zero_in(Var::X)
    }
    fn one() -> Self {
        Self::constant(Var::X, R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
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
        DensePoly::neg(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(Var::X, R::from_bigint(n))
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].unit_inverse().map(|c| Self::constant(self.var, c))
        } else {
            None
        }
    }
}

impl<R: GcdDomain> GcdDomain for DensePoly<R> {
    fn gcd(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return self.clone();
        }
        self.primitive_gcd(other).expect("gcd operands share a variable")
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.exact_quotient(divisor)
    }
    fn normalized(&self) -> Self {
        self.normalized_assoc()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<R: Ring> $tr<&DensePoly<R>> for &DensePoly<R> {
            type Output = DensePoly<R>;
            fn $method(self, rhs: &DensePoly<R>) -> DensePoly<R> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<R: Ring> $tr for DensePoly<R> {
            type Output = DensePoly<R>;
            fn $method(self, rhs: DensePoly<R>) -> DensePoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<R: Ring> Neg for DensePoly<R> {
    type Output = DensePoly<R>;
    fn neg(self) -> DensePoly<R> {
        DensePoly::neg(&self)
    }
}

impl<R: Ring> Neg for &DensePoly<R> {
    type Output = DensePoly<R>;
    fn neg(self) -> DensePoly<R> {
        DensePoly::neg(self)
    }
}

impl IntPoly {
    /// Shorthand for tests and tables: coefficients in ascending order.
    pub fn from_i64s(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(Var::X, c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&xp(&[1, 1]) * &xp(&[-1, 1]), xp(&[-1, 0, 1]));
    }

    #[test]
    fn zero_annihilates() {
        let p = xp(&[3, 0, -2, 7]);
        let z = IntPoly::zero_in(Var::X);
        assert!((&z * &p).is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = xp(&[0, 1]);
        let b = IntPoly::from_i64s(Var::Z, &[0, 1]);
        assert_eq!(a.checked_add(&b), Err(Error::VariableMismatch(Var::X, Var::Z)));
        // constants combine with anything
        let c = IntPoly::from_i64s(Var::Z, &[5]);
        assert_eq!(a.checked_add(&c).unwrap(), xp(&[5, 1]));
    }

    #[test]
    fn taylor_shift_matches_composition() {
        let p = xp(&[1, -3, 0, 2]);
        let shifted = p.taylor_shift(&BigInt::from(1));
        let xp1 = xp(&[1, 1]);
        let composed = p.eval_in(&xp1, |c| IntPoly::constant(Var::X, c.clone()));
        assert_eq!(shifted, composed);
    }

    #[test]
    fn gcd_of_products() {
        let a = &xp(&[-1, 1]) * &xp(&[2, 1]);
        let b = &xp(&[-1, 1]) * &xp(&[3, 1]);
        assert_eq!(a.primitive_gcd(&b).unwrap(), xp(&[-1, 1]));
        let a6 = a.scale(&BigInt::from(-6));
        let b4 = b.scale(&BigInt::from(4));
        assert_eq!(a6.primitive_gcd(&b4).unwrap(), xp(&[-2, 2]));
        assert!(IntPoly::zero_in(Var::X).primitive_gcd(&IntPoly::zero_in(Var::X)).is_err());
    }

    #[test]
    fn exact_quotient_detects_remainders() {
        let a = &xp(&[-1, 1]) * &xp(&[2, 0, 1]);
        assert_eq!(a.exact_quotient(&xp(&[-1, 1])), Some(xp(&[2, 0, 1])));
        assert_eq!(a.exact_quotient(&xp(&[1, 1])), None);
        assert_eq!(a.exact_quotient(&xp(&[0, 2])), None);
    }
}
