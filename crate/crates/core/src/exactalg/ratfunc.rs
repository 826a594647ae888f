//! Reduced quotients of integer polynomials: the field `Q(x)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::dense::IntPoly;
use super::ring::{Field, GcdDomain, Ring};
use super::var::Var;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `lc(den) > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::usage("rational function with zero denominator"));
        }
        let var = if num.is_constant() { den.var() } else { num.var() };
        if !num.is_constant() && !den.is_constant() && num.var() != den.var() {
            return Err(Error::VariableMismatch(num.var(), den.var()));
        }
        if num.is_zero() {
            return Ok(RatFunc { num: IntPoly::zero_in(var), den: IntPoly::constant(var, BigInt::from(1)) });
        }
        let g = num.gcd(&den);
        let mut n = num.exact_quotient(&g).expect("gcd divides numerator").with_var(var);
        let mut d = den.exact_quotient(&g).expect("gcd divides denominator").with_var(var);
        if d.leading().is_some_and(|c| c.is_negative()) {
            n = -n;
            d = -d;
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        let var = p.var();
        RatFunc { num: p, den: IntPoly::constant(var, BigInt::from(1)) }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant() && self.den.coeff(0) == BigInt::from(1)
    }

    fn make(num: IntPoly, den: IntPoly) -> Self {
        RatFunc::new(num, den).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(IntPoly::zero_in(Var::X))
    }
    fn one() -> Self {
        RatFunc::from_poly(IntPoly::constant(Var::X, BigInt::from(1)))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::make(&self.num + &rhs.num, self.den.clone());
        }
        Self::make(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Self::make(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn neg_ref(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
    fn from_bigint(n: &BigInt) -> Self {
        RatFunc::from_poly(IntPoly::constant(Var::X, n.clone()))
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::make(self.den.clone(), self.num.clone()))
        }
    }
}

impl Field for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(Var::X, c)
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        // (x^2 - 1) / (-(x - 1)) = -(x + 1)
        let r = RatFunc::new(xp(&[-1, 0, 1]), xp(&[1, -1])).unwrap();
        assert_eq!(r.numer(), &xp(&[-1, -1]));
        assert_eq!(r.denom(), &xp(&[1]));
        assert!(RatFunc::new(xp(&[1]), IntPoly::zero_in(Var::X)).is_err());
    }

    #[test]
    fn field_inverse() {
        let r = RatFunc::new(xp(&[2, 1]), xp(&[0, 3])).unwrap();
        let prod = r.mul_ref(&r.inv().unwrap());
        assert!(prod.is_one());
        let sum = r.add_ref(&r.neg_ref());
        assert!(sum.is_zero());
    }
}
