use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exactalg::{DensePoly, GcdDomain, IntPoly, JsonPoly, NestedPoly, PolyJson, RatFunc, Ring, ShiftOp, Var};

/// What was divided out to reach the canonical form.
#[derive(Clone, Debug, PartialEq)]
pub struct Normalization {
    /// The content removed (as a polynomial in `x`, sign included).
    pub content: IntPoly,
    /// Leading `z`-coefficient of the input, before any scaling.
    pub original_leading: RatFunc,
}

/// A polynomial in `z` with integer-polynomial coefficients in `x`, kept
/// primitive with a positive leading `x`-coefficient on the leading
/// `z`-coefficient.
#[derive(Clone, Debug)]
pub struct CharPoly {
    poly: NestedPoly,
    normalization: Normalization,
}

impl PartialEq for CharPoly {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

fn one_x() -> IntPoly {
    IntPoly::constant(Var::X, BigInt::from(1))
}

impl CharPoly {
    /// Canonical form of a nonzero polynomial.
    pub fn from_nested(p: &NestedPoly) -> Self {
        assert!(!p.is_zero(), "characteristic polynomial must be nonzero");
        let lead = p.leading().expect("nonzero").clone();
        let prim = p.primitive_part().with_var(Var::Z);
        let new_lead = prim.leading().expect("nonzero").clone();
        let content = lead.exact_quotient(&new_lead).expect("content divides the leading coefficient");
        CharPoly { poly: prim, normalization: Normalization { content, original_leading: RatFunc::from_poly(lead) } }
    }

    /// Canonical form of a polynomial whose coefficients are rational functions.
    pub fn from_ratfunc_coeffs(coeffs: &[RatFunc]) -> Self {
        let mut lcm = one_x();
        for c in coeffs {
            let g = lcm.gcd(c.denom());
            lcm = &lcm * &c.denom().exact_quotient(&g).expect("gcd divides");
        }
        let ints: Vec<IntPoly> = coeffs
            .iter()
            .map(|c| c.numer() * &lcm.exact_quotient(c.denom()).expect("denominator divides the lcm"))
            .collect();
        let mut out = Self::from_nested(&DensePoly::new(Var::Z, ints));
        if let Some(l) = coeffs.iter().rev().find(|c| !c.is_zero()) {
            out.normalization.original_leading = l.clone();
        }
        out
    }

    pub fn poly(&self) -> &NestedPoly {
        &self.poly
    }

    pub fn normalization(&self) -> &Normalization {
        &self.normalization
    }

    pub fn order(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// Coefficients divided by the leading one, lowest power of `z` first.
    pub fn monic_view(&self) -> Vec<RatFunc> {
        let lead = self.poly.leading().expect("nonzero").clone();
        self.poly
            .coeffs()
            .iter()
            .map(|c| RatFunc::new(c.clone(), lead.clone()).expect("nonzero leading coefficient"))
            .collect()
    }

    pub fn is_monic(&self) -> bool {
        self.poly.leading().is_some_and(|c| c.is_one())
    }

    /// First index `n` where `c(E) seq` does not vanish, if any.
    pub fn first_violation(&self, seq: &[IntPoly]) -> Option<usize> {
        ShiftOp::from_poly(&self.poly).first_nonzero(seq)
    }

    pub fn annihilates(&self, seq: &[IntPoly]) -> bool {
        self.first_violation(seq).is_none()
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        CharPoly::from_nested(&(&self.poly * &other.poly))
    }

    /// `self / other` when `other` divides exactly.
    pub fn div_exact(&self, other: &CharPoly) -> Option<CharPoly> {
        self.poly.exact_quotient(&other.poly).map(|q| CharPoly::from_nested(&q))
    }

    pub fn gcd(&self, other: &CharPoly) -> Result<CharPoly> {
        Ok(CharPoly::from_nested(&self.poly.primitive_gcd(&other.poly)?))
    }

    /// `z + c x` style helper: the polynomial `z - r` for `r` in `Z[x]`.
    pub fn linear(root: IntPoly) -> CharPoly {
        CharPoly::from_nested(&DensePoly::new(Var::Z, vec![-root, one_x()]))
    }

    pub fn to_json(&self) -> PolyJson {
        self.poly.to_json()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl std::str::FromStr for CharPoly {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        let p = crate::exactalg::parse_poly(s)?.into_nested(Var::Z, Var::X)?;
        if p.is_zero() {
            return Err(crate::error::Error::usage("characteristic polynomial must be nonzero"));
        }
        Ok(CharPoly::from_nested(&p))
    }
}

/// Substitute `z -> (-1)^m x / z`, clear the denominator and normalize.
pub fn duality_transform(c: &CharPoly, m: i64) -> CharPoly {
    let d = c.order();
    let mut coeffs = vec![IntPoly::zero_in(Var::X); d + 1];
    for (j, a) in c.poly.terms() {
        let factor = IntPoly::monomial(Var::X, BigInt::sign_pow(m * j as i64), j);
        coeffs[d - j] = a * &factor;
    }
    CharPoly::from_nested(&DensePoly::new(Var::Z, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(s: &str) -> CharPoly {
        s.parse().unwrap()
    }

    #[test]
    fn normalization_makes_primitive() {
        let c = cp("-2*x*z^2 + 2*x*z");
        assert_eq!(c, cp("z^2 - z"));
        assert_eq!(c.normalization().content, "-2*x".parse().unwrap());
        assert!(c.is_monic());
    }

    #[test]
    fn duality_examples() {
        let c21 = cp("(z - 1)*(z - x)");
        assert_eq!(duality_transform(&c21, 2), c21);
        assert_eq!(duality_transform(&cp("z - 1"), 2), cp("z - x"));
        let c51 = cp("z^5 - (1+x)*z^4 + x");
        let c54 = cp("z^5 - (1+x)*x^3*z - x^4");
        assert_eq!(duality_transform(&c51, 5), c54);
        assert_eq!(duality_transform(&c54, 5), c51);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(cp("z^5 - (1+x)*x^3*z - x^4").to_string(), "z^5 - (x^4 + x^3)*z - x^4");
    }

    #[test]
    fn division_and_gcd() {
        let a = cp("z^4 - x*z^3 - x*z^2 - x*z - x");
        let c51 = cp("z^5 - (1+x)*z^4 + x");
        assert_eq!(c51.div_exact(&cp("z - 1")).unwrap(), a);
        assert!(c51.div_exact(&cp("z + 1")).is_none());
        let c52 = cp("z^10 - x*(1+x)*z^7 - x*(1+x)^3*z^6 - 2*x^2*z^5 - x^2*(1+x)^2*z^4 + x^3*(1+x)*z^2 + x^4");
        assert_eq!(c51.gcd(&c52).unwrap(), a);
    }
}
