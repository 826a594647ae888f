//! Exact arithmetic kernel: integers, polynomials, Laurent polynomials,
//! rational functions, gcds and power-series expansion.

mod bipoly;
mod dense;
mod json;
mod laurent;
mod ratfunc;
mod ring;
mod series;
mod shift;
mod text;
mod var;

pub use bipoly::BiPoly;
pub use dense::{DensePoly, IntPoly};
pub use json::{JsonPoly, PolyJson};
pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;
pub use ring::{binomial, Field, GcdDomain, Ring};
pub use series::series_coeffs;
pub use shift::{ScaleBy, ShiftOp};
pub use text::{parse_poly, CoefParts, ParsedPoly, TermCoef};
pub use var::Var;

/// Polynomial in `z` (or `E`) whose coefficients are integer polynomials in
/// another variable.
pub type NestedPoly = DensePoly<IntPoly>;

/// `p(x + 1, x)` as a univariate polynomial in `x`.
pub fn substitute(p: &BiPoly) -> IntPoly {
    p.substitute_shifted()
}

/// Integer floor division, rounding toward minus infinity.
pub fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

/// Integer ceiling division.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}
