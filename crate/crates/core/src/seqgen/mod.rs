//! Generators for every concrete sequence and polynomial family: floored
//! binomial arrays, the sums `a(n, i, l, m, z)`, Fibonacci/Lucas polynomials,
//! the `v`/`w` families, the auxiliary `r, s, b, c` polynomials and
//! strip-confined lattice paths.

mod asum;
mod binom;
mod families;
mod paths;

pub use asum::{a_closed_i1, a_sum, a_sum_at_minus_one};
pub use binom::{binom_floor, BinomArray};
pub use families::{
    bc_convolution, bc_poly, fib_lucas, fib_lucas_explicit, fib_lucas_sequence, rs_poly, rs_series, v_poly,
    v_poly_explicit, v_sequence, w_poly, w_poly_explicit, w_sequence, BcKind, FibKind, RsKind,
};
pub use paths::{
    compare_formula, enumerate_paths, list_paths, pathweight_formula, FormulaComparison, PathSet, Step, WeightPoly,
    DEFAULT_PATH_CAP,
};
