//! Minimal recurrences of `n -> p_k(n, m, x+1, x)` over `Q(x)`, their
//! factorization into the `v`-factors and machine checks of the conjectured
//! structure.

mod bm;
mod cell;
mod charpoly;
mod guess;
mod peel;
mod scan;

pub use bm::berlekamp_massey;
pub use cell::{charpoly, shifted_pk_table, CharCell};
pub use charpoly::{duality_transform, CharPoly, Normalization};
pub use guess::{guess_recurrence, guess_recurrence_ratfunc, GuessOutcome};
pub use peel::{extract_v_factors, peel, product, v_high, v_low, Peeling};
pub use scan::{conjecture_scan, markdown_report, Clause, ConjectureReport, ScanOptions};
