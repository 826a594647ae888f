//! Named acceptance checks that tie the other modules together.

mod gf;
mod oeis;
mod paths;
mod result;
mod schur;
mod suite;

pub use gf::{gf_check, gf_expand, GfFamily};
pub use oeis::{oeis_prefix, OeisId, OEIS_OFFSET_NOTE};
pub use paths::{
    path_operator, path_operator_at_one, pathweight_formula_report, pathweight_recurrence_check,
    pathweight_values_check,
};
pub use result::{CheckResult, Status, Witness};
pub use schur::{fibonacci_numbers, schur_fibonacci_check};
pub use suite::{
    closed_forms_check, laurent_check, markdown_summary, master_check, oracle_check, p2m4_check, roots_check,
    run_suite, shift_check, SuiteOptions, CHECK_NAMES,
};
