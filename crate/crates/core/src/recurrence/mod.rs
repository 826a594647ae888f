//! The polynomials `p_k(n, m, x, s)` that drive the recurrences for the
//! floored binomial sums: the Newton power-sum recursion, an independent
//! linear-system oracle, closed forms and the operator identities they obey.

mod identities;
mod newton;
mod oracle;
mod pk;

pub use identities::{check_laurent_identity_8, check_master_identity, check_shift_identity, roots_of_unity_check};
pub use newton::{b_coefs, d_coef, power_sum, NewtonTable};
pub use oracle::pk_oracle;
pub use pk::{assemble_pk, master_sign, p2_m4, p2_m4_series, pk_closed, PkFamily, Provenance};
