//! Exact computation and verification of recurrences for floored binomial
//! sums `a(n, i, l, m, z) = sum_k C(n, floor((n + i k + l) / m)) z^k`.
//!
//! The crate is organized bottom-up:
//!
//! * [`exactalg`] is the exact arithmetic kernel.
//! * [`seqgen`] generates the binomial arrays, the sums themselves, the
//!   Fibonacci/Lucas families and strip-confined lattice paths.
//! * [`recurrence`] computes the recurrence polynomials `p_k(n, m, x, s)`
//!   by a Newton-identity recursion and checks them against an independent
//!   linear-system oracle.
//! * [`charlab`] guesses minimal recurrences of `p_k(n, m, x + 1, x)` over
//!   `Q(x)` and tests the conjectured factorization pattern.
//! * [`verify`] bundles named, reproducible checks.

pub mod charlab;
pub mod error;
pub mod exactalg;
pub mod recurrence;
pub mod seqgen;
pub mod verify;

pub use error::{Error, Result};
