//! Exact arithmetic for the weighted Fibonacci sums `sum i^p F_i` and the
//! convolutions `sum i^p F_{n-i}`.
//!
//! The crate builds the coefficient sequences `A_k`, `B_k` from short
//! binomial recursions, turns them into closed forms, and checks those
//! forms (and a collection of classical identities for `A_k`, `B_k`)
//! against brute-force evaluation. All arithmetic is exact.

pub mod arith;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod extensions;
pub mod identities;
pub mod sequences;

pub use arith::{ExactInt, ExactRat, IntPoly, RatSeries};
pub use closed_form::{
    brousseau_closed, brute_convolution, brute_sum, convolution_closed, eval_closed,
    summand_coeffs, ClosedForm, CoeffTable, FormKind, TableMethod,
};
pub use error::{Error, Result};
pub use sequences::RecurrenceSpec;
