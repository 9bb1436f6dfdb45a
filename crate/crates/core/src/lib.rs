//! Exact computation of K-invariants in S(g) ⊗ Λ(p) and U(g) ⊗ C(p) for
//! g = sl(3, C) and K = S(U(2) × U(1)), with verification suites for the
//! identities among them.
//!
//! All arithmetic is over arbitrary-precision rationals.

pub mod clifford;
pub mod enveloping;
pub mod invariants;
pub mod lie;
pub mod linear;
pub mod parse;
pub mod print;
pub mod report;
pub mod sparse;
pub mod suite;
pub mod sym;
pub mod ugcp;

pub use linear::{Combination, Scalar};
pub use parse::{parse_element, Context, Element, ParseError};
pub use report::VerificationReport;
pub use suite::{run_suite, Suite, SuiteConfig};
