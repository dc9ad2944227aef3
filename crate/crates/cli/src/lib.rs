//! Command-line front end for the fixed-locus and multiplicity computations, and the
//! verification suites behind `hilbfix verify` and the acceptance tests.

pub mod descriptor;
pub mod output;
pub mod suites;

pub use suites::{Check, SuiteReport};
