//! Gröbner-basis engine for equivariant multiplicities of punctual and
//! separated fixed points in the Hilbert scheme of two points.

pub mod cases;
pub mod expected;
pub mod graded;
pub mod groebner;
pub mod linalg;
pub mod mpoly;
pub mod oracle;

pub use cases::{build_theta_ideal, case_for_multipartition, CaseSpec, Chart, LocalPoint};
pub use graded::{equivariant_mult_hilb2, equivariant_mult_with, Hilb2Options, Hilb2Result};
