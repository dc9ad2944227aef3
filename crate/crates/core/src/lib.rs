//! Exact combinatorics of torus-fixed loci on Hilbert schemes of points of the
//! 2-dimensional integrable systems: surface catalog, multipartitions,
//! closed-form multiplicities and mirror pairing numerics.

pub mod exactalg;
pub mod hilb;
pub mod mirror;
pub mod partitions;
pub mod surfaces;
