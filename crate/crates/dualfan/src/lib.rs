//! Exact dual fans, toric Landau-Ginzburg models and the mirror pipelines
//! built on them.
//!
//! Everything is computed over arbitrary-precision integers and rationals.
//! The crate is layered bottom-up: [`lattice`] (normal forms, kernels,
//! cokernels, finite groups), [`polyhedra`] (cones and polytopes), [`fans`],
//! [`toric_lg`] (divisors, bundle fans, LG data) and [`mirrors`] (the
//! quintic, BHK, Batyrev-Borisov and Givental/Hori-Vafa pipelines).

pub mod error;
pub mod fans;
pub mod fixtures;
pub mod lattice;
pub mod mirrors;
pub mod poly;
pub mod polyhedra;
pub mod toric_lg;

pub use error::{Error, Result};

/// Scalar used for every lattice coordinate.
pub type Int = num_bigint::BigInt;
/// Normalized rational (lowest terms, positive denominator).
pub type Rat = num_rational::BigRational;
/// Integer vector in a lattice or its dual.
pub type IntVec = Vec<Int>;
/// Rational vector.
pub type RatVec = Vec<Rat>;

/// Convenience conversion used pervasively in fixtures and tests.
pub fn ivec(xs: &[i64]) -> IntVec {
    xs.iter().map(|&x| Int::from(x)).collect()
}

/// Converts a list of `i64` rows.
pub fn ivecs(rows: &[&[i64]]) -> Vec<IntVec> {
    rows.iter().map(|r| ivec(r)).collect()
}

/// Builds a rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}
