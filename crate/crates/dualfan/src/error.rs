use thiserror::Error;

use crate::IntVec;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("cone has lineality (rank {0}); faces need a strongly convex cone")]
    HasLineality(usize),

    #[error("polytope is unbounded")]
    Unbounded,

    #[error("polar undefined: origin is not an interior point")]
    PolarUndefined,

    #[error("polytope is not full dimensional (dimension {dim} in rank {rank})")]
    NotFullDimensional { dim: usize, rank: usize },

    #[error("fan is not complete")]
    NotComplete,

    #[error("quotient not a fan: {0}")]
    QuotientNotFan(String),

    #[error("fans are not dual: ray {dual_ray} of the dual fan pairs to {pairing} with ray {ray}")]
    NotDual {
        dual_ray: usize,
        ray: usize,
        pairing: String,
    },

    #[error("divisor is not Cartier on maximal cone {0}")]
    NotCartier(usize),

    #[error("exponent {m:?} is not regular: pairs negatively with ray {ray}")]
    Irregular { m: IntVec, ray: usize },

    #[error("specialization domain does not match the exponent set: {0}")]
    SpecializationDomain(String),

    #[error("matrix is singular")]
    Singular,

    #[error("Q not a subgroup of S_P: column {0} of P is not a character of the quotient")]
    NotSubgroup(usize),

    #[error("check failed: {0}")]
    CheckFailed(String),
}
