use thiserror::Error;

use crate::lattice::LatticePoint;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid adjacency kappa_{l} in Z^{dim} (need 1 <= l <= dim)")]
    InvalidAdjacency { l: usize, dim: usize },
    #[error("no named {name}-adjacency exists in Z^{dim}")]
    UnknownNamedAdjacency { name: usize, dim: usize },
    #[error("duplicate point {0}")]
    DuplicatePoint(LatticePoint),
    #[error("point {0} is not in the image")]
    PointNotInImage(LatticePoint),
    #[error("invalid bounds [{lo}, {hi}]")]
    InvalidBounds { lo: i64, hi: i64 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("generator would produce {requested} points (limit {limit})")]
    TooManyPoints { requested: u128, limit: u128 },
    #[error("map table is not total: {0} has no value")]
    MissingMapping(LatticePoint),
    #[error("map key {0} lies outside the source image")]
    KeyOutsideSource(LatticePoint),
    #[error("map value {0} lies outside the target image")]
    ValueOutsideTarget(LatticePoint),
    #[error("homotopy table is not total: ({point}, {step}) has no value")]
    MissingHomotopyEntry { point: LatticePoint, step: i64 },
    #[error("homotopy step count {0} is negative")]
    NegativeSteps(i64),
    #[error("homotopy step {step} lies outside [0, {steps}]")]
    StepOutOfRange { step: i64, steps: i64 },
    #[error("source or target images do not line up")]
    MismatchedSpaces,
    #[error("functions do not share a common domain")]
    DomainMismatch,
    #[error("{0} lies outside the function domain")]
    OutsideDomain(LatticePoint),
    #[error("cover must list one subset per function: {functions} functions, {sets} sets")]
    CoverLengthMismatch { functions: usize, sets: usize },
    #[error("zero count {zero_count} out of range for model dimension {n}")]
    ZeroCountOutOfRange { zero_count: usize, n: usize },
    #[error("image is not a digital 0-manifold")]
    NotZeroManifold,
    #[error("map is not a digital isomorphism")]
    NotIsomorphism,
    #[error("{count} points exceed the enumeration bound {bound}")]
    BoundExceeded { count: usize, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
