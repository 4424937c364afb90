use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector must have at least one coordinate")]
    EmptyVector,

    #[error("ambient dimension must be at least 1")]
    EmptyAmbient,

    #[error("spanning set must contain at least one vector")]
    EmptySpanningSet,

    #[error("non-finite value at index {index}")]
    NonFiniteValue { index: usize },

    #[error("decoupling components must be nonnegative")]
    NegativeComponent,

    #[error("zero direction vector")]
    ZeroDirection,

    #[error("tolerance must be positive")]
    NonPositiveTolerance,

    #[error("probability space must have at least one outcome")]
    EmptySpace,

    #[error("negative weight {value} at index {index}")]
    NegativeWeight { index: usize, value: f64 },

    #[error("weights must sum to 1 within tolerance, got {sum}")]
    WeightSum { sum: f64 },

    #[error("values length {values} does not match outcome count {outcomes}")]
    LengthMismatch { values: usize, outcomes: usize },

    #[error("random variables live on different probability spaces")]
    MismatchedSpaces,

    #[error("exponent must be at least 1, got {p}")]
    ExponentBelowOne { p: f64 },

    #[error("exponents p = {p}, q = {q} are not a conjugate pair")]
    NonConjugateExponents { p: f64, q: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
