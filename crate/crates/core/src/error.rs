use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("variable name collision: `{0}`")]
    NameCollision(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("saturation did not stabilize within {0} quotient steps")]
    SaturationBound(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ideal is not zero-dimensional: {0}")]
    NotArtinian(String),
    #[error("length sequence is not polynomial within {0} samples")]
    FitInconsistency(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
