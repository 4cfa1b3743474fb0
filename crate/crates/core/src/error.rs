use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cochains live on different graded spaces")]
    SpaceMismatch,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("composition of consecutive differentials is nonzero")]
    CompositionNonzero,

    #[error("map is not an action: {0}")]
    InvalidAction(String),

    #[error("invalid scalar {0:?}")]
    InvalidScalar(String),

    #[error("validation failed: {0}")]
    Validation(String),

    /// Two computations that must agree did not; always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
