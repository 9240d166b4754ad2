use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolarError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vectors must have positive dimension")]
    ZeroDimension,

    #[error("duplicate pair in operator graph: {0}")]
    DuplicatePair(String),

    #[error("scaling factor must be positive, got {0}")]
    NonPositiveFactor(String),

    #[error("expected {expected} scaling factors, got {found}")]
    FactorCount { expected: usize, found: usize },

    #[error("operator is not pseudomonotone")]
    NotPseudomonotone,

    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error("empty interval: {0}")]
    EmptyInterval(String),

    #[error("constraint set must be nonempty")]
    EmptyConstraintSet,

    #[error("domain has {size} points, limit is {limit}")]
    DomainTooLarge { size: usize, limit: usize },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("unknown instance family {0:?}")]
    UnknownFamily(String),

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = PolarError> = std::result::Result<T, E>;

impl From<serde_json::Error> for PolarError {
    fn from(e: serde_json::Error) -> Self {
        PolarError::Parse(e.to_string())
    }
}
