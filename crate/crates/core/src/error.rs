use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QvaError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("q_{i}{j} * q_{j}{i} = {product}, expected 1")]
    SkewViolation { i: usize, j: usize, product: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("series order too small; need at least {needed}")]
    InsufficientOrder { needed: i64 },
    #[error("central charge is not a single scalar: {0}")]
    InconsistentCentralCharge(String),
}

pub type Result<T> = std::result::Result<T, QvaError>;
