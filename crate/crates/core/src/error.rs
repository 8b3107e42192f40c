use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("not an inverse semigroup: {0}")]
    NotInverse(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("normalization failure: {0}")]
    Normalization(String),
    #[error("splitting failure: {0}")]
    Split(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
