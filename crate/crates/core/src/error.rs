use thiserror::Error;

/// Errors surfaced by the library. Domain violations are reported, never
/// silently coerced; truncation-related impossibilities get their own variant
/// so callers can distinguish "wrong input" from "cap too small".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("standardization undefined: {0}")]
    Standardize(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("not symmetric: {0}")]
    NotSymmetric(String),
    #[error("not quasisymmetric: {0}")]
    NotQuasisymmetric(String),
    #[error("insufficient truncation: {0}")]
    InsufficientTruncation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
