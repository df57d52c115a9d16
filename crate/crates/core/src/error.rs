use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported: {0}")]
    Capability(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal check failed: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
