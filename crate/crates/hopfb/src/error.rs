use thiserror::Error;

/// Errors produced by constructors, parsers and the CLI surface.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("degree bound {requested} exceeds configured maximum {maximum}")]
    DegreeBound { requested: usize, maximum: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
