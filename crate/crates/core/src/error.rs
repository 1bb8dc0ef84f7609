use thiserror::Error;

/// Largest ground set representable by a single machine-word bitmask.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set of size {0} exceeds the supported maximum of {MAX_VERTICES} vertices")]
    Capacity(usize),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
