use thiserror::Error;

/// Errors reported by schur-kit operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text could not be parsed into the requested value.
    #[error("parse error: {0}")]
    Parse(String),
    /// Inputs violate a precondition of the operation.
    #[error("validation error: {0}")]
    Validation(String),
    /// A configured bound (table size, degree cap) was exceeded.
    #[error("resource limit exceeded: {what} = {requested} exceeds limit {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    /// Internal consistency failure, e.g. a complex whose differentials do not square to zero.
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn validation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}
