use thiserror::Error;

/// Errors raised by the library.
///
/// `Parse` covers malformed input documents, `Domain` covers violated
/// preconditions, and `InputValidation` is raised when a polynomial claimed
/// to come from a genuine rational representation is inconsistent with one.
/// `Internal` marks states that are mathematically impossible.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("input validation error: {0}")]
    InputValidation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
