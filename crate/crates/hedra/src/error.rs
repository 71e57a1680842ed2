//! Error type shared by every operation in the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Operands have incompatible dimensions.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A square regular matrix was required.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// The input violates a documented precondition of the operation.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A caller-supplied witness or combination does not check out.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An enumeration exceeded its configured cap.
    #[error("resource cap exceeded: {0}")]
    Resource(String),

    /// The input shape is outside the supported fragment.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Malformed input text.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn cap(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
