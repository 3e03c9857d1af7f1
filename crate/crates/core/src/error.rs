//! Error type shared across the crate.
//!
//! Invariant violations are ordinary values: constructors and `validate`
//! return the first violated invariant instead of panicking.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A structural invariant does not hold; carries a human-readable
    /// description of the first violation found.
    #[error("{0}")]
    Violation(String),

    /// Text input could not be parsed. Positions are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Pattern and host have different dimension.
    #[error("dimension mismatch: pattern has {pattern} axes, host has {host}")]
    DimensionMismatch { pattern: usize, host: usize },

    /// An argument is outside the operation's domain.
    #[error("{0}")]
    InvalidArgument(String),

    /// The requested computation exceeds the configured resource cap.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

impl Error {
    pub(crate) fn violation(msg: impl Into<String>) -> Self {
        Error::Violation(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn cap(msg: impl Into<String>) -> Self {
        Error::ResourceCap(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
