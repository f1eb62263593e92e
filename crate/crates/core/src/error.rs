use thiserror::Error;

/// Errors produced by construction, verification and I/O.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {0}: the side length must be at least 1")]
    InvalidOrder(usize),

    #[error("unsupported order {n}: {reason}")]
    UnsupportedOrder { n: usize, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed square: {0}")]
    Malformed(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn unsupported(n: usize, reason: impl Into<String>) -> Self {
        Error::UnsupportedOrder {
            n,
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
