use std::fmt;

use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("face budget of {limit} exceeded while enumerating dimension {dim}")]
    Budget { dim: usize, limit: usize },

    #[error("boundary matrix requested for dimension {0}, which is missing from the face table")]
    MissingDimension(usize),

    #[error("invalid certificate: {0}")]
    Certificate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parameter(_) => ErrorKind::Parameter,
            Error::Parse { .. } => ErrorKind::Parse,
            Error::Io(_) => ErrorKind::Io,
            Error::Budget { .. } => ErrorKind::Budget,
            Error::MissingDimension(_) => ErrorKind::MissingDimension,
            Error::Certificate(_) => ErrorKind::Certificate,
            Error::Precondition(_) => ErrorKind::Precondition,
            Error::Verification(_) => ErrorKind::Verification,
        }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

/// Coarse error classification, used for CLI prefixes and FFI status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parameter,
    Parse,
    Io,
    Budget,
    MissingDimension,
    Certificate,
    Precondition,
    Verification,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Parameter => "parameter",
            ErrorKind::Parse => "parse",
            ErrorKind::Io => "io",
            ErrorKind::Budget => "budget",
            ErrorKind::MissingDimension => "missing-dimension",
            ErrorKind::Certificate => "certificate",
            ErrorKind::Precondition => "precondition",
            ErrorKind::Verification => "verification",
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
