use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A value lies outside the range an operation accepts.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed input at a 1-based line number.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// Well-formed input that cannot be used (duplicates, empty results).
    #[error("data error: {0}")]
    Data(String),
    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
