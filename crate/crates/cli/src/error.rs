use std::path::Path;

use thiserror::Error;

/// Failure classes, each with its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn io(path: &Path, err: impl std::fmt::Display) -> Self {
        CliError::Io(format!("{}: {err}", path.display()))
    }

    /// Wraps a library error raised while processing `path`.
    pub fn at(path: &Path, err: wcts::Error) -> Self {
        match err {
            wcts::Error::Io(e) => CliError::io(path, e),
            other => CliError::Data(format!("{}: {other}", path.display())),
        }
    }
}

impl From<wcts::Error> for CliError {
    fn from(err: wcts::Error) -> Self {
        match err {
            wcts::Error::Io(e) => CliError::Io(e.to_string()),
            other => CliError::Data(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
