use supercochain::Error;
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid `{section}`: {message}")]
    Validation { section: String, message: String },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// `2` for input problems, `3` for internal invariant breaches.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Validation { .. } => 2,
            CliError::Core(Error::InvalidScalar(_) | Error::Validation(_) | Error::InvalidAction(_)) => 2,
            CliError::Core(_) => 3,
        }
    }
}
