use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Core(#[from] sedwit_core::Error),
    #[error("I/O: {0}")]
    Io(#[from] io::Error),
    #[error("CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("circuit text line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl CliError {
    /// 1 for failed checks and runtime errors, 2 for bad arguments.
    pub fn exit_code(&self) -> u8 {
        use sedwit_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::Core(
                E::OutOfRange { .. }
                | E::TooFewQubits { .. }
                | E::TooManyQubits { .. }
                | E::IllConditioned { .. }
                | E::QubitOutOfRange { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
