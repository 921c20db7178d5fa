use rigidity_core::{DomainError, EvalError, FixtureError};
use thiserror::Error;

/// Everything that can stop a subcommand before it reaches a verdict.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(#[from] DomainError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("invalid fixture: {0}")]
    Fixture(#[from] FixtureError),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV: {0}")]
    Csv(String),
}

impl CliError {
    /// `2` for usage and domain errors, `3` for fixture and I/O errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) | CliError::Eval(_) => 2,
            CliError::Fixture(_) | CliError::Io { .. } | CliError::Json(_) | CliError::Csv(_) => 3,
        }
    }
}
