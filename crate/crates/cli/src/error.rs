use std::path::PathBuf;

use crate::expr::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] lapgap::Error),

    #[error("{0}")]
    Usage(String),

    /// A checked statement failed; the report has already been written.
    #[error("{0}")]
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Assertion(_) => 1,
            CliError::Core(lapgap::Error::Integrity(_) | lapgap::Error::Asymmetric { .. }) => 1,
            _ => 2,
        }
    }
}
