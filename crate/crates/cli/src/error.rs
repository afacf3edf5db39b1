use std::path::PathBuf;

use thiserror::Error;
use transfer_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("bad graph spec `{0}`: expected path:N, cycle:N, prod:AxB or an edge-list file")]
    Spec(String),
    #[error("{source}; pass automorphism generators with --aut for graphs this large")]
    NeedGenerators { source: CoreError },
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
}

/// Process exit status for each failure kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus(pub u8);

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        ExitStatus(match self {
            CliError::Io { .. } | CliError::Spec(_) => 2,
            CliError::OracleMismatch(_) => 4,
            CliError::NeedGenerators { .. } => 3,
            CliError::Core(e) => match e {
                CoreError::TooLarge { .. } => 3,
                CoreError::NotIntegerPolynomial
                | CoreError::InconsistentPoints { .. }
                | CoreError::NonIntegralSeries { .. }
                | CoreError::NoConvergence { .. }
                | CoreError::Invariant(_) => 5,
                _ => 2,
            },
        })
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
