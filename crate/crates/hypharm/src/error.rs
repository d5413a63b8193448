use std::io;
use std::path::PathBuf;

use hypharm_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    /// Bad ids, parameters outside a record's domain, malformed probe points.
    #[error("{0}")]
    Domain(CoreError),

    /// Arithmetic failure while evaluating an in-domain cell.
    #[error("{0}")]
    Evaluation(CoreError),

    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Evaluation(_) => 1,
            CliError::Usage(_) | CliError::Domain(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Domain { .. }
            | CoreError::NotFound { .. }
            | CoreError::Parse { .. }
            | CoreError::ProbePoints
            | CoreError::InvalidWeight { .. }
            | CoreError::Reflection { .. } => CliError::Domain(e),
            _ => CliError::Evaluation(e),
        }
    }
}
