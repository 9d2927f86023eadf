//! Harness error type, split by the process exit code it maps to.

use thiserror::Error;

/// Failure of a harness operation.
///
/// `Parameter` maps to exit code 1 (bad usage or arguments), `Io` to exit
/// code 2 (unreadable inputs, unwritable outputs, malformed graph files).
#[derive(Debug, Error)]
pub enum HarnessError {
    /// A flag or derived configuration value is out of domain.
    #[error("{0}")]
    Parameter(String),

    /// Reading or writing an artifact failed.
    #[error("{0}")]
    Io(String),
}

impl HarnessError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Parameter(_) => 1,
            HarnessError::Io(_) => 2,
        }
    }
}

impl From<sa_coloring::Error> for HarnessError {
    fn from(e: sa_coloring::Error) -> Self {
        use sa_coloring::Error;
        match e {
            Error::InvalidParameter(_) | Error::BudgetExceeded(_) => {
                HarnessError::Parameter(e.to_string())
            }
            Error::DimacsParse { .. }
            | Error::DimacsMissingHeader
            | Error::Io(_)
            | Error::ThreadPool(_) => HarnessError::Io(e.to_string()),
        }
    }
}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        HarnessError::Io(e.to_string())
    }
}

impl From<csv::Error> for HarnessError {
    fn from(e: csv::Error) -> Self {
        HarnessError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for HarnessError {
    fn from(e: serde_json::Error) -> Self {
        HarnessError::Io(e.to_string())
    }
}
