//! Error type shared by the solver library.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building graphs or running the sampler.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A DIMACS `.col` stream failed to parse; `line` is 1-based.
    #[error("DIMACS parse error at line {line}: {msg}")]
    DimacsParse { line: usize, msg: String },

    /// The stream ended without a `p edge <vertices> <edges>` header.
    #[error("DIMACS parse error: missing 'p edge <vertices> <edges>' header")]
    DimacsMissingHeader,

    /// An exhaustive-search oracle was asked for more states than it will visit.
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Worker pool construction failed.
    #[error("thread pool: {0}")]
    ThreadPool(String),

    /// Underlying I/O failure while reading a graph stream.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
