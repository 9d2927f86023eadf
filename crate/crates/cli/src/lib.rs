//! Experiment harness behind the `sa-coloring` binary: result file formats
//! and the drivers for single solves and (c, q) sweeps.

pub mod error;
pub mod experiments;
pub mod formats;

pub use error::HarnessError;
