//! Graph-coloring conflict minimization with Metropolis simulated annealing.
//!
//! The conflict energy of a coloring is the number of edges whose endpoints
//! share a color; a proper coloring has energy zero. [`annealer::run`] drives
//! a single Metropolis chain with a geometric β-schedule over an immutable
//! [`graph::Graph`], and [`multirun::run_many`] races independent seeded runs
//! and keeps the best. Exhaustive oracles for small instances live in
//! [`oracle`].

pub mod annealer;
pub mod energy;
pub mod error;
pub mod graph;
pub mod multirun;
pub mod oracle;

pub use annealer::{
    AnnealConfig, RunResult, Schedule, StepOutcome, TraceSample, accept_move,
    default_trace_stride, init_coloring, metropolis_step, run,
};
pub use energy::{Coloring, Energy, conflicts_at, delta_energy, full_energy};
pub use error::{Error, Result};
pub use graph::{Graph, load_dimacs, save_dimacs};
pub use multirun::{
    MultiRunConfig, MultiRunResult, ProgressFn, RunProgress, derive_seed, run_many,
    run_many_with_progress, splitmix64,
};
pub use oracle::{brute_force_hmin, count_proper_colorings};
