//! Best-of-k independent annealing runs over one shared graph.
//!
//! Runs share nothing but the immutable graph, so they parallelize with zero
//! coordination and the aggregate result is the same whether they execute
//! sequentially or concurrently.

use rayon::prelude::*;

use crate::annealer::{AnnealConfig, RunResult, run};
use crate::energy::Energy;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// SplitMix64 finalizer; a bijection on u64.
pub fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-run seed: SplitMix64 of the base seed advanced by the run index times
/// an odd constant. Distinct run indices therefore map to pairwise-distinct
/// seeds — the pre-mix inputs differ and the mix is a bijection.
pub fn derive_seed(base_seed: u64, run_index: usize) -> u64 {
    splitmix64(base_seed.wrapping_add((run_index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// A batch of independent runs sharing one base configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiRunConfig {
    /// Template for every run; each run replaces `seed` via [`derive_seed`].
    pub base: AnnealConfig,
    /// Number of independent runs (k ≥ 1).
    pub n_runs: usize,
    /// Worker cap: `None` uses the default pool (hardware parallelism),
    /// `Some(1)` forces sequential execution in the calling thread.
    pub threads: Option<usize>,
}

impl MultiRunConfig {
    /// Batch with default parallelism.
    pub fn new(base: AnnealConfig, n_runs: usize) -> Self {
        Self {
            base,
            n_runs,
            threads: None,
        }
    }
}

/// Aggregate of a multi-run batch.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiRunResult {
    /// The run with the lowest `h_min`; ties go to the lowest run index.
    pub best: RunResult,
    /// Index of the winning run.
    pub best_run_index: usize,
    /// Every run's `h_min`, in run-index order.
    pub all_hmins: Vec<Energy>,
}

/// Per-run completion notice, delivered on whichever thread finished the run.
#[derive(Copy, Clone, Debug)]
pub struct RunProgress {
    /// Which run finished.
    pub run_index: usize,
    /// Its best energy.
    pub h_min: Energy,
    /// Total runs in the batch.
    pub n_runs: usize,
}

/// Progress callback; called once per completed run, in completion order.
pub type ProgressFn<'a> = &'a (dyn Fn(RunProgress) + Sync);

/// Executes the batch and keeps the best result. See [`run_many_with_progress`].
pub fn run_many(g: &Graph, cfg: &MultiRunConfig) -> Result<MultiRunResult> {
    run_many_with_progress(g, cfg, None)
}

/// Executes k independent seeded runs and returns the one with minimal
/// `h_min` plus every run's `h_min`. The aggregate is a pure function of
/// `(g, cfg)`; the progress channel is the only schedule-dependent output.
pub fn run_many_with_progress(
    g: &Graph,
    cfg: &MultiRunConfig,
    progress: Option<ProgressFn<'_>>,
) -> Result<MultiRunResult> {
    if cfg.n_runs == 0 {
        return Err(Error::InvalidParameter("n_runs must be at least 1".into()));
    }
    cfg.base.validate()?;

    let one = |run_index: usize| -> Result<RunResult> {
        let mut run_cfg = cfg.base.clone();
        run_cfg.seed = derive_seed(cfg.base.seed, run_index);
        let result = run(g, &run_cfg)?;
        if let Some(report) = progress {
            report(RunProgress {
                run_index,
                h_min: result.h_min,
                n_runs: cfg.n_runs,
            });
        }
        Ok(result)
    };

    let mut results: Vec<RunResult> = match cfg.threads {
        Some(1) => (0..cfg.n_runs).map(one).collect::<Result<_>>()?,
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1).min(cfg.n_runs))
                .build()
                .map_err(|e| Error::ThreadPool(e.to_string()))?;
            pool.install(|| (0..cfg.n_runs).into_par_iter().map(one).collect::<Result<_>>())?
        }
        None => (0..cfg.n_runs).into_par_iter().map(one).collect::<Result<_>>()?,
    };

    let all_hmins: Vec<Energy> = results.iter().map(|r| r.h_min).collect();
    let mut best_run_index = 0;
    for (i, &h) in all_hmins.iter().enumerate() {
        if h < all_hmins[best_run_index] {
            best_run_index = i;
        }
    }
    let best = results.swap_remove(best_run_index);

    Ok(MultiRunResult {
        best,
        best_run_index,
        all_hmins,
    })
}
