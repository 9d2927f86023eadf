//! Experiment drivers: timed solves and the average-degree sweep.

use std::time::Instant;

use rayon::prelude::*;

use sa_coloring::{
    AnnealConfig, Graph, MultiRunConfig, MultiRunResult, ProgressFn, Schedule,
    default_trace_stride, run_many_with_progress, splitmix64,
};

use crate::error::HarnessError;
use crate::formats::{ConfigEcho, SolveSummary, SweepRecord};

/// A finished multi-run batch plus its wall-clock time.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    /// The batch result.
    pub multi: MultiRunResult,
    /// Wall-clock seconds for the whole batch.
    pub elapsed_seconds: f64,
}

/// Runs a seeded batch over `g` and times it.
pub fn solve_graph(
    g: &Graph,
    cfg: &MultiRunConfig,
    progress: Option<ProgressFn<'_>>,
) -> Result<SolveOutcome, HarnessError> {
    let start = Instant::now();
    let multi = run_many_with_progress(g, cfg, progress)?;
    Ok(SolveOutcome {
        multi,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Assembles the summary artifact for a finished solve.
pub fn summarize(graph_label: &str, g: &Graph, cfg: &MultiRunConfig, outcome: &SolveOutcome) -> SolveSummary {
    SolveSummary {
        h_min: outcome.multi.best.h_min.value(),
        final_beta: outcome.multi.best.final_beta,
        n_accepted: outcome.multi.best.n_accepted,
        all_hmins: outcome.multi.all_hmins.iter().map(|e| e.value()).collect(),
        elapsed_seconds: outcome.elapsed_seconds,
        config: ConfigEcho {
            graph: graph_label.to_string(),
            n_vertices: g.n_vertices(),
            n_edges: g.n_edges() as u64,
            q: cfg.base.n_colors,
            iters: cfg.base.n_iterations,
            beta0: cfg.base.schedule.beta0,
            trials_factor: cfg.base.schedule.trials_factor,
            seed: cfg.base.seed,
            runs: cfg.n_runs,
            trace_stride: cfg.base.trace_stride,
        },
    }
}

/// The (c, q) grid experiment: one fresh ER instance per degree value, each
/// solved once per palette size with a shared annealing template.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    /// Vertices per generated instance.
    pub n_vertices: usize,
    /// Average degrees to visit; deduplicated and sorted ascending.
    pub c_values: Vec<f64>,
    /// Palette sizes to visit; deduplicated and sorted ascending.
    pub q_values: Vec<u32>,
    /// Proposals per run.
    pub n_iterations: u64,
    /// Shared β schedule.
    pub schedule: Schedule,
    /// Independent runs per (c, q) cell.
    pub runs_per_cell: usize,
    /// Root of all seed derivations in the sweep.
    pub base_seed: u64,
    /// Worker cap; `Some(1)` forces a fully sequential sweep.
    pub threads: Option<usize>,
}

impl SweepConfig {
    fn validate(&self) -> Result<(), HarnessError> {
        if self.n_vertices == 0 {
            return Err(HarnessError::Parameter("sweep needs at least one vertex".into()));
        }
        if self.c_values.is_empty() {
            return Err(HarnessError::Parameter("sweep needs at least one c value".into()));
        }
        let max_degree = (self.n_vertices - 1) as f64;
        for &c in &self.c_values {
            if !c.is_finite() || c < 0.0 || c > max_degree {
                return Err(HarnessError::Parameter(format!(
                    "average degree {c} outside [0, {max_degree}]"
                )));
            }
        }
        if self.q_values.is_empty() {
            return Err(HarnessError::Parameter("sweep needs at least one q value".into()));
        }
        if let Some(&q) = self.q_values.iter().find(|&&q| q < 2) {
            return Err(HarnessError::Parameter(format!("need at least 2 colors, got {q}")));
        }
        if self.runs_per_cell == 0 {
            return Err(HarnessError::Parameter("runs per cell must be at least 1".into()));
        }
        Ok(())
    }
}

/// Seed of the one instance generated for degree `c`.
pub fn graph_seed(base_seed: u64, c: f64) -> u64 {
    splitmix64(base_seed ^ c.to_bits())
}

/// Base seed of the run batch for cell `(c, q)`.
pub fn cell_seed(base_seed: u64, c: f64, q: u32) -> u64 {
    splitmix64(graph_seed(base_seed, c) ^ u64::from(q))
}

/// Per-cell completion callback.
pub type SweepProgressFn<'a> = &'a (dyn Fn(&SweepRecord) + Sync);

/// Runs the sweep; see [`run_sweep_with_progress`].
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>, HarnessError> {
    run_sweep_with_progress(cfg, None)
}

/// Runs every (c, q) cell and returns records sorted by `(c, q)`.
///
/// Cells parallelize over the degree values; each cell's runs parallelize
/// through the multi-run contract. The record set is a pure function of the
/// config — scheduling only affects the progress channel.
pub fn run_sweep_with_progress(
    cfg: &SweepConfig,
    progress: Option<SweepProgressFn<'_>>,
) -> Result<Vec<SweepRecord>, HarnessError> {
    cfg.validate()?;

    let mut c_values = cfg.c_values.clone();
    c_values.sort_by(|a, b| a.partial_cmp(b).expect("validated finite"));
    c_values.dedup();
    let mut q_values = cfg.q_values.clone();
    q_values.sort_unstable();
    q_values.dedup();

    let solve_column = |&c: &f64| -> Result<Vec<SweepRecord>, HarnessError> {
        let g = Graph::generate_erdos_renyi(cfg.n_vertices, c, graph_seed(cfg.base_seed, c))?;
        q_values
            .iter()
            .map(|&q| {
                let seed = cell_seed(cfg.base_seed, c, q);
                let base = AnnealConfig {
                    n_colors: q,
                    n_iterations: cfg.n_iterations,
                    schedule: cfg.schedule,
                    seed,
                    trace_stride: default_trace_stride(cfg.n_iterations),
                };
                let multi = run_many_with_progress(
                    &g,
                    &MultiRunConfig {
                        base,
                        n_runs: cfg.runs_per_cell,
                        threads: cfg.threads,
                    },
                    None,
                )?;
                let record = SweepRecord {
                    c,
                    q,
                    h_min: multi.best.h_min.value(),
                    n_edges: g.n_edges() as u64,
                    seed,
                };
                if let Some(report) = progress {
                    report(&record);
                }
                Ok(record)
            })
            .collect()
    };

    let columns: Vec<Vec<SweepRecord>> = if cfg.threads == Some(1) {
        c_values.iter().map(solve_column).collect::<Result<_, _>>()?
    } else {
        c_values
            .par_iter()
            .map(solve_column)
            .collect::<Result<_, _>>()?
    };
    Ok(columns.into_iter().flatten().collect())
}
