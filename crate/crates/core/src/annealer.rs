//! Metropolis chain over colorings with a geometric inverse-temperature schedule.
//!
//! One run owns its coloring, energy accumulator, and RNG; the graph is shared
//! read-only. Energy is maintained incrementally from move deltas — the chain
//! never recomputes the full sum inside the loop.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::energy::{Coloring, Energy, delta_energy, full_energy};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Geometric β-schedule: every `trials_factor × N` proposals, β is multiplied
/// by `(0.2 + N/n) / 0.2`, where N is the vertex count and n the total
/// iteration budget.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Schedule {
    /// Initial inverse temperature.
    pub beta0: f64,
    /// β-update period as a multiple of the vertex count.
    pub trials_factor: f64,
}

impl Schedule {
    /// Parameters tuned for a 10^6-iteration budget (the `paper-1e6` CLI preset).
    pub const TUNED_1E6: Schedule = Schedule {
        beta0: 0.8,
        trials_factor: 1.5,
    };

    /// Parameters tuned for a 10^9-iteration budget (the `paper-1e9` CLI preset).
    pub const TUNED_1E9: Schedule = Schedule {
        beta0: 0.98,
        trials_factor: 3.4,
    };

    /// Multiplicative β growth factor `(0.2 + N/n) / 0.2`. Always > 1 for
    /// finite budgets and tends to 1 as n → ∞.
    pub fn growth_factor(n_vertices: usize, n_iterations: u64) -> f64 {
        (0.2 + n_vertices as f64 / n_iterations as f64) / 0.2
    }

    /// One schedule firing: β scaled by the growth factor.
    pub fn update_beta(&self, beta: f64, n_vertices: usize, n_iterations: u64) -> f64 {
        beta * Self::growth_factor(n_vertices, n_iterations)
    }

    /// Proposals between consecutive β updates: `⌊trials_factor × N⌋`, at least 1.
    pub fn update_period(&self, n_vertices: usize) -> u64 {
        ((self.trials_factor * n_vertices as f64).floor() as u64).max(1)
    }

    /// β after a full run, by the same repeated multiplication the run performs.
    pub fn final_beta(&self, n_vertices: usize, n_iterations: u64) -> f64 {
        let firings = n_iterations / self.update_period(n_vertices);
        let growth = Self::growth_factor(n_vertices, n_iterations);
        let mut beta = self.beta0;
        for _ in 0..firings {
            beta *= growth;
        }
        beta
    }

    fn validate(&self) -> Result<()> {
        if !(self.beta0.is_finite() && self.beta0 > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "beta0 must be positive, got {}",
                self.beta0
            )));
        }
        if !(self.trials_factor.is_finite() && self.trials_factor > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "trials_factor must be positive, got {}",
                self.trials_factor
            )));
        }
        Ok(())
    }
}

/// Everything one annealing run needs besides the graph.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnealConfig {
    /// Palette size q (at least 2 — a single color admits no move).
    pub n_colors: u32,
    /// Number of proposals to make.
    pub n_iterations: u64,
    /// β schedule.
    pub schedule: Schedule,
    /// RNG seed; identical configs reproduce identical runs within one build.
    pub seed: u64,
    /// Steps between trace samples.
    pub trace_stride: u64,
}

impl AnnealConfig {
    /// Config with the 10^6-tuned schedule and the default trace stride.
    pub fn new(n_colors: u32, n_iterations: u64, seed: u64) -> Self {
        Self {
            n_colors,
            n_iterations,
            schedule: Schedule::TUNED_1E6,
            seed,
            trace_stride: default_trace_stride(n_iterations),
        }
    }

    /// The full 10^6-iteration preset.
    pub fn preset_1e6(n_colors: u32, seed: u64) -> Self {
        Self::new(n_colors, 1_000_000, seed)
    }

    /// The full 10^9-iteration preset.
    pub fn preset_1e9(n_colors: u32, seed: u64) -> Self {
        Self {
            schedule: Schedule::TUNED_1E9,
            ..Self::new(n_colors, 1_000_000_000, seed)
        }
    }

    /// Checks every config invariant.
    pub fn validate(&self) -> Result<()> {
        if self.n_colors < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least 2 colors, got {}",
                self.n_colors
            )));
        }
        if self.n_iterations == 0 {
            return Err(Error::InvalidParameter("n_iterations must be at least 1".into()));
        }
        if self.trace_stride == 0 {
            return Err(Error::InvalidParameter("trace_stride must be at least 1".into()));
        }
        self.schedule.validate()
    }
}

/// Stride giving roughly 1000 trace points regardless of run length.
pub fn default_trace_stride(n_iterations: u64) -> u64 {
    (n_iterations / 1000).max(1)
}

/// One trace sample, taken after the step (and any β update) at `step`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct TraceSample {
    /// Proposal count at the sample point; 0 is the initial state.
    pub step: u64,
    /// Accumulated conflict energy at the sample point.
    pub energy: Energy,
    /// Inverse temperature in effect after this step.
    pub beta: f64,
}

/// Outcome of one annealing run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunResult {
    /// Lowest energy seen anywhere along the trajectory, step 0 included.
    pub h_min: Energy,
    /// Earliest coloring that attained `h_min`.
    pub best_coloring: Coloring,
    /// β after the last schedule firing.
    pub final_beta: f64,
    /// `(step, H, β)` samples every `trace_stride` steps plus both endpoints.
    pub trace: Vec<TraceSample>,
    /// Number of accepted proposals.
    pub n_accepted: u64,
}

/// Uniform random coloring: every vertex gets an independent color in `[0, q)`.
pub fn init_coloring<R: Rng>(n_vertices: usize, n_colors: u32, rng: &mut R) -> Result<Coloring> {
    if n_colors < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 colors, got {n_colors}"
        )));
    }
    let colors = (0..n_vertices).map(|_| rng.random_range(0..n_colors)).collect();
    Ok(Coloring::new(colors, n_colors))
}

/// The Metropolis acceptance rule: downhill and flat moves always pass,
/// uphill moves pass with probability `exp(-β·Δ)`.
pub fn accept_move<R: Rng>(delta: i64, beta: f64, rng: &mut R) -> bool {
    if delta <= 0 {
        return true;
    }
    rng.random::<f64>() < (-beta * delta as f64).exp()
}

/// What a single proposal did.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct StepOutcome {
    /// Whether the proposal was applied.
    pub accepted: bool,
    /// Energy change of the proposed move (applied only if accepted).
    pub delta: i64,
}

impl StepOutcome {
    /// The energy change actually applied: `delta` if accepted, else 0.
    pub fn applied_delta(self) -> i64 {
        if self.accepted { self.delta } else { 0 }
    }
}

/// One Metropolis proposal: a uniform vertex, a uniform color among the q−1
/// alternatives, accept per [`accept_move`]. Rejections leave `x` untouched.
///
/// # Panics
/// Panics if the coloring has fewer than 2 colors or does not match `g`.
pub fn metropolis_step<R: Rng>(
    g: &Graph,
    x: &mut Coloring,
    beta: f64,
    rng: &mut R,
) -> StepOutcome {
    let q = x.n_colors();
    let v = rng.random_range(0..g.n_vertices());
    let current = x.color(v);
    let mut proposal = rng.random_range(0..q - 1);
    if proposal >= current {
        proposal += 1;
    }
    let delta = delta_energy(g, x, v, proposal);
    let accepted = accept_move(delta, beta, rng);
    if accepted {
        x.set_color(v, proposal);
    }
    StepOutcome { accepted, delta }
}

/// Runs the full annealing chain: `n_iterations` proposals, β raised every
/// `⌊trials_factor × N⌋` of them, best-so-far state tracked throughout.
pub fn run(g: &Graph, cfg: &AnnealConfig) -> Result<RunResult> {
    cfg.validate()?;
    if g.n_vertices() == 0 {
        return Err(Error::InvalidParameter("graph must have at least one vertex".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut x = init_coloring(g.n_vertices(), cfg.n_colors, &mut rng)?;

    let growth = Schedule::growth_factor(g.n_vertices(), cfg.n_iterations);
    let period = cfg.schedule.update_period(g.n_vertices());
    let mut beta = cfg.schedule.beta0;

    let mut current = full_energy(g, &x).value() as i64;
    let mut h_min = current;
    let mut best = x.clone();
    let mut n_accepted = 0u64;

    let mut trace = Vec::with_capacity((cfg.n_iterations / cfg.trace_stride + 2) as usize);
    trace.push(TraceSample {
        step: 0,
        energy: Energy(current as u64),
        beta,
    });

    for step in 1..=cfg.n_iterations {
        let outcome = metropolis_step(g, &mut x, beta, &mut rng);
        if outcome.accepted {
            current += outcome.delta;
            n_accepted += 1;
            if current < h_min {
                h_min = current;
                best.clone_from(&x);
            }
        }
        if step % period == 0 {
            beta *= growth;
        }
        if step % cfg.trace_stride == 0 {
            trace.push(TraceSample {
                step,
                energy: Energy(current as u64),
                beta,
            });
        }
        // Periodic cross-check of the accumulator against a full recount.
        debug_assert!(
            step % (1 << 20) != 0 || current == full_energy(g, &x).value() as i64,
            "accumulated energy drifted at step {step}"
        );
    }
    if !cfg.n_iterations.is_multiple_of(cfg.trace_stride) {
        trace.push(TraceSample {
            step: cfg.n_iterations,
            energy: Energy(current as u64),
            beta,
        });
    }

    assert_eq!(
        current as u64,
        full_energy(g, &x).value(),
        "accumulated energy disagrees with a full recount at run end"
    );

    Ok(RunResult {
        h_min: Energy(h_min as u64),
        best_coloring: best,
        final_beta: beta,
        trace,
        n_accepted,
    })
}
