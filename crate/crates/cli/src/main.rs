//! `sa-coloring`: generate Erdős–Rényi instances, anneal colorings, and sweep
//! the average degree. Exit codes: 0 success, 1 bad parameters, 2 I/O failure.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sa_coloring::{
    AnnealConfig, Graph, MultiRunConfig, RunProgress, Schedule, default_trace_stride, load_dimacs,
    save_dimacs,
};
use sa_coloring_cli::error::HarnessError;
use sa_coloring_cli::experiments::{self, SweepConfig};
use sa_coloring_cli::formats::{self, SweepRecord};

#[derive(Parser)]
#[command(name = "sa-coloring", version, about = "Graph coloring by Metropolis simulated annealing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Named parameter sets; individual flags override single fields.
#[derive(Copy, Clone, Debug, ValueEnum)]
enum Preset {
    /// 10^6 iterations, beta0 = 0.8, trials factor 1.5
    #[value(name = "paper-1e6")]
    Paper1e6,
    /// 10^9 iterations, beta0 = 0.98, trials factor 3.4
    #[value(name = "paper-1e9")]
    Paper1e9,
}

impl Preset {
    fn iterations(self) -> u64 {
        match self {
            Preset::Paper1e6 => 1_000_000,
            Preset::Paper1e9 => 1_000_000_000,
        }
    }

    fn schedule(self) -> Schedule {
        match self {
            Preset::Paper1e6 => Schedule::TUNED_1E6,
            Preset::Paper1e9 => Schedule::TUNED_1E9,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate an Erdős–Rényi graph and write it as DIMACS .col
    Generate {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Target average degree
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output .col path
        #[arg(long)]
        out: PathBuf,
    },
    /// Anneal a DIMACS graph; write the best run's trace CSV and a summary JSON
    Solve {
        /// Graph file in DIMACS .col form
        graph: PathBuf,
        /// Number of colors
        #[arg(long)]
        q: u32,
        /// Parameter preset supplying iters/beta0/trials-factor defaults
        #[arg(long, value_enum, default_value_t = Preset::Paper1e6)]
        preset: Preset,
        /// Iteration count per run (overrides the preset)
        #[arg(long)]
        iters: Option<u64>,
        /// Initial inverse temperature (overrides the preset)
        #[arg(long, allow_negative_numbers = true)]
        beta0: Option<f64>,
        /// Beta-update period as a multiple of N (overrides the preset)
        #[arg(long, allow_negative_numbers = true)]
        trials_factor: Option<f64>,
        /// Base seed; per-run seeds are derived from it
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Independent runs; the best result is kept
        #[arg(long, default_value_t = 1)]
        runs: usize,
        /// Steps between trace samples (default: iters/1000)
        #[arg(long)]
        trace_stride: Option<u64>,
        /// Worker threads (default: all cores, 1 = sequential)
        #[arg(long)]
        threads: Option<usize>,
        /// Output prefix: writes <out>.trace.csv and <out>.summary.json
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve fresh ER instances over a (c, q) grid; write one CSV row per cell
    Sweep {
        /// Number of vertices per generated instance
        #[arg(long)]
        n: usize,
        /// Average degrees: comma-separated values and/or start:end:step ranges
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        c: Vec<String>,
        /// Color counts, comma separated
        #[arg(long, value_delimiter = ',')]
        q: Vec<u32>,
        /// Parameter preset supplying iters/beta0/trials-factor defaults
        #[arg(long, value_enum, default_value_t = Preset::Paper1e6)]
        preset: Preset,
        /// Iteration count per run (overrides the preset)
        #[arg(long)]
        iters: Option<u64>,
        /// Initial inverse temperature (overrides the preset)
        #[arg(long, allow_negative_numbers = true)]
        beta0: Option<f64>,
        /// Beta-update period as a multiple of N (overrides the preset)
        #[arg(long, allow_negative_numbers = true)]
        trials_factor: Option<f64>,
        /// Base seed for all graph and cell seeds
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Independent runs per cell
        #[arg(long, default_value_t = 1)]
        runs: usize,
        /// Worker threads (default: all cores, 1 = sequential)
        #[arg(long)]
        threads: Option<usize>,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(command: Command) -> Result<(), HarnessError> {
    match command {
        Command::Generate { n, c, seed, out } => generate(n, c, seed, &out),
        Command::Solve {
            graph,
            q,
            preset,
            iters,
            beta0,
            trials_factor,
            seed,
            runs,
            trace_stride,
            threads,
            out,
        } => {
            let iters = iters.unwrap_or(preset.iterations());
            let schedule = Schedule {
                beta0: beta0.unwrap_or(preset.schedule().beta0),
                trials_factor: trials_factor.unwrap_or(preset.schedule().trials_factor),
            };
            let base = AnnealConfig {
                n_colors: q,
                n_iterations: iters,
                schedule,
                seed,
                trace_stride: trace_stride.unwrap_or(default_trace_stride(iters)),
            };
            let cfg = MultiRunConfig {
                base,
                n_runs: runs,
                threads,
            };
            solve(&graph, &cfg, &out)
        }
        Command::Sweep {
            n,
            c,
            q,
            preset,
            iters,
            beta0,
            trials_factor,
            seed,
            runs,
            threads,
            out,
        } => {
            let iters = iters.unwrap_or(preset.iterations());
            let cfg = SweepConfig {
                n_vertices: n,
                c_values: parse_c_values(&c)?,
                q_values: q,
                n_iterations: iters,
                schedule: Schedule {
                    beta0: beta0.unwrap_or(preset.schedule().beta0),
                    trials_factor: trials_factor.unwrap_or(preset.schedule().trials_factor),
                },
                runs_per_cell: runs,
                base_seed: seed,
                threads,
            };
            sweep(&cfg, &out)
        }
    }
}

fn generate(n: usize, c: f64, seed: u64, out: &Path) -> Result<(), HarnessError> {
    let g = Graph::generate_erdos_renyi(n, c, seed)?;
    let file = create_output(out)?;
    save_dimacs(&g, BufWriter::new(file))?;
    println!("{}", g.n_edges());
    Ok(())
}

fn solve(graph_path: &Path, cfg: &MultiRunConfig, out: &Path) -> Result<(), HarnessError> {
    let g = read_graph(graph_path)?;
    let report = |p: RunProgress| {
        eprintln!("run {}/{}: h_min = {}", p.run_index + 1, p.n_runs, p.h_min);
    };
    let outcome = experiments::solve_graph(&g, cfg, Some(&report))?;
    let summary = experiments::summarize(&graph_path.display().to_string(), &g, cfg, &outcome);

    let trace_path = path_with_suffix(out, ".trace.csv");
    let summary_path = path_with_suffix(out, ".summary.json");
    formats::write_trace_csv(BufWriter::new(create_output(&trace_path)?), &outcome.multi.best.trace)?;
    formats::write_summary_json(BufWriter::new(create_output(&summary_path)?), &summary)?;

    println!(
        "h_min {} over {} run(s) in {:.2}s; wrote {} and {}",
        summary.h_min,
        summary.config.runs,
        summary.elapsed_seconds,
        trace_path.display(),
        summary_path.display()
    );
    Ok(())
}

fn sweep(cfg: &SweepConfig, out: &Path) -> Result<(), HarnessError> {
    let report = |record: &SweepRecord| {
        eprintln!("c = {}, q = {}: h_min = {}", record.c, record.q, record.h_min);
    };
    let records = experiments::run_sweep_with_progress(cfg, Some(&report))?;
    formats::write_sweep_csv(BufWriter::new(create_output(out)?), &records)?;
    println!("{} rows written to {}", records.len(), out.display());
    Ok(())
}

fn read_graph(path: &Path) -> Result<Graph, HarnessError> {
    let file = File::open(path)
        .map_err(|e| HarnessError::Io(format!("cannot open {}: {e}", path.display())))?;
    load_dimacs(BufReader::new(file))
        .map_err(|e| HarnessError::Io(format!("cannot load {}: {e}", path.display())))
}

fn create_output(path: &Path) -> Result<File, HarnessError> {
    if let Some(parent) = path.parent()
        && !parent.as_os_str().is_empty()
    {
        std::fs::create_dir_all(parent)
            .map_err(|e| HarnessError::Io(format!("cannot create {}: {e}", parent.display())))?;
    }
    File::create(path).map_err(|e| HarnessError::Io(format!("cannot create {}: {e}", path.display())))
}

fn path_with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut os = path.as_os_str().to_owned();
    os.push(suffix);
    PathBuf::from(os)
}

/// Accepts plain numbers and inclusive `start:end:step` ranges.
fn parse_c_values(items: &[String]) -> Result<Vec<f64>, HarnessError> {
    let bad = |item: &str| {
        HarnessError::Parameter(format!(
            "cannot parse degree value {item:?}: expected a number or start:end:step"
        ))
    };
    let mut values = Vec::new();
    for item in items {
        if item.contains(':') {
            let parts: Vec<&str> = item.split(':').collect();
            if parts.len() != 3 {
                return Err(bad(item));
            }
            let nums: Vec<f64> = parts
                .iter()
                .map(|p| p.parse::<f64>().map_err(|_| bad(item)))
                .collect::<Result<_, _>>()?;
            let (start, end, step) = (nums[0], nums[1], nums[2]);
            if step <= 0.0 || step.is_nan() || !start.is_finite() || !end.is_finite() {
                return Err(bad(item));
            }
            let mut k = 0u64;
            loop {
                let value = start + step * k as f64;
                if value > end + 1e-9 {
                    break;
                }
                values.push(value);
                k += 1;
            }
        } else {
            values.push(item.parse::<f64>().map_err(|_| bad(item))?);
        }
    }
    Ok(values)
}
