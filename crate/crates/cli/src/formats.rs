//! On-disk result schemas, each with a writer and a matching reader.
//!
//! * Trace CSV — header `step,H,beta`, one row per sample.
//! * Sweep CSV — header `c,q,h_min,n_edges,seed`, one row per (c, q) cell.
//! * Summary JSON — keys `h_min, final_beta, n_accepted, all_hmins,
//!   elapsed_seconds, config`; the config echo makes every artifact
//!   regenerable on its own.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use sa_coloring::TraceSample;

use crate::error::HarnessError;

/// One `step,H,beta` row of a trace CSV.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    /// Proposal count at the sample point.
    pub step: u64,
    /// Conflict energy at the sample point.
    #[serde(rename = "H")]
    pub h: u64,
    /// Inverse temperature at the sample point.
    pub beta: f64,
}

impl From<TraceSample> for TraceRow {
    fn from(s: TraceSample) -> Self {
        Self {
            step: s.step,
            h: s.energy.value(),
            beta: s.beta,
        }
    }
}

/// Writes a run trace as `step,H,beta` CSV.
pub fn write_trace_csv<W: Write>(writer: W, trace: &[TraceSample]) -> Result<(), HarnessError> {
    let mut out = csv::Writer::from_writer(writer);
    for &sample in trace {
        out.serialize(TraceRow::from(sample))?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a trace CSV produced by [`write_trace_csv`].
pub fn read_trace_csv<R: Read>(reader: R) -> Result<Vec<TraceRow>, HarnessError> {
    csv::Reader::from_reader(reader)
        .deserialize()
        .collect::<Result<Vec<TraceRow>, _>>()
        .map_err(Into::into)
}

/// One `c,q,h_min,n_edges,seed` row of the degree-sweep CSV.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    /// Requested average degree of the instance.
    pub c: f64,
    /// Palette size used for this cell.
    pub q: u32,
    /// Best energy over the cell's runs.
    pub h_min: u64,
    /// Edge count of the generated instance.
    pub n_edges: u64,
    /// Base seed fed to the cell's run batch.
    pub seed: u64,
}

/// Writes sweep records as `c,q,h_min,n_edges,seed` CSV.
pub fn write_sweep_csv<W: Write>(writer: W, records: &[SweepRecord]) -> Result<(), HarnessError> {
    let mut out = csv::Writer::from_writer(writer);
    for record in records {
        out.serialize(record)?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a sweep CSV produced by [`write_sweep_csv`].
pub fn read_sweep_csv<R: Read>(reader: R) -> Result<Vec<SweepRecord>, HarnessError> {
    csv::Reader::from_reader(reader)
        .deserialize()
        .collect::<Result<Vec<SweepRecord>, _>>()
        .map_err(Into::into)
}

/// Everything one `solve` invocation produced, minus the trace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveSummary {
    /// Best energy across all runs.
    pub h_min: u64,
    /// Final inverse temperature of the best run.
    pub final_beta: f64,
    /// Accepted proposals in the best run.
    pub n_accepted: u64,
    /// Every run's best energy, in run-index order.
    pub all_hmins: Vec<u64>,
    /// Wall-clock duration of the whole batch.
    pub elapsed_seconds: f64,
    /// Full parameter echo.
    pub config: ConfigEcho,
}

/// The exact configuration a summary was produced with.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    /// Graph source as given on the command line.
    pub graph: String,
    /// Vertex count of the solved instance.
    pub n_vertices: usize,
    /// Edge count of the solved instance.
    pub n_edges: u64,
    /// Palette size.
    pub q: u32,
    /// Proposals per run.
    pub iters: u64,
    /// Initial inverse temperature.
    pub beta0: f64,
    /// β-update period as a multiple of the vertex count.
    pub trials_factor: f64,
    /// Base seed for per-run seed derivation.
    pub seed: u64,
    /// Number of independent runs.
    pub runs: usize,
    /// Steps between trace samples.
    pub trace_stride: u64,
}

/// Writes a summary as pretty-printed JSON.
pub fn write_summary_json<W: Write>(
    writer: W,
    summary: &SolveSummary,
) -> Result<(), HarnessError> {
    serde_json::to_writer_pretty(writer, summary)?;
    Ok(())
}

/// Reads a summary produced by [`write_summary_json`].
pub fn read_summary_json<R: Read>(reader: R) -> Result<SolveSummary, HarnessError> {
    serde_json::from_reader(reader).map_err(Into::into)
}
