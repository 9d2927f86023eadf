//! End-to-end tests of the `sa-coloring` binary: flags, files, exit codes.

use std::path::Path;
use std::process::{Command, Output};

use sa_coloring::{Graph, load_dimacs};
use sa_coloring_cli::formats::{read_summary_json, read_sweep_csv, read_trace_csv};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sa-coloring"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn generate_graph(dir: &Path, n: &str, c: &str, seed: &str) -> std::path::PathBuf {
    let path = dir.join("g.col");
    let output = run(&[
        "generate",
        "--n",
        n,
        "--c",
        c,
        "--seed",
        seed,
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{output:?}");
    path
}

#[test]
fn generate_writes_dimacs_and_prints_edge_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.col");
    let output = run(&[
        "generate",
        "--n",
        "50",
        "--c",
        "4",
        "--seed",
        "7",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{output:?}");
    let printed: usize = String::from_utf8(output.stdout)
        .unwrap()
        .trim()
        .parse()
        .expect("stdout should be the edge count");

    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with(&format!("p edge 50 {printed}\n")), "{text}");

    let loaded = load_dimacs(text.as_bytes()).unwrap();
    assert_eq!(loaded.n_edges(), printed);
    assert_eq!(loaded, Graph::generate_erdos_renyi(50, 4.0, 7).unwrap());
}

#[test]
fn generate_rejects_negative_degree_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.col");
    let output = run(&["generate", "--n", "10", "--c", "-1", "--out", out.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
    assert!(!out.exists());
}

#[test]
fn generate_to_unwritable_path_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("blocker");
    std::fs::write(&blocker, "not a directory").unwrap();
    let out = blocker.join("g.col");
    let output = run(&["generate", "--n", "10", "--c", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2), "{output:?}");
}

#[test]
fn solve_writes_trace_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let graph = generate_graph(dir.path(), "60", "5", "3");
    let prefix = dir.path().join("result");
    let output = run(&[
        "solve",
        graph.to_str().unwrap(),
        "--q",
        "3",
        "--iters",
        "20000",
        "--runs",
        "3",
        "--seed",
        "5",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{output:?}");

    let trace_path = dir.path().join("result.trace.csv");
    let summary_path = dir.path().join("result.summary.json");
    let rows = read_trace_csv(std::fs::File::open(&trace_path).unwrap()).unwrap();
    let summary = read_summary_json(std::fs::File::open(&summary_path).unwrap()).unwrap();

    // Default stride is iters/1000 = 20, so: step 0 plus 20000/20 samples.
    assert_eq!(rows.len(), 1001);
    assert_eq!(rows[0].step, 0);
    assert_eq!(rows.last().unwrap().step, 20_000);

    assert_eq!(summary.all_hmins.len(), 3);
    assert_eq!(summary.h_min, *summary.all_hmins.iter().min().unwrap());
    assert!(rows.iter().all(|r| r.h >= summary.h_min));
    assert_eq!(summary.config.q, 3);
    assert_eq!(summary.config.iters, 20_000);
    assert_eq!(summary.config.runs, 3);
    assert_eq!(summary.config.n_vertices, 60);
    assert!(summary.elapsed_seconds > 0.0);

    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains(&format!("h_min {}", summary.h_min)), "{stdout}");
}

#[test]
fn solve_uses_trace_stride_override() {
    let dir = tempfile::tempdir().unwrap();
    let graph = generate_graph(dir.path(), "20", "3", "1");
    let prefix = dir.path().join("strided");
    let output = run(&[
        "solve",
        graph.to_str().unwrap(),
        "--q",
        "3",
        "--iters",
        "10500",
        "--trace-stride",
        "1000",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{output:?}");
    let rows =
        read_trace_csv(std::fs::File::open(dir.path().join("strided.trace.csv")).unwrap()).unwrap();
    // ceil(10500/1000) samples after step 0: 1000, ..., 10000, then final 10500.
    assert_eq!(rows.len(), 12);
    assert_eq!(rows.last().unwrap().step, 10_500);
}

#[test]
fn solve_missing_graph_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&[
        "solve",
        dir.path().join("absent.col").to_str().unwrap(),
        "--q",
        "3",
        "--iters",
        "1000",
        "--out",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2), "{output:?}");
}

#[test]
fn solve_malformed_graph_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("bad.col");
    std::fs::write(&graph, "p edge 3 1\ne 1 9\n").unwrap();
    let output = run(&[
        "solve",
        graph.to_str().unwrap(),
        "--q",
        "3",
        "--iters",
        "1000",
        "--out",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2), "{output:?}");
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("line 2"), "{stderr}");
}

#[test]
fn solve_rejects_single_color_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let graph = generate_graph(dir.path(), "10", "2", "1");
    let output = run(&[
        "solve",
        graph.to_str().unwrap(),
        "--q",
        "1",
        "--iters",
        "1000",
        "--out",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
}

#[test]
fn sweep_writes_sorted_rows_for_every_cell() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let output = run(&[
        "sweep",
        "--n",
        "12",
        "--c",
        "1,2:4:2",
        "--q",
        "3,2",
        "--iters",
        "2000",
        "--runs",
        "2",
        "--seed",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{output:?}");
    let rows = read_sweep_csv(std::fs::File::open(&out).unwrap()).unwrap();
    let keys: Vec<(f64, u32)> = rows.iter().map(|r| (r.c, r.q)).collect();
    assert_eq!(
        keys,
        vec![(1.0, 2), (1.0, 3), (2.0, 2), (2.0, 3), (4.0, 2), (4.0, 3)]
    );
    for row in &rows {
        assert!(row.h_min <= row.n_edges);
    }
}

#[test]
fn sweep_rejects_malformed_degree_spec_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&[
        "sweep",
        "--n",
        "10",
        "--c",
        "nope",
        "--q",
        "3",
        "--iters",
        "100",
        "--out",
        dir.path().join("s.csv").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
}

#[test]
fn usage_error_exits_1_and_help_exits_0() {
    let output = run(&["solve"]); // missing required flags
    assert_eq!(output.status.code(), Some(1), "{output:?}");

    let output = run(&["--help"]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let stdout = String::from_utf8(output.stdout).unwrap();
    for subcommand in ["generate", "solve", "sweep"] {
        assert!(stdout.contains(subcommand), "{stdout}");
    }
}
