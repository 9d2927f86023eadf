//! Throughput benches for the hot paths: energy evaluation, single proposals,
//! graph generation, and a short end-to-end run.

use std::hint::black_box;

use criterion::{Criterion, criterion_group, criterion_main};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sa_coloring::{AnnealConfig, Graph, delta_energy, full_energy, metropolis_step, run};
use sa_coloring_bench::{bench_coloring, bench_graph};

fn energy_benches(c: &mut Criterion) {
    let g = bench_graph(10.0);
    let x = bench_coloring(&g, 5);

    c.bench_function("full_energy/n1000_c10", |b| {
        b.iter(|| full_energy(black_box(&g), black_box(&x)))
    });

    c.bench_function("delta_energy/n1000_c10", |b| {
        let mut v = 0usize;
        b.iter(|| {
            v = (v + 1) % g.n_vertices();
            let new_color = (x.color(v) + 1) % 5;
            delta_energy(black_box(&g), black_box(&x), v, new_color)
        })
    });
}

fn step_bench(c: &mut Criterion) {
    let g = bench_graph(10.0);

    c.bench_function("metropolis_step/n1000_c10_q5", |b| {
        let mut x = bench_coloring(&g, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        b.iter(|| metropolis_step(black_box(&g), &mut x, 0.8, &mut rng))
    });
}

fn generation_bench(c: &mut Criterion) {
    c.bench_function("generate_erdos_renyi/n1000_c10", |b| {
        let mut seed = 0u64;
        b.iter(|| {
            seed += 1;
            Graph::generate_erdos_renyi(1000, 10.0, black_box(seed)).unwrap()
        })
    });
}

fn short_run_bench(c: &mut Criterion) {
    let g = bench_graph(5.0);

    c.bench_function("run/n1000_c5_q5_100k_iters", |b| {
        let mut seed = 0u64;
        b.iter(|| {
            seed += 1;
            run(&g, &AnnealConfig::new(5, 100_000, black_box(seed))).unwrap()
        })
    });
}

criterion_group!(
    benches,
    energy_benches,
    step_bench,
    generation_bench,
    short_run_bench
);
criterion_main!(benches);
