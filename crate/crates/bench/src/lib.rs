//! Shared fixtures for the criterion benches.

use sa_coloring::{Coloring, Graph, init_coloring};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The 1000-vertex instance the benches anneal.
pub fn bench_graph(avg_degree: f64) -> Graph {
    Graph::generate_erdos_renyi(1000, avg_degree, 0xBE5C).unwrap()
}

/// A reproducible random coloring for `g`.
pub fn bench_coloring(g: &Graph, q: u32) -> Coloring {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0108);
    init_coloring(g.n_vertices(), q, &mut rng).unwrap()
}
