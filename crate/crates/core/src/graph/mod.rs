//! Undirected simple graphs in adjacency-list form, plus Erdős–Rényi generation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

mod dimacs;
pub use dimacs::{load_dimacs, save_dimacs};

/// Immutable undirected simple graph.
///
/// Neighbor lists are sorted ascending, free of duplicates and self-loops,
/// and symmetric: `w ∈ neighbors(v)` iff `v ∈ neighbors(w)`. Once built, a
/// graph never changes, so it can be shared freely across worker threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    n_edges: usize,
}

impl Graph {
    /// Builds a graph over `n_vertices` vertices from an edge list.
    ///
    /// Duplicate edges and both orientations of the same edge collapse to a
    /// single undirected edge. Self-loops and endpoints `>= n_vertices` are
    /// rejected with [`Error::InvalidParameter`].
    pub fn from_edges(
        n_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n_vertices];
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            let hi = u.max(v);
            if hi >= n_vertices {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) references vertex {hi} but the graph has {n_vertices} vertices"
                )));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let n_edges = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self { adjacency, n_edges })
    }

    /// Samples G(N, p) with p chosen so the expected vertex degree is
    /// `avg_degree`: each of the C(N, 2) unordered pairs becomes an edge
    /// independently with probability `avg_degree / (n_vertices - 1)`.
    ///
    /// Deterministic for a fixed `(n_vertices, avg_degree, seed)` triple.
    pub fn generate_erdos_renyi(n_vertices: usize, avg_degree: f64, seed: u64) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidParameter(
                "graph must have at least one vertex".into(),
            ));
        }
        let max_degree = (n_vertices - 1) as f64;
        if !avg_degree.is_finite() || avg_degree < 0.0 || avg_degree > max_degree {
            return Err(Error::InvalidParameter(format!(
                "average degree {avg_degree} outside [0, {max_degree}] for {n_vertices} vertices"
            )));
        }
        let p = if n_vertices == 1 { 0.0 } else { avg_degree / max_degree };

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut adjacency = vec![Vec::new(); n_vertices];
        let mut n_edges = 0;
        for u in 0..n_vertices {
            for v in (u + 1)..n_vertices {
                if rng.random_bool(p) {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                    n_edges += 1;
                }
            }
        }
        // Pair order is (0,1), (0,2), ..., so every list comes out sorted.
        Ok(Self { adjacency, n_edges })
    }

    /// Number of vertices.
    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of undirected edges, each counted once.
    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    /// Degree of vertex `v`.
    ///
    /// # Panics
    /// Panics if `v >= n_vertices()`.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbors of `v` in ascending order; the order is stable across calls.
    ///
    /// # Panics
    /// Panics if `v >= n_vertices()`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Iterates every undirected edge exactly once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }
}
