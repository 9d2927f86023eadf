//! Conflict energy: the number of monochromatic edges under a coloring.

use std::fmt;

use crate::graph::Graph;

/// A color assignment for every vertex, together with the palette size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    n_colors: u32,
}

impl Coloring {
    /// Wraps an assignment vector.
    ///
    /// # Panics
    /// Panics if `n_colors == 0` or any entry is `>= n_colors`.
    pub fn new(colors: Vec<u32>, n_colors: u32) -> Self {
        assert!(n_colors >= 1, "palette must contain at least one color");
        assert!(
            colors.iter().all(|&c| c < n_colors),
            "color index out of range [0, {n_colors})"
        );
        Self { colors, n_colors }
    }

    /// Number of vertices colored.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    /// True when no vertices are colored.
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Palette size q.
    pub fn n_colors(&self) -> u32 {
        self.n_colors
    }

    /// Color of vertex `v`.
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Recolors vertex `v`.
    ///
    /// # Panics
    /// Panics if `color >= n_colors()` or `v` is out of range.
    pub fn set_color(&mut self, v: usize, color: u32) {
        assert!(color < self.n_colors, "color {color} outside [0, {})", self.n_colors);
        self.colors[v] = color;
    }

    /// The raw assignment, indexed by vertex.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }
}

/// Count of conflicting ("bad") edges. Always within `[0, n_edges]`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Energy(pub u64);

impl Energy {
    /// The underlying count.
    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Counts every edge whose endpoints share a color, each edge once.
///
/// # Panics
/// Panics if the coloring length differs from the vertex count.
pub fn full_energy(g: &Graph, x: &Coloring) -> Energy {
    assert_eq!(
        x.len(),
        g.n_vertices(),
        "coloring covers {} vertices but the graph has {}",
        x.len(),
        g.n_vertices()
    );
    let conflicts = g
        .edges()
        .filter(|&(v, w)| x.color(v) == x.color(w))
        .count() as u64;
    Energy(conflicts)
}

/// Number of neighbors of `v` currently holding `color`.
///
/// # Panics
/// Panics if `v` or `color` is out of range.
pub fn conflicts_at(g: &Graph, x: &Coloring, v: usize, color: u32) -> usize {
    assert!(color < x.n_colors(), "color {color} outside [0, {})", x.n_colors());
    g.neighbors(v).iter().filter(|&&w| x.color(w) == color).count()
}

/// Energy change of recoloring `v` to `new_color`, in O(deg(v)).
///
/// Exactly equals `full_energy` after the move minus `full_energy` before.
///
/// # Panics
/// Panics if `new_color` equals the current color of `v` or is out of range.
pub fn delta_energy(g: &Graph, x: &Coloring, v: usize, new_color: u32) -> i64 {
    let old_color = x.color(v);
    assert_ne!(
        new_color, old_color,
        "proposed color {new_color} equals the current color of vertex {v}"
    );
    assert!(
        new_color < x.n_colors(),
        "color {new_color} outside [0, {})",
        x.n_colors()
    );
    let mut gained = 0i64;
    let mut lost = 0i64;
    for &w in g.neighbors(v) {
        let cw = x.color(w);
        if cw == new_color {
            gained += 1;
        } else if cw == old_color {
            lost += 1;
        }
    }
    gained - lost
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    /// Independent route: recount conflicts from the explicit edge list the
    /// graph was built from, not through `Graph::edges`.
    fn naive_energy(edges: &[(usize, usize)], x: &Coloring) -> u64 {
        edges.iter().filter(|&&(v, w)| x.color(v) == x.color(w)).count() as u64
    }

    fn random_graph_edges(rng: &mut impl Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    fn random_coloring(rng: &mut impl Rng, n: usize, q: u32) -> Coloring {
        Coloring::new((0..n).map(|_| rng.random_range(0..q)).collect(), q)
    }

    #[test]
    fn monochromatic_triangle_has_energy_three() {
        let x = Coloring::new(vec![0, 0, 0], 3);
        assert_eq!(full_energy(&k3(), &x), Energy(3));
    }

    #[test]
    fn proper_coloring_has_zero_energy() {
        let x = Coloring::new(vec![0, 1, 2], 3);
        assert_eq!(full_energy(&k3(), &x), Energy(0));
    }

    #[test]
    fn full_energy_matches_naive_edge_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let edges = random_graph_edges(&mut rng, 8, 0.4);
            let g = Graph::from_edges(8, edges.iter().copied()).unwrap();
            let x = random_coloring(&mut rng, 8, 3);
            assert_eq!(full_energy(&g, &x).value(), naive_energy(&edges, &x));
        }
    }

    #[test]
    fn conflicts_at_matches_examples_and_naive_scan() {
        let g = k3();
        let x = Coloring::new(vec![0, 0, 0], 3);
        assert_eq!(conflicts_at(&g, &x, 0, 0), 2);
        assert_eq!(conflicts_at(&g, &x, 0, 1), 0);

        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let edges = random_graph_edges(&mut rng, 10, 0.3);
            let g = Graph::from_edges(10, edges.iter().copied()).unwrap();
            let x = random_coloring(&mut rng, 10, 4);
            let v = rng.random_range(0..10);
            let color = rng.random_range(0..4);
            let naive = (0..10)
                .filter(|&w| {
                    w != v
                        && x.color(w) == color
                        && (edges.contains(&(v.min(w), v.max(w))))
                })
                .count();
            assert_eq!(conflicts_at(&g, &x, v, color), naive);
        }
    }

    #[test]
    fn delta_recolor_away_from_monochromatic_triangle() {
        let x = Coloring::new(vec![0, 0, 0], 3);
        assert_eq!(delta_energy(&k3(), &x, 0, 1), -2);
    }

    #[test]
    fn delta_on_isolated_vertex_is_zero() {
        let g = Graph::from_edges(1, []).unwrap();
        let x = Coloring::new(vec![0], 2);
        assert_eq!(delta_energy(&g, &x, 0, 1), 0);
    }

    /// 10^5 random (graph, coloring, move) triples: the incremental delta must
    /// equal the full-recompute difference, and stay within ±deg(v).
    #[test]
    fn delta_equals_full_recompute_difference() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut checked = 0u32;
        while checked < 100_000 {
            let n = rng.random_range(2..16);
            let q = rng.random_range(2..6);
            let p = rng.random_range(0.05..0.8);
            let edges = random_graph_edges(&mut rng, n, p);
            let g = Graph::from_edges(n, edges).unwrap();
            let mut x = random_coloring(&mut rng, n, q);
            for _ in 0..50 {
                let v = rng.random_range(0..n);
                let mut new_color = rng.random_range(0..q - 1);
                if new_color >= x.color(v) {
                    new_color += 1;
                }
                let before = full_energy(&g, &x);
                let delta = delta_energy(&g, &x, v, new_color);
                assert!(delta.unsigned_abs() as usize <= g.degree(v));
                let old_color = x.color(v);
                x.set_color(v, new_color);
                let after = full_energy(&g, &x);
                assert_eq!(
                    delta,
                    after.value() as i64 - before.value() as i64,
                    "mismatch for vertex {v}: {old_color} -> {new_color}"
                );
                checked += 1;
            }
        }
    }

    #[test]
    #[should_panic]
    fn full_energy_rejects_length_mismatch() {
        let x = Coloring::new(vec![0, 1], 2);
        let _ = full_energy(&k3(), &x);
    }

    #[test]
    #[should_panic]
    fn delta_rejects_current_color() {
        let x = Coloring::new(vec![0, 0, 0], 3);
        let _ = delta_energy(&k3(), &x, 0, 0);
    }

    proptest! {
        /// Energy is invariant under any permutation of the color labels.
        #[test]
        fn color_permutation_symmetry(
            n in 1usize..24,
            seed in any::<u64>(),
            q in 2u32..6,
            perm_seed in any::<u64>(),
        ) {
            let g = Graph::generate_erdos_renyi(n, (n - 1) as f64 * 0.3, seed).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xABCD);
            let x = random_coloring(&mut rng, n, q);

            let mut perm: Vec<u32> = (0..q).collect();
            let mut perm_rng = ChaCha8Rng::seed_from_u64(perm_seed);
            for i in (1..perm.len()).rev() {
                perm.swap(i, perm_rng.random_range(0..=i));
            }
            let permuted = Coloring::new(
                x.colors().iter().map(|&c| perm[c as usize]).collect(),
                q,
            );
            prop_assert_eq!(full_energy(&g, &x), full_energy(&g, &permuted));
        }

        /// 0 <= H <= n_edges for arbitrary graphs and colorings.
        #[test]
        fn energy_is_bounded_by_edge_count(
            n in 1usize..24,
            seed in any::<u64>(),
            q in 1u32..6,
        ) {
            let g = Graph::generate_erdos_renyi(n, (n - 1) as f64 * 0.5, seed).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_coloring(&mut rng, n, q);
            let h = full_energy(&g, &x);
            prop_assert!(h.value() <= g.n_edges() as u64);
        }
    }
}
