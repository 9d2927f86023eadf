//! Exhaustive-search oracles for small instances.
//!
//! Both searches walk the coloring tree vertex by vertex, counting conflicts
//! only against already-assigned neighbors — a route independent of both
//! `full_energy` and the sampler's incremental deltas.

use crate::energy::Energy;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard ceiling on vertices for exhaustive search.
pub const MAX_ORACLE_VERTICES: usize = 16;

/// Hard ceiling on the q^N colorings an oracle call may visit.
pub const MAX_ORACLE_STATES: u128 = 1 << 30;

fn check_budget(g: &Graph, q: u32) -> Result<()> {
    if q == 0 {
        return Err(Error::InvalidParameter("palette must contain at least one color".into()));
    }
    let n = g.n_vertices();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices exceeds the exhaustive-search limit of {MAX_ORACLE_VERTICES}"
        )));
    }
    let states = (q as u128)
        .checked_pow(n as u32)
        .filter(|&s| s <= MAX_ORACLE_STATES);
    if states.is_none() {
        return Err(Error::BudgetExceeded(format!(
            "{q}^{n} colorings exceed the exhaustive-search limit of {MAX_ORACLE_STATES}"
        )));
    }
    Ok(())
}

/// Exact number of proper colorings (zero-conflict assignments) with `q` colors.
///
/// Refuses graphs beyond the exhaustive budget.
pub fn count_proper_colorings(g: &Graph, q: u32) -> Result<u64> {
    check_budget(g, q)?;
    let mut colors = vec![0u32; g.n_vertices()];
    let mut count = 0u64;
    count_rec(g, q, 0, &mut colors, &mut count);
    Ok(count)
}

fn count_rec(g: &Graph, q: u32, v: usize, colors: &mut [u32], count: &mut u64) {
    if v == colors.len() {
        *count += 1;
        return;
    }
    'colors: for c in 0..q {
        for &w in g.neighbors(v) {
            if w < v && colors[w] == c {
                continue 'colors;
            }
        }
        colors[v] = c;
        count_rec(g, q, v + 1, colors, count);
    }
}

/// Exact global minimum of the conflict energy over all q^N colorings.
///
/// Branches with at least as many conflicts as the best complete assignment
/// are cut; every optimal leaf remains reachable, so the minimum is exact.
pub fn brute_force_hmin(g: &Graph, q: u32) -> Result<Energy> {
    check_budget(g, q)?;
    let mut colors = vec![0u32; g.n_vertices()];
    let mut best = u64::MAX;
    hmin_rec(g, q, 0, 0, &mut colors, &mut best);
    Ok(Energy(if g.n_vertices() == 0 { 0 } else { best }))
}

fn hmin_rec(g: &Graph, q: u32, v: usize, conflicts: u64, colors: &mut [u32], best: &mut u64) {
    if conflicts >= *best {
        return;
    }
    if v == colors.len() {
        *best = conflicts;
        return;
    }
    for c in 0..q {
        let added = g.neighbors(v).iter().filter(|&&w| w < v && colors[w] == c).count() as u64;
        colors[v] = c;
        hmin_rec(g, q, v + 1, conflicts + added, colors, best);
    }
}
