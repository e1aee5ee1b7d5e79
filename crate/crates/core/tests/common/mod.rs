//! Independent brute-force oracles. These deliberately avoid the library's
//! solvers: domination by scanning all vertex subsets, synchronous bondage
//! by scanning all edge subsets and demanding the exact increase.

// Each test target links only the oracles it needs.
#![allow(dead_code)]

use sbk_core::Graph;

/// True iff `mask` picks a dominating set, read straight off the adjacency.
pub fn oracle_is_dominating(g: &Graph, mask: u64) -> bool {
    (0..g.n()).all(|v| mask & (1 << v) != 0 || g.neighbors(v).any(|u| mask & (1 << u) != 0))
}

/// Domination number by unpruned iteration over all vertex subsets.
pub fn oracle_gamma(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n;
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < best && oracle_is_dominating(g, mask) {
            best = size;
        }
    }
    best
}

/// The graph left after removing the edges selected by `mask`.
pub fn remove_edge_mask(g: &Graph, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask & (1 << i) == 0)
        .map(|(_, &e)| e)
        .collect();
    Graph::new(g.n(), &pairs).expect("subgraph of a valid graph is valid")
}

/// Minimum size of an edge set whose removal raises gamma by exactly `k`,
/// by exhaustive scan over all edge subsets. `None` when infeasible.
///
/// Unlike the solver, this checks the exact increase directly, so it also
/// cross-validates the solver's "first size reaching the threshold"
/// reduction.
pub fn oracle_sbk(g: &Graph, k: usize) -> Option<usize> {
    let base = oracle_gamma(g);
    if base + k > g.n() {
        return None;
    }
    let m = g.edge_count();
    let mut best: Option<usize> = None;
    for mask in 0u64..(1 << m) {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        if oracle_gamma(&remove_edge_mask(g, mask)) == base + k {
            best = Some(size);
        }
    }
    best
}

/// All minimum dominating sets as sorted index vectors, by exhaustive scan.
pub fn oracle_all_min_dominating(g: &Graph) -> Vec<Vec<usize>> {
    let gamma = oracle_gamma(g);
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize == gamma && oracle_is_dominating(g, mask) {
            out.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
        }
    }
    out.sort();
    out
}
