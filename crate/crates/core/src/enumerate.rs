//! Exhaustive labeled-graph enumeration and seeded random generators.
//!
//! Graphs are labeled; no isomorphism reduction is performed. Every claim
//! verified over the enumeration is isomorphism-invariant, so checking all
//! labelings is sound, just redundant.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order cap for exhaustive enumeration: 2^21 labeled graphs at n = 7
/// is the largest size where downstream searches stay desk-scale.
pub const DEFAULT_ENUMERATION_CAP: usize = 7;

/// All vertex pairs `(u,v)` with `u < v`, in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Streams every labeled graph on `n` vertices exactly once, ordered by the
/// edge-subset integer over the lexicographic pair list. With
/// `connected_only`, disconnected graphs are filtered out.
pub fn enumerate_labeled_graphs(
    n: usize,
    connected_only: bool,
    cap: usize,
) -> Result<LabeledGraphs> {
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    let pairs = all_pairs(n);
    if pairs.len() >= 64 {
        return Err(Error::InvalidParam(format!(
            "cannot enumerate n = {n}: pair count {} exceeds the subset word",
            pairs.len()
        )));
    }
    Ok(LabeledGraphs {
        n,
        pairs,
        next_mask: 0,
        done: false,
        connected_only,
    })
}

pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    done: bool,
    connected_only: bool,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let end = 1u64 << self.pairs.len();
        while !self.done {
            let mask = self.next_mask;
            if self.next_mask + 1 == end {
                self.done = true;
            } else {
                self.next_mask += 1;
            }
            let g = graph_from_pair_mask(self.n, &self.pairs, mask);
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

fn graph_from_pair_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask & (1 << i) != 0)
        .map(|(_, &p)| p)
        .collect();
    Graph::from_sorted_edges(n, edges)
}

/// Streams every labeled graph with `n` vertices and exactly `m` edges, in
/// lexicographic order of the chosen pair-index sets.
pub fn graphs_with_edge_count(
    n: usize,
    m: usize,
    cap: usize,
) -> Result<impl Iterator<Item = Graph>> {
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    let pairs = all_pairs(n);
    if m > pairs.len() {
        return Err(Error::InvalidParam(format!(
            "m = {m} exceeds maximum edge count {} for n = {n}",
            pairs.len()
        )));
    }
    Ok(Combinations::new(pairs.len(), m)
        .map(move |idxs| {
            let edges = idxs.iter().map(|&i| pairs[i]).collect();
            Graph::from_sorted_edges(n, edges)
        }))
}

/// Lexicographic k-combinations of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    current: Vec<usize>,
    started: bool,
    exhausted: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            current: (0..k).collect(),
            started: false,
            exhausted: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        let k = self.current.len();
        // Advance the rightmost index that can still move.
        let mut i = k;
        loop {
            if i == 0 {
                self.exhausted = true;
                return None;
            }
            i -= 1;
            if self.current[i] + (k - i) < self.n {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return Some(self.current.clone());
            }
        }
    }
}

/// Uniform labeled graph on `n` vertices (each pair present with odds 1/2).
pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let pairs = all_pairs(n);
    let edges = pairs
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::from_sorted_edges(n, edges)
}

/// Random connected labeled graph, by rejection sampling over [`random_graph`].
pub fn random_connected_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    loop {
        let g = random_graph(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform random labeled tree on `n >= 1` vertices via a Pruefer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1, "tree needs at least one vertex");
    if n == 1 {
        return Graph::from_sorted_edges(1, Vec::new());
    }
    if n == 2 {
        return Graph::from_sorted_edges(2, vec![(0, 1)]);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push(if leaf < x { (leaf, x) } else { (x, leaf) });
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let a = last.next().unwrap();
    let b = last.next().unwrap();
    edges.push((a, b));
    edges.sort_unstable();
    Graph::from_sorted_edges(n, edges)
}
