//! Exact domination numbers via branch and bound over closed neighborhoods,
//! minimum-dominating-set enumeration, and the pendant structure that forces
//! vertices into every minimum dominating set.

use serde::Serialize;

use crate::budget::Meter;
use crate::enumerate::Combinations;
use crate::error::Result;
use crate::graph::{BitIter, Graph, VertexSet};

/// An exact domination number together with its canonical witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub gamma: usize,
    /// Lexicographically smallest minimum dominating set.
    pub witness: VertexSet,
}

/// True iff every vertex is in `d` or adjacent to a member of `d`.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    debug_assert!(d.validate_for(g).is_ok());
    let mask = d.as_mask();
    (0..g.n()).all(|v| g.closed_mask(v) & mask != 0)
}

/// Exact domination number with the lexicographically smallest witness.
///
/// The empty graph has gamma 0 with an empty witness.
pub fn domination_number(g: &Graph, meter: &mut Meter) -> Result<DominationResult> {
    let closed = g.closed_neighborhoods();
    let gamma = gamma_value(&closed, meter)?;
    let witness = lex_min_dominating(&closed, gamma, meter)?;
    Ok(DominationResult { gamma, witness })
}

/// Every minimum dominating set, duplicate-free, in lexicographic order.
pub fn all_min_dominating_sets(g: &Graph, meter: &mut Meter) -> Result<Vec<VertexSet>> {
    let closed = g.closed_neighborhoods();
    let gamma = gamma_value(&closed, meter)?;
    let mut out = Vec::new();
    for combo in Combinations::new(g.n(), gamma) {
        meter.tick_subset()?;
        let mask = combo.iter().fold(0u64, |m, &v| m | (1 << v));
        if dominates(&closed, mask) {
            out.push(VertexSet::from_sorted_unchecked(combo));
        }
    }
    Ok(out)
}

/// Vertices with at least two degree-1 neighbors. Each belongs to every
/// minimum dominating set.
pub fn forced_pendant_vertices(g: &Graph) -> VertexSet {
    let forced = (0..g.n())
        .filter(|&r| g.neighbors(r).filter(|&a| g.degree(a) == 1).count() >= 2)
        .collect();
    VertexSet::from_sorted_unchecked(forced)
}

/// The pendant structure `(R, A)`: `R` holds the vertices with at least two
/// degree-1 neighbors, and `A` the degree-1 vertices attached to `R`.
pub fn pendant_partition(g: &Graph) -> (VertexSet, VertexSet) {
    let r = forced_pendant_vertices(g);
    let r_mask = r.as_mask();
    let a = (0..g.n())
        .filter(|&v| g.degree(v) == 1 && g.adjacency_mask(v) & r_mask != 0)
        .collect();
    (r, VertexSet::from_sorted_unchecked(a))
}

#[inline]
fn dominates(closed: &[u64], mask: u64) -> bool {
    closed.iter().all(|&c| c & mask != 0)
}

fn lex_min_dominating(closed: &[u64], gamma: usize, meter: &mut Meter) -> Result<VertexSet> {
    for combo in Combinations::new(closed.len(), gamma) {
        meter.tick_subset()?;
        let mask = combo.iter().fold(0u64, |m, &v| m | (1 << v));
        if dominates(closed, mask) {
            return Ok(VertexSet::from_sorted_unchecked(combo));
        }
    }
    unreachable!("a dominating set of size gamma always exists")
}

/// Branch-and-bound state over closed-neighborhood masks.
struct Search<'a> {
    closed: &'a [u64],
    full: u64,
    meter: &'a mut Meter,
}

impl<'a> Search<'a> {
    fn new(closed: &'a [u64], meter: &'a mut Meter) -> Search<'a> {
        let n = closed.len();
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        Search {
            closed,
            full,
            meter,
        }
    }

    /// Isolated vertices dominate only themselves; force them up front.
    fn forced_start(&self) -> (u64, usize) {
        let mut dominated = 0u64;
        let mut count = 0;
        for (v, &c) in self.closed.iter().enumerate() {
            if c == 1 << v {
                dominated |= c;
                count += 1;
            }
        }
        (dominated, count)
    }

    fn greedy_upper_bound(&self, mut dominated: u64, mut count: usize) -> usize {
        while dominated != self.full {
            let mut best = 0;
            let mut gain = 0;
            for (v, &c) in self.closed.iter().enumerate() {
                let g = (c & !dominated).count_ones();
                if g > gain {
                    gain = g;
                    best = v;
                }
            }
            dominated |= self.closed[best];
            count += 1;
        }
        count
    }

    /// Undominated vertices with pairwise disjoint closed neighborhoods each
    /// need their own dominator.
    fn packing_lower_bound(&self, dominated: u64) -> usize {
        let mut blocked = 0u64;
        let mut count = 0;
        for (v, &c) in self.closed.iter().enumerate() {
            if dominated & (1 << v) == 0 && c & blocked == 0 {
                blocked |= c;
                count += 1;
            }
        }
        count
    }

    /// Minimum-degree undominated vertex; ties broken by index.
    fn branch_vertex(&self, dominated: u64) -> usize {
        let mut best = usize::MAX;
        let mut best_deg = u32::MAX;
        for (v, &c) in self.closed.iter().enumerate() {
            if dominated & (1 << v) == 0 {
                let deg = c.count_ones();
                if deg < best_deg {
                    best_deg = deg;
                    best = v;
                }
            }
        }
        best
    }

    fn minimize(&mut self, dominated: u64, count: usize, best: &mut usize) -> Result<()> {
        self.meter.tick_node()?;
        if dominated == self.full {
            *best = (*best).min(count);
            return Ok(());
        }
        if count + self.packing_lower_bound(dominated) >= *best {
            return Ok(());
        }
        let v = self.branch_vertex(dominated);
        for u in BitIter(self.closed[v]) {
            self.minimize(dominated | self.closed[u], count + 1, best)?;
        }
        Ok(())
    }

    fn exists_within(&mut self, dominated: u64, count: usize, limit: usize) -> Result<bool> {
        self.meter.tick_node()?;
        if dominated == self.full {
            return Ok(true);
        }
        if count >= limit || count + self.packing_lower_bound(dominated) > limit {
            return Ok(false);
        }
        let v = self.branch_vertex(dominated);
        for u in BitIter(self.closed[v]) {
            if self.exists_within(dominated | self.closed[u], count + 1, limit)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Exact gamma from closed-neighborhood masks.
pub(crate) fn gamma_value(closed: &[u64], meter: &mut Meter) -> Result<usize> {
    if closed.is_empty() {
        return Ok(0);
    }
    let mut search = Search::new(closed, meter);
    let (dominated, count) = search.forced_start();
    let mut best = search.greedy_upper_bound(dominated, count);
    search.minimize(dominated, count, &mut best)?;
    Ok(best)
}

/// Decision query: does a dominating set of size at most `limit` exist?
pub(crate) fn exists_dominating_le(
    closed: &[u64],
    limit: usize,
    meter: &mut Meter,
) -> Result<bool> {
    if closed.is_empty() {
        return Ok(true);
    }
    let mut search = Search::new(closed, meter);
    let (dominated, count) = search.forced_start();
    if count > limit {
        return Ok(false);
    }
    if dominated == search.full {
        return Ok(true);
    }
    search.exists_within(dominated, count, limit)
}
