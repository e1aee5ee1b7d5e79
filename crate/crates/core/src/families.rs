//! Closed-form synchronous bondage values for graph families, degree-based
//! upper bounds, the maximum-edge bound with its extremal construction, and
//! the disjoint-union composition rule.

use serde::Serialize;

use crate::domination::pendant_partition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// A structural bound value with the vertex pattern realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound_name: &'static str,
    pub value: usize,
    pub witness: VertexSet,
}

/// The guaranteed synchronous bondage forced by surplus pendant edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PendantSbk {
    pub k_star: usize,
    pub value: usize,
}

fn path_feasible(n: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParam("increase k must be >= 1".into()));
    }
    if n.div_ceil(3) + k > n {
        return Err(Error::InfeasibleIncrease { k });
    }
    Ok(())
}

/// Bondage number of the path on `n >= 2` vertices: 2 when `n = 1 (mod 3)`,
/// else 1.
pub fn bondage_path_formula(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidParam(format!(
            "path bondage needs n >= 2, got {n}"
        )));
    }
    Ok(if n % 3 == 1 { 2 } else { 1 })
}

/// Two-step synchronous bondage of the path: 2 when `n = 0 (mod 3)`, else 3.
pub fn sb2_path_formula(n: usize) -> Result<usize> {
    path_feasible(n, 2)?;
    Ok(if n.is_multiple_of(3) { 2 } else { 3 })
}

/// Synchronous bondage of the path for any feasible `k`.
pub fn sbk_path_formula(n: usize, k: usize) -> Result<usize> {
    path_feasible(n, k)?;
    Ok(match n % 3 {
        0 => (3 * k - 1) / 2,
        1 => (3 * k).div_ceil(2),
        _ => (3 * k - 1).div_ceil(2),
    })
}

/// Synchronous bondage of the cycle: one more than the path value for the
/// matching residue, since the first removed edge only turns the cycle into
/// a path.
pub fn sbk_cycle_formula(n: usize, k: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidParam(format!(
            "cycle formula needs n >= 3, got {n}"
        )));
    }
    path_feasible(n, k)?;
    Ok(sbk_path_formula(n, k)? + 1)
}

/// Synchronous bondage of the complete graph.
pub fn sbk_complete_formula(n: usize, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidParam("increase k must be >= 1".into()));
    }
    if k + 1 > n {
        return Err(Error::InfeasibleIncrease { k });
    }
    let t = n - k - 1;
    Ok(n * (n - 1) / 2 - t * (t + 2) / 2)
}

/// Maximum edge count of an order-`n` graph with domination number `d >= 2`.
pub fn vizing_max_edges(n: usize, d: usize) -> Result<usize> {
    if d < 2 || d > n {
        return Err(Error::InvalidParam(format!(
            "bound needs 2 <= d <= n, got d = {d}, n = {n}"
        )));
    }
    Ok((n - d) * (n - d + 2) / 2)
}

/// The extremal graph attaining [`vizing_max_edges`]: a clique of order
/// `n - d + 2` minus a minimum edge cover, plus `d - 2` isolated vertices.
pub fn vizing_extremal_graph(n: usize, d: usize) -> Result<Graph> {
    vizing_max_edges(n, d)?;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    let m = n - d + 2;
    let mut cover = vec![false; m * m];
    let mut mark = |u: usize, v: usize| cover[u * m + v] = true;
    for i in (0..m - 1).step_by(2) {
        mark(i, i + 1);
    }
    if m % 2 == 1 {
        mark(m - 2, m - 1);
    }
    let mut edges = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            if !cover[u * m + v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Lower and upper synchronous bondage bounds for trees: `(k, 2k)`.
pub fn tree_bounds(k: usize) -> (usize, usize) {
    assert!(k >= 1, "tree bounds need k >= 1");
    (k, 2 * k)
}

/// When the pendant surplus `|A| - |R|` is positive, that many edge removals
/// are necessary and sufficient to raise gamma by exactly that amount.
pub fn pendant_sbk(g: &Graph) -> Option<PendantSbk> {
    let (r, a) = pendant_partition(g);
    if a.len() > r.len() {
        let k_star = a.len() - r.len();
        Some(PendantSbk {
            k_star,
            value: k_star,
        })
    } else {
        None
    }
}

/// Degree-sum upper bound on Sb2 over all paths `u - v - w`: isolating the
/// three vertices costs `deg(u) + deg(v) + deg(w) - sigma(u,v,w)` edges.
pub fn induced_p3_bound(g: &Graph) -> Result<BoundReport> {
    let mut best: Option<(usize, VertexSet)> = None;
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                let sigma = 2 + usize::from(g.has_edge(u, w));
                let value = g.degree(u) + g.degree(v) + g.degree(w) - sigma;
                if best.as_ref().is_none_or(|(b, _)| value < *b) {
                    let mut vs = vec![u, v, w];
                    vs.sort_unstable();
                    best = Some((value, VertexSet::from_sorted_unchecked(vs)));
                }
            }
        }
    }
    match best {
        Some((value, witness)) => Ok(BoundReport {
            bound_name: "induced-p3",
            value,
            witness,
        }),
        None => Err(Error::PatternAbsent("no path u-v-w in the graph")),
    }
}

/// Degree-sum upper bound on Sb2 over pairs of edges `uv`, `st` whose four
/// endpoints induce exactly those two edges.
pub fn induced_2p2_bound(g: &Graph) -> Result<BoundReport> {
    let edges = g.edges();
    let mut best: Option<(usize, VertexSet)> = None;
    for (i, &(u, v)) in edges.iter().enumerate() {
        for &(s, t) in &edges[i + 1..] {
            if s == u || s == v || t == u || t == v {
                continue;
            }
            if g.has_edge(u, s) || g.has_edge(u, t) || g.has_edge(v, s) || g.has_edge(v, t) {
                continue;
            }
            let value = g.degree(u) + g.degree(v) + g.degree(s) + g.degree(t) - 2;
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                let mut vs = vec![u, v, s, t];
                vs.sort_unstable();
                best = Some((value, VertexSet::from_sorted_unchecked(vs)));
            }
        }
    }
    match best {
        Some((value, witness)) => Ok(BoundReport {
            bound_name: "induced-2p2",
            value,
            witness,
        }),
        None => Err(Error::PatternAbsent(
            "no pair of edges inducing exactly two edges",
        )),
    }
}

/// Composition over disjoint components: the minimum cost of distributing a
/// total increase `k` across components, where `tables[i][j-1]` holds
/// `Sb_j` of component `i` (`None` where infeasible).
pub fn disjoint_compose_sbk(tables: &[Vec<Option<usize>>], k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidParam("increase k must be >= 1".into()));
    }
    const INF: usize = usize::MAX;
    let mut dp = vec![INF; k + 1];
    dp[0] = 0;
    for table in tables {
        let mut next = dp.clone();
        for j in 1..=k {
            for (l, entry) in table.iter().enumerate().take(j) {
                let l = l + 1;
                if let (Some(cost), prev) = (entry, dp[j - l]) {
                    if prev != INF {
                        next[j] = next[j].min(prev + cost);
                    }
                }
            }
        }
        dp = next;
    }
    if dp[k] == INF {
        Err(Error::InfeasibleIncrease { k })
    } else {
        Ok(dp[k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Meter;
    use crate::domination::domination_number;
    use crate::graph::FamilySpec;

    #[test]
    fn path_bondage_values() {
        assert_eq!(bondage_path_formula(4).unwrap(), 2);
        assert_eq!(bondage_path_formula(6).unwrap(), 1);
        assert_eq!(bondage_path_formula(2).unwrap(), 1);
        assert!(bondage_path_formula(1).is_err());
    }

    #[test]
    fn sb2_path_values() {
        assert_eq!(sb2_path_formula(6).unwrap(), 2);
        assert_eq!(sb2_path_formula(7).unwrap(), 3);
        assert_eq!(sb2_path_formula(8).unwrap(), 3);
        // P3 already admits the increase: removing both edges isolates it.
        assert_eq!(sb2_path_formula(3).unwrap(), 2);
        assert!(matches!(
            sb2_path_formula(2),
            Err(Error::InfeasibleIncrease { .. })
        ));
    }

    #[test]
    fn sbk_path_reduces_to_small_k() {
        for n in 4..=12 {
            assert_eq!(
                sbk_path_formula(n, 1).unwrap(),
                bondage_path_formula(n).unwrap(),
                "n = {n}"
            );
            assert_eq!(
                sbk_path_formula(n, 2).unwrap(),
                sb2_path_formula(n).unwrap(),
                "n = {n}"
            );
        }
        assert_eq!(sbk_path_formula(9, 3).unwrap(), 4);
        assert!(sbk_path_formula(5, 9).is_err());
    }

    #[test]
    fn cycle_values() {
        assert_eq!(sbk_cycle_formula(4, 1).unwrap(), 3);
        assert_eq!(sbk_cycle_formula(6, 1).unwrap(), 2);
        assert_eq!(sbk_cycle_formula(5, 1).unwrap(), 2);
        assert!(matches!(
            sbk_cycle_formula(2, 1),
            Err(Error::InvalidParam(_))
        ));
        assert!(matches!(
            sbk_cycle_formula(3, 3),
            Err(Error::InfeasibleIncrease { .. })
        ));
    }

    #[test]
    fn complete_values() {
        assert_eq!(sbk_complete_formula(4, 1).unwrap(), 2);
        assert_eq!(sbk_complete_formula(4, 2).unwrap(), 5);
        // Removing everything is the only way to reach gamma = n.
        for n in 2..=7 {
            assert_eq!(sbk_complete_formula(n, n - 1).unwrap(), n * (n - 1) / 2);
        }
        assert!(matches!(
            sbk_complete_formula(4, 4),
            Err(Error::InfeasibleIncrease { .. })
        ));
    }

    #[test]
    fn vizing_edge_counts() {
        assert_eq!(vizing_max_edges(4, 2).unwrap(), 4);
        assert_eq!(vizing_max_edges(5, 2).unwrap(), 7);
        assert_eq!(vizing_max_edges(5, 5).unwrap(), 0);
        assert!(vizing_max_edges(4, 1).is_err());
        assert!(vizing_max_edges(3, 4).is_err());
    }

    #[test]
    fn vizing_extremal_attains_bound() {
        for n in 2..=8 {
            for d in 2..=n {
                let g = vizing_extremal_graph(n, d).unwrap();
                assert_eq!(g.n(), n);
                assert_eq!(g.edge_count(), vizing_max_edges(n, d).unwrap());
                let gamma = domination_number(&g, &mut Meter::with_defaults())
                    .unwrap()
                    .gamma;
                assert_eq!(gamma, d, "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn tree_bound_pairs() {
        assert_eq!(tree_bounds(1), (1, 2));
        assert_eq!(tree_bounds(2), (2, 4));
    }

    #[test]
    fn pendant_values() {
        let star4 = FamilySpec::Star(4).generate().unwrap();
        assert_eq!(
            pendant_sbk(&star4),
            Some(PendantSbk { k_star: 3, value: 3 })
        );
        let p6 = FamilySpec::Path(6).generate().unwrap();
        assert_eq!(pendant_sbk(&p6), None);

        // Double star: joined centers 0 and 1, two leaves each.
        let ds = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(pendant_sbk(&ds).unwrap().k_star, 2);
    }

    #[test]
    fn p3_bound_values() {
        let p3 = FamilySpec::Path(3).generate().unwrap();
        let r = induced_p3_bound(&p3).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.indices(), &[0, 1, 2]);

        let k3 = FamilySpec::Complete(3).generate().unwrap();
        assert_eq!(induced_p3_bound(&k3).unwrap().value, 3);

        let c4 = FamilySpec::Cycle(4).generate().unwrap();
        assert_eq!(induced_p3_bound(&c4).unwrap().value, 4);

        let k2 = FamilySpec::Complete(2).generate().unwrap();
        assert!(matches!(
            induced_p3_bound(&k2),
            Err(Error::PatternAbsent(_))
        ));
    }

    #[test]
    fn two_p2_bound_values() {
        let p2 = FamilySpec::Path(2).generate().unwrap();
        let two = p2.disjoint_union(&p2).unwrap();
        assert_eq!(induced_2p2_bound(&two).unwrap().value, 2);

        let p5 = FamilySpec::Path(5).generate().unwrap();
        let r = induced_2p2_bound(&p5).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.witness.indices(), &[0, 1, 3, 4]);

        let k4 = FamilySpec::Complete(4).generate().unwrap();
        assert!(matches!(
            induced_2p2_bound(&k4),
            Err(Error::PatternAbsent(_))
        ));
    }

    #[test]
    fn bound_witnesses_reproduce_their_values() {
        // Recompute the degree-sum expression from the reported witness.
        for g in [
            FamilySpec::Path(5).generate().unwrap(),
            FamilySpec::Cycle(6).generate().unwrap(),
            FamilySpec::Spider(2).generate().unwrap(),
            FamilySpec::Complete(4).generate().unwrap(),
        ] {
            if let Ok(r) = induced_p3_bound(&g) {
                let [u, v, w]: [usize; 3] = r.witness.indices().try_into().unwrap();
                let recomputed = [(u, v, w), (v, u, w), (u, w, v)]
                    .iter()
                    .filter(|&&(a, c, b)| g.has_edge(c, a) && g.has_edge(c, b))
                    .map(|&(a, c, b)| {
                        let sigma = 2 + usize::from(g.has_edge(a, b));
                        g.degree(a) + g.degree(c) + g.degree(b) - sigma
                    })
                    .min()
                    .unwrap();
                assert_eq!(recomputed, r.value);
            }
            if let Ok(r) = induced_2p2_bound(&g) {
                let total: usize = r.witness.indices().iter().map(|&v| g.degree(v)).sum();
                assert_eq!(total - 2, r.value);
                let vs = VertexSet::new(r.witness.indices().to_vec(), g.n()).unwrap();
                assert_eq!(g.induced_edge_count(&vs).unwrap(), 2);
            }
        }
    }

    #[test]
    fn compose_small_tables() {
        // Two components with b = 1 each: split the increase.
        assert_eq!(
            disjoint_compose_sbk(&[vec![Some(1)], vec![Some(1)]], 2).unwrap(),
            2
        );
        // A cheap one-shot Sb2 dominates an expensive split.
        assert_eq!(
            disjoint_compose_sbk(&[vec![Some(5), Some(2)], vec![Some(3), None]], 2).unwrap(),
            2
        );
        // P6 + P6: min(Sb2 = 2, 1 + 1) = 2.
        assert_eq!(
            disjoint_compose_sbk(&[vec![Some(1), Some(2)], vec![Some(1), Some(2)]], 2).unwrap(),
            2
        );
        // No feasible split at all.
        assert!(matches!(
            disjoint_compose_sbk(&[vec![None], vec![None]], 1),
            Err(Error::InfeasibleIncrease { .. })
        ));
        assert!(matches!(
            disjoint_compose_sbk(&[], 1),
            Err(Error::InfeasibleIncrease { .. })
        ));
    }
}
