//! Immutable labeled simple graphs with bitmask adjacency, plus the
//! generated families used throughout: paths, cycles, complete graphs,
//! stars, and spiders.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported graph order. Matches the short-form graph6 limit, and
/// lets adjacency sets live in a single machine word.
pub const MAX_ORDER: usize = 62;

/// Immutable labeled simple graph.
///
/// Vertices are `0..n`. The edge list is the set `{(u,v) : u < v, u ~ v}`
/// in lexicographic order; every edge index used elsewhere (notably in
/// [`EdgeSet`]) refers to this list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an order and a list of endpoint pairs.
    ///
    /// Pairs may come in either orientation. Loops, duplicates, and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut adj = vec![0u64; n];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    });
                }
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u] & (1 << v) != 0 {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            edges.push((u, v));
        }
        edges.sort_unstable();
        Ok(Graph { n, adj, edges })
    }

    /// Constructs from an edge list already known to be sorted, deduplicated,
    /// loop-free, and in range.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        debug_assert!(n <= MAX_ORDER);
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![0u64; n];
        for &(u, v) in &edges {
            debug_assert!(u < v && v < n);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph { n, adj, edges }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: pairs `(u,v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor set of `v` as a bitmask.
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]` of `v` as a bitmask.
    pub fn closed_mask(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    /// Closed neighborhoods of all vertices; the input to the domination solver.
    pub fn closed_neighborhoods(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.closed_mask(v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & (1 << b) != 0
    }

    /// Index of edge `{a,b}` in the canonical edge list.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).ok()
    }

    /// The graph with the edges of `es` removed; same vertex set.
    pub fn remove_edges(&self, es: &EdgeSet) -> Result<Graph> {
        es.validate_for(self)?;
        let mut keep = Vec::with_capacity(self.edges.len() - es.len());
        let mut drop = es.indices().iter().copied().peekable();
        for (i, &e) in self.edges.iter().enumerate() {
            if drop.peek() == Some(&i) {
                drop.next();
            } else {
                keep.push(e);
            }
        }
        Ok(Graph::from_sorted_edges(self.n, keep))
    }

    /// Number of edges with both endpoints in `s`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> Result<usize> {
        s.validate_for(self)?;
        let mask = s.as_mask();
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
            .count())
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Connected components, ordered by their smallest vertex. Each carries
    /// the map from its local vertex indices back to this graph's labels.
    pub fn components(&self) -> Vec<Component> {
        let mut unvisited = if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        };
        let mut out = Vec::new();
        while unvisited != 0 {
            let root = unvisited.trailing_zeros() as usize;
            let mut seen = 1u64 << root;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= next;
            }
            let vertices: Vec<usize> = BitIter(seen).collect();
            let mut local = vec![usize::MAX; self.n];
            for (i, &v) in vertices.iter().enumerate() {
                local[v] = i;
            }
            let edges = self
                .edges
                .iter()
                .filter(|&&(u, v)| seen & (1 << u) != 0 && seen & (1 << v) != 0)
                .map(|&(u, v)| (local[u], local[v]))
                .collect();
            out.push(Component {
                graph: Graph::from_sorted_edges(vertices.len(), edges),
                vertices,
            });
            unvisited &= !seen;
        }
        out
    }

    /// Disjoint union: `other`'s vertices are relabeled to follow this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|&(u, v)| (u + self.n, v + self.n)),
        );
        edges.sort_unstable();
        Ok(Graph::from_sorted_edges(n, edges))
    }
}

/// One connected component together with its vertex labels in the parent graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    /// `vertices[i]` is the parent-graph label of the component's vertex `i`.
    pub vertices: Vec<usize>,
}

/// Iterator over the set bits of a word.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A subset of a graph's edges, stored as strictly increasing indices into
/// the owning graph's canonical edge list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<usize>);

impl EdgeSet {
    /// Validates strictly increasing indices, all below `edge_count`.
    pub fn new(indices: Vec<usize>, edge_count: usize) -> Result<EdgeSet> {
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidParam(
                "edge set indices must be strictly increasing".into(),
            ));
        }
        if let Some(&last) = indices.last() {
            if last >= edge_count {
                return Err(Error::InvalidParam(format!(
                    "edge index {last} out of range for {edge_count} edges"
                )));
            }
        }
        Ok(EdgeSet(indices))
    }

    pub fn empty() -> EdgeSet {
        EdgeSet(Vec::new())
    }

    /// Resolves endpoint pairs against a graph's canonical edge list.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<EdgeSet> {
        let mut indices = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let idx = g.edge_index(a, b).ok_or_else(|| {
                Error::InvalidParam(format!("({a},{b}) is not an edge of the graph"))
            })?;
            indices.push(idx);
        }
        indices.sort_unstable();
        indices.dedup();
        if indices.len() != pairs.len() {
            return Err(Error::InvalidParam("duplicate edge in edge set".into()));
        }
        Ok(EdgeSet(indices))
    }

    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> EdgeSet {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        EdgeSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The member edges as endpoint pairs of `g`.
    pub fn pairs(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.0.iter().map(|&i| g.edges()[i]).collect()
    }

    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        if let Some(&last) = self.0.last() {
            if last >= g.edge_count() {
                return Err(Error::InvalidParam(format!(
                    "edge index {last} out of range for {} edges",
                    g.edge_count()
                )));
            }
        }
        Ok(())
    }
}

/// A subset of a graph's vertices, stored as strictly increasing indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Validates strictly increasing indices, all below `order`.
    pub fn new(indices: Vec<usize>, order: usize) -> Result<VertexSet> {
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidParam(
                "vertex set indices must be strictly increasing".into(),
            ));
        }
        if let Some(&last) = indices.last() {
            if last >= order {
                return Err(Error::VertexOutOfRange {
                    vertex: last,
                    order,
                });
            }
        }
        Ok(VertexSet(indices))
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> VertexSet {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        VertexSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1 << v))
    }

    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        if let Some(&last) = self.0.last() {
            if last >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: last,
                    order: g.n(),
                });
            }
        }
        Ok(())
    }
}

/// A named graph family with its parameter.
///
/// The spider with parameter `k` is the rooted tree on `2k+2` vertices whose
/// root has `k` children of degree 2 (each bearing one leaf) and one child of
/// degree 1; it is the extremal tree for the `2k` upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "param", rename_all = "lowercase")]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Spider(usize),
}

impl FamilySpec {
    /// Generates the family member with a fixed, reproducible labeling.
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => {
                if n < 1 {
                    return Err(Error::InvalidFamilyParam("path requires n >= 1".into()));
                }
                let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                checked(n, edges)
            }
            FamilySpec::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidFamilyParam("cycle requires n >= 3".into()));
                }
                let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, n - 1));
                edges.sort_unstable();
                checked(n, edges)
            }
            FamilySpec::Complete(n) => {
                if n < 1 {
                    return Err(Error::InvalidFamilyParam(
                        "complete requires n >= 1".into(),
                    ));
                }
                let mut edges = Vec::with_capacity(n * (n - 1) / 2);
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                checked(n, edges)
            }
            FamilySpec::Star(k) => {
                if k < 1 {
                    return Err(Error::InvalidFamilyParam("star requires k >= 1".into()));
                }
                let edges = (1..=k).map(|i| (0, i)).collect();
                checked(k + 1, edges)
            }
            FamilySpec::Spider(k) => {
                if k < 1 {
                    return Err(Error::InvalidFamilyParam("spider requires k >= 1".into()));
                }
                // Root 0; degree-2 children 1..=k, each with leaf k+1+i;
                // vertex k+1 is the root's degree-1 child.
                let mut edges: Vec<(usize, usize)> = (1..=k + 1).map(|i| (0, i)).collect();
                edges.extend((1..=k).map(|i| (i, k + 1 + i)));
                edges.sort_unstable();
                checked(2 * k + 2, edges)
            }
        }
    }
}

fn checked(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    Ok(Graph::from_sorted_edges(n, edges))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::Spider(k) => write!(f, "spider:{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `family:param`, e.g. `path:7` or `spider:2`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, param) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamilyParam(format!("expected family:param, got {s:?}")))?;
        let value: usize = param
            .parse()
            .map_err(|_| Error::InvalidFamilyParam(format!("bad parameter {param:?}")))?;
        match name {
            "path" => Ok(FamilySpec::Path(value)),
            "cycle" => Ok(FamilySpec::Cycle(value)),
            "complete" => Ok(FamilySpec::Complete(value)),
            "star" => Ok(FamilySpec::Star(value)),
            "spider" => Ok(FamilySpec::Spider(value)),
            other => Err(Error::InvalidFamilyParam(format!(
                "unknown family {other:?}"
            ))),
        }
    }
}

/// Convenience wrapper matching the operation name used by the CLI.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.generate()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_p3() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.degree(1), 2);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn build_single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_rejects_duplicate() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        // Reversed orientation is still the same edge.
        assert_eq!(
            Graph::new(4, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn build_rejects_loop_and_range() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
    }

    #[test]
    fn edge_order_is_canonical() {
        let g = Graph::new(4, &[(2, 3), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_index(3, 0), Some(1));
        assert_eq!(g.edge_index(1, 2), None);
    }

    #[test]
    fn family_edge_counts() {
        for n in 1..=8 {
            assert_eq!(
                FamilySpec::Path(n).generate().unwrap().edge_count(),
                n - 1
            );
            assert_eq!(
                FamilySpec::Complete(n).generate().unwrap().edge_count(),
                n * (n - 1) / 2
            );
        }
        for n in 3..=8 {
            assert_eq!(FamilySpec::Cycle(n).generate().unwrap().edge_count(), n);
        }
        for k in 1..=5 {
            assert_eq!(FamilySpec::Star(k).generate().unwrap().edge_count(), k);
            let s = FamilySpec::Spider(k).generate().unwrap();
            assert_eq!(s.n(), 2 * k + 2);
            assert_eq!(s.edge_count(), 2 * k + 1);
        }
    }

    #[test]
    fn spider_two_shape() {
        let g = FamilySpec::Spider(2).generate().unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)]);
        // Root has one degree-1 child (vertex 3) and two degree-2 children.
        assert_eq!(g.degree(3), 1);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn invalid_family_params() {
        assert!(matches!(
            FamilySpec::Cycle(2).generate(),
            Err(Error::InvalidFamilyParam(_))
        ));
        assert!(matches!(
            FamilySpec::Star(0).generate(),
            Err(Error::InvalidFamilyParam(_))
        ));
        assert!(matches!(
            FamilySpec::Path(0).generate(),
            Err(Error::InvalidFamilyParam(_))
        ));
    }

    #[test]
    fn family_from_str() {
        assert_eq!("path:7".parse::<FamilySpec>().unwrap(), FamilySpec::Path(7));
        assert_eq!(
            "spider:2".parse::<FamilySpec>().unwrap(),
            FamilySpec::Spider(2)
        );
        assert!("grid:3".parse::<FamilySpec>().is_err());
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn remove_edges_splits_path() {
        let g = FamilySpec::Path(3).generate().unwrap();
        let es = EdgeSet::from_pairs(&g, &[(0, 1)]).unwrap();
        let h = g.remove_edges(&es).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), &[(1, 2)]);
        assert_eq!(h.components().len(), 2);
    }

    #[test]
    fn remove_empty_set_is_identity() {
        let g = FamilySpec::Cycle(5).generate().unwrap();
        assert_eq!(g.remove_edges(&EdgeSet::empty()).unwrap(), g);
    }

    #[test]
    fn remove_all_edges_of_c4() {
        let g = FamilySpec::Cycle(4).generate().unwrap();
        let all = EdgeSet::new((0..4).collect(), 4).unwrap();
        let h = g.remove_edges(&all).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.components().len(), 4);
    }

    #[test]
    fn components_partition_vertices() {
        let g = Graph::new(5, &[(1, 2), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        let mut orders: Vec<usize> = comps.iter().map(|c| c.graph.n()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2]);
        let mut all: Vec<usize> = comps.iter().flat_map(|c| c.vertices.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn components_of_connected_cycle() {
        let g = FamilySpec::Cycle(6).generate().unwrap();
        assert_eq!(g.components().len(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn components_of_edgeless_graph() {
        let g = Graph::new(5, &[]).unwrap();
        assert_eq!(g.components().len(), 5);
    }

    #[test]
    fn induced_counts() {
        let k3 = FamilySpec::Complete(3).generate().unwrap();
        let all = VertexSet::new(vec![0, 1, 2], 3).unwrap();
        assert_eq!(k3.induced_edge_count(&all).unwrap(), 3);

        let p3 = FamilySpec::Path(3).generate().unwrap();
        assert_eq!(p3.induced_edge_count(&all).unwrap(), 2);

        let p4 = FamilySpec::Path(4).generate().unwrap();
        let ends = VertexSet::new(vec![0, 3], 4).unwrap();
        assert_eq!(p4.induced_edge_count(&ends).unwrap(), 0);
    }

    #[test]
    fn edge_set_validation() {
        assert!(EdgeSet::new(vec![0, 2, 1], 5).is_err());
        assert!(EdgeSet::new(vec![0, 5], 5).is_err());
        assert!(EdgeSet::new(vec![0, 4], 5).is_ok());
        assert!(VertexSet::new(vec![2, 2], 5).is_err());
    }

    #[test]
    fn disjoint_union_relabels() {
        let a = FamilySpec::Path(2).generate().unwrap();
        let b = FamilySpec::Path(3).generate().unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(u.n(), 5);
        assert_eq!(u.edges(), &[(0, 1), (2, 3), (3, 4)]);
    }
}
