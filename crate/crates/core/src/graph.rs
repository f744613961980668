//! Immutable simple undirected graphs on dense vertex ids `0..order`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which caps the
//! order at [`MAX_ORDER`]. Every algorithm in this crate is exponential in
//! the order somewhere, so the cap is never the binding constraint.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {order} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("edge #{index} ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        order: usize,
    },
    #[error("edge #{index} is a self-loop at vertex {v}")]
    SelfLoop { index: usize, v: usize },
    #[error("vertex {v} is outside 0..{order}")]
    VertexOutOfRange { v: usize, order: usize },
    #[error("vertex sets overlap on {0:?}")]
    OverlappingSets(VertexSet),
}

/// A subset of the vertex ids of some graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected with the index of the offending pair.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order });
        }
        let mut adj = vec![0u64; order];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= order || v >= order {
                return Err(GraphError::EndpointOutOfRange { index, u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, v });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { order, adj })
    }

    /// Builds a graph directly from adjacency rows. The rows must already be
    /// symmetric, loop-free and confined to `0..rows.len()`.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let g = Graph {
            order: adj.len(),
            adj,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let full = self.vertices().bits();
        (0..self.order).all(|u| {
            let row = self.adj[u];
            row & !full == 0
                && row >> u & 1 == 0
                && VertexSet(row).iter().all(|v| self.adj[v] >> u & 1 == 1)
        })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph {
            order: n,
            adj: vec![0; n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        let full = VertexSet::full(n).bits();
        Graph {
            order: n,
            adj: (0..n).map(|v| full & !(1 << v)).collect(),
        }
    }

    /// The cycle `C_n` on `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!((3..=MAX_ORDER).contains(&n), "cycle needs 3..={MAX_ORDER} vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    /// The path `P_n` on `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("valid Petersen graph")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            let higher = self.adj[u] & !VertexSet::full(u + 1).bits();
            out.extend(VertexSet(higher).iter().map(|v| (u, v)));
        }
        out
    }

    /// Minimum degree `δ`; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        Graph {
            order: self.order,
            adj: (0..self.order)
                .map(|v| !self.adj[v] & full & !(1 << v))
                .collect(),
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange {
                v,
                order: self.order,
            }),
            None => Ok(()),
        }
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let within = within.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, within);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    /// Number of odd components of `G - removed`.
    pub fn odd_components_without(&self, removed: VertexSet) -> usize {
        let within = self.vertices().difference(removed);
        let mut rest = within;
        let mut odd = 0;
        while let Some(v) = rest.first() {
            let comp = self.reach(v, within);
            odd += comp.len() & 1;
            rest = rest.difference(comp);
        }
        odd
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected; graphs on at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// 2-colourability.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.order];
        for s in 0..self.order {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u).iter() {
                    if colour[v] == u8::MAX {
                        colour[v] = colour[u] ^ 1;
                        stack.push(v);
                    } else if colour[v] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in increasing
    /// order of the original ids. Also returns the original id of each new
    /// vertex.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map = keep.to_vec();
        let rows = map
            .iter()
            .map(|&u| {
                let row = self.adj[u] & keep.bits();
                map.iter()
                    .enumerate()
                    .filter(|&(_, &v)| row >> v & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        (Graph::from_rows(rows), map)
    }

    /// `G - S`, with the relabelling map (new id -> old id).
    pub fn delete_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        Ok(self.induced(self.vertices().difference(s)))
    }

    /// `G_1 ∪ G_2`; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, false)
    }

    /// `G_1 ∨ G_2`: the disjoint union plus every edge between the parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph, GraphError> {
        let n1 = self.order;
        let order = n1 + other.order;
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order });
        }
        let left = VertexSet::full(n1).bits();
        let right = VertexSet::full(order).bits() & !left;
        let mut adj = Vec::with_capacity(order);
        adj.extend(self.adj.iter().map(|&r| if cross { r | right } else { r }));
        adj.extend(
            other
                .adj
                .iter()
                .map(|&r| if cross { r << n1 | left } else { r << n1 }),
        );
        Ok(Graph { order, adj })
    }

    /// `e(X, Y)`: number of edges with one end in `x` and the other in `y`.
    pub fn cross_edge_count(&self, x: VertexSet, y: VertexSet) -> Result<usize, GraphError> {
        self.check_set(x)?;
        self.check_set(y)?;
        if !x.is_disjoint(y) {
            return Err(GraphError::OverlappingSets(x.intersection(y)));
        }
        Ok(x.iter()
            .map(|u| (self.adj[u] & y.bits()).count_ones() as usize)
            .sum())
    }

    pub fn metrics(&self) -> StructureMetrics {
        let components = self.components();
        StructureMetrics {
            connected: self.is_connected(),
            bipartite: self.is_bipartite(),
            min_degree: self.min_degree(),
            odd_component_count: components.iter().filter(|c| c.len() % 2 == 1).count(),
            components,
        }
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut adj = vec![0u64; self.order];
        for u in 0..self.order {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_rows(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.order, self.edges())
    }
}

/// Cheap structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureMetrics {
    pub connected: bool,
    pub bipartite: bool,
    pub min_degree: usize,
    pub components: Vec<VertexSet>,
    pub odd_component_count: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn build_small_graphs() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!((e3.order(), e3.edge_count()), (3, 0));
        let c5 = Graph::cycle(5);
        assert_eq!((c5.order(), c5.min_degree()), (5, 2));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 3)]),
            Err(GraphError::EndpointOutOfRange {
                index: 1,
                u: 1,
                v: 3,
                order: 3
            })
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (2, 2)]),
            Err(GraphError::SelfLoop { index: 1, v: 2 })
        );
        assert!(matches!(
            Graph::new(65, &[]),
            Err(GraphError::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn duplicate_edges_are_merged() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn join_examples() {
        let c4 = Graph::empty(2).join(&Graph::empty(2)).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.is_bipartite());
        assert!(c4.is_connected());
        assert!((0..4).all(|v| c4.degree(v) == 2));

        let wheel = Graph::complete(1).join(&Graph::cycle(4)).unwrap();
        assert_eq!((wheel.order(), wheel.edge_count()), (5, 8));

        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        let big = two_k3.join(&two_k3).unwrap();
        assert_eq!((big.order(), big.edge_count()), (12, 48));
        // G1 keeps ids, G2 is shifted
        assert!(big.has_edge(0, 1) && big.has_edge(6, 7) && big.has_edge(0, 11));
        assert!(!big.has_edge(0, 3) && !big.has_edge(6, 9));
    }

    #[test]
    fn union_examples() {
        let k3k3 = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        assert_eq!(k3k3.components().len(), 2);
        assert_eq!(k3k3.edge_count(), 6);

        let kk = Graph::complete(1).disjoint_union(&Graph::complete(1)).unwrap();
        assert_eq!(kk, Graph::empty(2));

        let g = Graph::cycle(5).disjoint_union(&Graph::complete(2)).unwrap();
        let sizes: Vec<_> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![5, 2]);
        assert_eq!(g.metrics().odd_component_count, 1);
    }

    #[test]
    fn delete_examples() {
        let (p5, map) = Graph::cycle(6).delete_vertices(set(&[0])).unwrap();
        assert_eq!(p5, Graph::path(5));
        assert_eq!(map, vec![1, 2, 3, 4, 5]);

        let (k3, _) = Graph::complete(5).delete_vertices(set(&[0, 1])).unwrap();
        assert_eq!(k3, Graph::complete(3));

        // C6 - {0,2}: isolated 1, path 3-4-5
        let (g, map) = Graph::cycle(6).delete_vertices(set(&[0, 2])).unwrap();
        assert_eq!(map, vec![1, 3, 4, 5]);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(g.degree(0), 0);

        assert!(Graph::cycle(6).delete_vertices(set(&[6])).is_err());
        let c6 = Graph::cycle(6);
        assert_eq!(c6.delete_vertices(VertexSet::EMPTY).unwrap().0, c6);
    }

    #[test]
    fn metrics_examples() {
        let m = Graph::cycle(5).metrics();
        assert!(m.connected && !m.bipartite);
        assert_eq!((m.min_degree, m.odd_component_count), (2, 1));

        let m = Graph::cycle(6).metrics();
        assert!(m.connected && m.bipartite);
        assert_eq!((m.min_degree, m.odd_component_count), (2, 0));

        let g = Graph::complete(1).disjoint_union(&Graph::path(3)).unwrap();
        let m = g.metrics();
        assert_eq!(m.components, vec![set(&[0]), set(&[1, 2, 3])]);
        assert_eq!(m.odd_component_count, 2);

        let m = Graph::empty(0).metrics();
        assert!(m.connected);
        assert_eq!(m.min_degree, 0);
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn cross_edges() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.cross_edge_count(set(&[0, 1]), set(&[2, 3])), Ok(4));
        assert_eq!(Graph::cycle(6).cross_edge_count(set(&[0]), set(&[3])), Ok(0));
        let c4 = Graph::empty(2).join(&Graph::empty(2)).unwrap();
        assert_eq!(c4.cross_edge_count(set(&[0, 1]), set(&[2, 3])), Ok(4));
        assert_eq!(
            k4.cross_edge_count(set(&[0, 1]), set(&[1, 2])),
            Err(GraphError::OverlappingSets(set(&[1])))
        );
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert!(p.is_connected() && !p.is_bipartite());
    }
}
