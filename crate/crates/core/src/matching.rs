//! Cardinality matching: Edmonds' blossom algorithm, perfect-matching
//! extension under forced edges, and ordered enumeration of all matchings
//! of a fixed size.

use std::cell::Cell;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is covered by two matching edges")]
    SharedVertex(usize),
    #[error("matching size {size} is outside 0..={max}")]
    SizeOutOfRange { size: usize, max: usize },
}

/// A set of pairwise disjoint edges of a particular graph. Edges are kept
/// as `(u, v)` with `u < v`, sorted.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    covered: VertexSet,
}

impl Matching {
    /// Validates `edges` against `g`.
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Self, MatchingError> {
        let mut covered = VertexSet::EMPTY;
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if covered.contains(w) {
                    return Err(MatchingError::SharedVertex(w));
                }
                covered.insert(w);
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        Ok(Matching {
            edges: norm,
            covered,
        })
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    fn from_sorted(edges: Vec<(usize, usize)>) -> Self {
        let covered = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect::<VertexSet>();
        Matching { edges, covered }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by some edge of the matching.
    pub fn covered(&self) -> VertexSet {
        self.covered
    }

    /// The partner of `v`, if `v` is covered.
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Edges with both endpoints in `s`.
    pub fn within(&self, s: VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .count()
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching{:?}", self.edges)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

/// Edmonds' augmenting-path search with blossom shrinking, restricted to
/// the vertices in `active`.
struct Blossom<'g> {
    adj: &'g [u64],
    active: u64,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph, active: VertexSet) -> Self {
        let n = g.order();
        Blossom {
            adj: g.rows(),
            active: active.bits(),
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= 1 << a;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen >> b & 1 == 1 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut u64) {
        while self.base[v] != b {
            *blossom |= 1 << self.base[v] | 1 << self.base[self.mate[v]];
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from the exposed vertex `root`; returns
    /// its other (exposed) end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let mut used = 1u64 << root;
        for v in VertexSet::from_bits(self.active).iter() {
            self.parent[v] = NONE;
            self.base[v] = v;
        }
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in VertexSet::from_bits(self.adj[v] & self.active).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || self.mate[to] != NONE && self.parent[self.mate[to]] != NONE {
                    let cur = self.lca(v, to);
                    let mut blossom = 0u64;
                    self.mark_path(v, cur, to, &mut blossom);
                    self.mark_path(to, cur, v, &mut blossom);
                    for i in VertexSet::from_bits(self.active).iter() {
                        if blossom >> self.base[i] & 1 == 1 {
                            self.base[i] = cur;
                            if used >> i & 1 == 0 {
                                used |= 1 << i;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    used |= 1 << next;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn solve(mut self) -> Vec<usize> {
        // greedy start, lowest ids first
        for v in VertexSet::from_bits(self.active).iter() {
            if self.mate[v] != NONE {
                continue;
            }
            let free = VertexSet::from_bits(self.adj[v] & self.active)
                .iter()
                .find(|&u| self.mate[u] == NONE);
            if let Some(u) = free {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
        for v in VertexSet::from_bits(self.active).iter() {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

fn mates_within(g: &Graph, active: VertexSet) -> Vec<usize> {
    Blossom::new(g, active).solve()
}

/// A maximum matching of the subgraph induced by `active`.
pub fn maximum_matching_within(g: &Graph, active: VertexSet) -> Matching {
    let mate = mates_within(g, active);
    let edges = (0..g.order())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    Matching::from_sorted(edges)
}

/// A maximum-cardinality matching. Deterministic for a fixed labelling.
pub fn maximum_matching(g: &Graph) -> Matching {
    maximum_matching_within(g, g.vertices())
}

/// `α′` of the subgraph induced by `active`.
pub fn matching_number_within(g: &Graph, active: VertexSet) -> usize {
    let mate = mates_within(g, active);
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

/// The matching number `α′(G)`.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_within(g, g.vertices())
}

/// Whether the subgraph induced by `active` has a perfect matching.
pub fn has_perfect_matching_within(g: &Graph, active: VertexSet) -> bool {
    if active.len() % 2 == 1 {
        return false;
    }
    // a vertex with no neighbour inside `active` rules it out immediately
    if active
        .iter()
        .any(|v| g.neighbors(v).is_disjoint(active))
    {
        return false;
    }
    2 * matching_number_within(g, active) == active.len()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    has_perfect_matching_within(g, g.vertices())
}

/// Whether some perfect matching of `g` contains every edge of `forced`.
/// `forced` must be a matching of `g`.
pub fn extends_to_perfect(g: &Graph, forced: &Matching) -> bool {
    debug_assert!(forced.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
    has_perfect_matching_within(g, g.vertices().difference(forced.covered()))
}

/// Memoised perfect-matching tests on vertex-deleted subgraphs of one
/// graph, keyed by the deleted set. Only graphs of order at most
/// [`PmMemo::TABLE_LIMIT`] get a table; larger ones pass straight through.
pub struct PmMemo<'g> {
    graph: &'g Graph,
    table: Vec<Cell<u8>>,
}

impl<'g> PmMemo<'g> {
    pub const TABLE_LIMIT: usize = 16;

    pub fn new(graph: &'g Graph) -> Self {
        let table = if graph.order() <= Self::TABLE_LIMIT {
            vec![Cell::new(0); 1 << graph.order()]
        } else {
            Vec::new()
        };
        PmMemo { graph, table }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Whether `G - removed` has a perfect matching.
    pub fn has_pm_without(&self, removed: VertexSet) -> bool {
        let active = self.graph.vertices().difference(removed);
        if active.len() % 2 == 1 {
            return false;
        }
        let Some(slot) = self.table.get(removed.bits() as usize) else {
            return has_perfect_matching_within(self.graph, active);
        };
        match slot.get() {
            1 => false,
            2 => true,
            _ => {
                let r = has_perfect_matching_within(self.graph, active);
                slot.set(1 + u8::from(r));
                r
            }
        }
    }
}

/// Enumerates every matching with exactly `k` edges, in lexicographic
/// order of the sorted sequence of edge indices (edges indexed in
/// [`Graph::edges`] order).
pub fn matchings_of_size(g: &Graph, k: usize) -> Result<MatchingsOfSize, MatchingError> {
    let max = g.order() / 2;
    if k > max {
        return Err(MatchingError::SizeOutOfRange { size: k, max });
    }
    Ok(MatchingsOfSize::new(g.edges(), k))
}

/// Iterator returned by [`matchings_of_size`].
#[derive(Clone, Debug)]
pub struct MatchingsOfSize {
    edges: Vec<(usize, usize)>,
    masks: Vec<u64>,
    k: usize,
    stack: Vec<usize>,
    used: Vec<u64>,
    started: bool,
    done: bool,
}

impl MatchingsOfSize {
    fn new(edges: Vec<(usize, usize)>, k: usize) -> Self {
        let masks = edges.iter().map(|&(u, v)| 1u64 << u | 1u64 << v).collect();
        MatchingsOfSize {
            edges,
            masks,
            k,
            stack: Vec::with_capacity(k),
            used: vec![0],
            started: false,
            done: false,
        }
    }

    /// Advances to the next matching and returns the set of vertices it
    /// covers, without materialising the edges.
    pub fn next_cover(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let mut cand = if !self.started {
            self.started = true;
            if self.k == 0 {
                self.done = true;
                return Some(VertexSet::EMPTY);
            }
            0
        } else {
            match self.pop() {
                Some(i) => i + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        };
        let m = self.edges.len();
        loop {
            let need = self.k - self.stack.len();
            let used = *self.used.last().expect("sentinel");
            let found = (cand..m)
                .take_while(|&i| i + need <= m)
                .find(|&i| self.masks[i] & used == 0);
            match found {
                Some(i) => {
                    self.stack.push(i);
                    self.used.push(used | self.masks[i]);
                    if self.stack.len() == self.k {
                        return Some(VertexSet::from_bits(used | self.masks[i]));
                    }
                    cand = i + 1;
                }
                None => match self.pop() {
                    Some(i) => cand = i + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }

    fn pop(&mut self) -> Option<usize> {
        let i = self.stack.pop()?;
        self.used.pop();
        Some(i)
    }

    /// The matching most recently produced by [`Self::next_cover`].
    pub fn current(&self) -> Matching {
        Matching::from_sorted(self.stack.iter().map(|&i| self.edges[i]).collect())
    }
}

impl Iterator for MatchingsOfSize {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.next_cover().map(|_| self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3k3() -> Graph {
        Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap()
    }

    #[test]
    fn maximum_matching_examples() {
        assert_eq!(maximum_matching(&Graph::complete(4)).len(), 2);
        assert_eq!(maximum_matching(&Graph::cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&Graph::petersen()).len(), 5);
        assert_eq!(maximum_matching(&Graph::empty(4)).len(), 0);
        assert_eq!(maximum_matching(&Graph::empty(0)).len(), 0);
    }

    #[test]
    fn returned_matching_is_valid() {
        let g = Graph::petersen();
        let m = maximum_matching(&g);
        assert_eq!(Matching::new(&g, m.edges()).unwrap(), m);
    }

    #[test]
    fn maximum_matching_is_deterministic() {
        let g = Graph::petersen();
        assert_eq!(maximum_matching(&g), maximum_matching(&g.clone()));
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&Graph::cycle(6)));
        let k1p3 = Graph::complete(1).disjoint_union(&Graph::path(3)).unwrap();
        assert!(!has_perfect_matching(&k1p3));
        assert!(!has_perfect_matching(&k3k3()));
        assert!(!has_perfect_matching(&Graph::cycle(5)));
        assert!(has_perfect_matching(&Graph::empty(0)));
    }

    #[test]
    fn extension_examples() {
        let c6 = Graph::cycle(6);
        let m = Matching::new(&c6, &[(0, 1)]).unwrap();
        assert!(extends_to_perfect(&c6, &m));
        let m = Matching::new(&c6, &[(0, 1), (3, 4)]).unwrap();
        assert!(!extends_to_perfect(&c6, &m));
        let k4 = Graph::complete(4);
        for e in k4.edges() {
            assert!(extends_to_perfect(&k4, &Matching::new(&k4, &[e]).unwrap()));
        }
        assert_eq!(
            extends_to_perfect(&c6, &Matching::empty()),
            has_perfect_matching(&c6)
        );
    }

    #[test]
    fn matching_validation() {
        let c6 = Graph::cycle(6);
        assert_eq!(
            Matching::new(&c6, &[(0, 2)]),
            Err(MatchingError::NotAnEdge(0, 2))
        );
        assert_eq!(
            Matching::new(&c6, &[(0, 1), (1, 2)]),
            Err(MatchingError::SharedVertex(1))
        );
    }

    #[test]
    fn enumeration_examples() {
        let k4 = Graph::complete(4);
        let pms: Vec<_> = matchings_of_size(&k4, 2).unwrap().collect();
        assert_eq!(pms.len(), 3);
        // edge order: 01 02 03 12 13 23
        assert_eq!(pms[0].edges(), &[(0, 1), (2, 3)]);
        assert_eq!(pms[1].edges(), &[(0, 2), (1, 3)]);
        assert_eq!(pms[2].edges(), &[(0, 3), (1, 2)]);

        let c6 = Graph::cycle(6);
        assert_eq!(matchings_of_size(&c6, 1).unwrap().count(), 6);
        assert_eq!(matchings_of_size(&c6, 3).unwrap().count(), 2);
        assert_eq!(matchings_of_size(&c6, 0).unwrap().count(), 1);
        assert_eq!(
            matchings_of_size(&c6, 4).err(),
            Some(MatchingError::SizeOutOfRange { size: 4, max: 3 })
        );
        assert_eq!(matchings_of_size(&Graph::empty(4), 1).unwrap().count(), 0);
    }

    #[test]
    fn enumeration_supports_early_exit() {
        let mut it = matchings_of_size(&Graph::complete(6), 2).unwrap();
        assert!(it.next().is_some());
        assert!(it.next().is_some());
    }

    #[test]
    fn memo_agrees_with_direct_test() {
        let g = Graph::petersen();
        let memo = PmMemo::new(&g);
        for bits in 0u64..1 << 10 {
            let s = VertexSet::from_bits(bits);
            let direct =
                has_perfect_matching_within(&g, g.vertices().difference(s));
            assert_eq!(memo.has_pm_without(s), direct);
            assert_eq!(memo.has_pm_without(s), direct);
        }
    }
}
