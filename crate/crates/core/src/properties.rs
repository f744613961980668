//! Exact deciders for the matching-theoretic properties: k-extendability,
//! k½-extendability, n-factor-criticality (plus the odd-component
//! criterion for it), independence number and vertex connectivity.
//!
//! Where two independent routes to the same verdict exist, both are
//! implemented and kept separate so they can be used as oracles for each
//! other.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::matching::{has_perfect_matching_within, matching_number, Matching, PmMemo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropertyError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {0} is odd; this property needs an even order")]
    OddOrder(usize),
    #[error("order {0} is even; this property needs an odd order")]
    EvenOrder(usize),
    #[error("parameter {value} is outside the admissible range {range} for order {order}")]
    ParameterOutOfRange {
        value: usize,
        order: usize,
        range: String,
    },
}

fn out_of_range(value: usize, order: usize, range: impl Into<String>) -> PropertyError {
    PropertyError::ParameterOutOfRange {
        value,
        order,
        range: range.into(),
    }
}

/// Why a graph fails to be k-extendable (or k½-extendable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionFailure {
    /// `G` (or `G - v`) has no matching of the required size.
    NoMatching { deleted: Option<usize> },
    /// This matching of `G` (or `G - v`) lies in no perfect matching.
    Stuck {
        deleted: Option<usize>,
        matching: Matching,
    },
}

impl fmt::Display for ExtensionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = |d: &Option<usize>| match d {
            Some(v) => format!("in G-{v}: "),
            None => String::new(),
        };
        match self {
            ExtensionFailure::NoMatching { deleted } => {
                write!(f, "{}no matching of the required size", prefix(deleted))
            }
            ExtensionFailure::Stuck { deleted, matching } => {
                write!(f, "{}matching {matching} does not extend", prefix(deleted))
            }
        }
    }
}

/// Per-graph checker. Perfect-matching tests on vertex-deleted subgraphs
/// are memoised, so asking many questions about one graph is cheap.
pub struct Checker<'g> {
    g: &'g Graph,
    memo: PmMemo<'g>,
}

impl<'g> Checker<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Checker {
            g,
            memo: PmMemo::new(g),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Whether `G - removed` has a perfect matching.
    pub fn has_pm_without(&self, removed: VertexSet) -> bool {
        self.memo.has_pm_without(removed)
    }

    fn extendable_guard(&self, k: usize) -> Result<(), PropertyError> {
        let nu = self.g.order();
        if !self.g.is_connected() {
            return Err(PropertyError::Disconnected);
        }
        if nu % 2 == 1 {
            return Err(PropertyError::OddOrder(nu));
        }
        if nu < 2 || 2 * k + 2 > nu {
            return Err(out_of_range(k, nu, format!("0..={}", nu.saturating_sub(2) / 2)));
        }
        Ok(())
    }

    /// First reason `G` is not k-extendable, or `None` if it is.
    pub fn k_extendable_failure(&self, k: usize) -> Result<Option<ExtensionFailure>, PropertyError> {
        self.extendable_guard(k)?;
        let mut it = crate::matching::matchings_of_size(self.g, k).expect("guarded");
        let mut any = false;
        while let Some(cover) = it.next_cover() {
            any = true;
            if !self.memo.has_pm_without(cover) {
                return Ok(Some(ExtensionFailure::Stuck {
                    deleted: None,
                    matching: it.current(),
                }));
            }
        }
        Ok((!any).then_some(ExtensionFailure::NoMatching { deleted: None }))
    }

    pub fn is_k_extendable(&self, k: usize) -> Result<bool, PropertyError> {
        Ok(self.k_extendable_failure(k)?.is_none())
    }

    fn fc_guard(&self, n: usize) -> Result<(), PropertyError> {
        let nu = self.g.order();
        if n == nu || n + 2 <= nu {
            Ok(())
        } else {
            Err(out_of_range(n, nu, format!("0..={} or {nu}", nu as isize - 2)))
        }
    }

    /// First `S` with `|S| = n` such that `G - S` has no perfect matching,
    /// scanning subsets in colex order of their bitmasks.
    pub fn n_factor_critical_failure(&self, n: usize) -> Result<Option<VertexSet>, PropertyError> {
        self.fc_guard(n)?;
        let nu = self.g.order();
        if (nu - n) % 2 == 1 {
            return Ok(Some(VertexSet::full(n)));
        }
        Ok(subsets_of_size(nu, n)
            .map(VertexSet::from_bits)
            .find(|&s| !self.memo.has_pm_without(s)))
    }

    pub fn is_n_factor_critical(&self, n: usize) -> Result<bool, PropertyError> {
        Ok(self.n_factor_critical_failure(n)?.is_none())
    }

    /// First `S` with `|S| >= n` and `o(G - S) > |S| - n`, or `None` when
    /// the parity condition holds and no such `S` exists. A parity failure
    /// is reported with `S = ∅`.
    pub fn tutte_failure(&self, n: usize) -> Result<Option<VertexSet>, PropertyError> {
        self.fc_guard(n)?;
        let nu = self.g.order();
        if (nu + n) % 2 == 1 {
            return Ok(Some(VertexSet::EMPTY));
        }
        let full = self.g.vertices().bits();
        let mut s = 0u64;
        loop {
            let size = s.count_ones() as usize;
            if size >= n {
                let odd = self.g.odd_components_without(VertexSet::from_bits(s));
                if odd + n > size {
                    return Ok(Some(VertexSet::from_bits(s)));
                }
            }
            if s == full {
                return Ok(None);
            }
            s += 1;
        }
    }

    pub fn tutte_criterion(&self, n: usize) -> Result<bool, PropertyError> {
        Ok(self.tutte_failure(n)?.is_none())
    }

    pub fn is_factor_critical(&self) -> bool {
        self.g.order() % 2 == 1 && (0..self.g.order()).all(|v| self.memo.has_pm_without(VertexSet::singleton(v)))
    }

    fn half_guard(&self, k: usize) -> Result<(), PropertyError> {
        let nu = self.g.order();
        if !self.g.is_connected() {
            return Err(PropertyError::Disconnected);
        }
        if nu % 2 == 0 {
            return Err(PropertyError::EvenOrder(nu));
        }
        if nu < 3 || 2 * k + 3 > nu {
            return Err(out_of_range(k, nu, format!("0..={}", (nu as isize - 3) / 2)));
        }
        Ok(())
    }

    /// Definitional k½-extendability: for every `v`, `G - v` has a
    /// k-matching and each of them lies in a perfect matching of `G - v`.
    pub fn k_half_extendable_failure(&self, k: usize) -> Result<Option<ExtensionFailure>, PropertyError> {
        self.half_guard(k)?;
        for v in 0..self.g.order() {
            let deleted = VertexSet::singleton(v);
            let active = self.g.vertices().difference(deleted);
            let (sub, map) = self.g.induced(active);
            let mut it = crate::matching::matchings_of_size(&sub, k).expect("guarded");
            let mut any = false;
            while let Some(cover) = it.next_cover() {
                any = true;
                let lifted: VertexSet = cover.iter().map(|i| map[i]).collect();
                if !self.memo.has_pm_without(lifted.union(deleted)) {
                    let edges: Vec<_> = it
                        .current()
                        .edges()
                        .iter()
                        .map(|&(a, b)| (map[a], map[b]))
                        .collect();
                    return Ok(Some(ExtensionFailure::Stuck {
                        deleted: Some(v),
                        matching: Matching::new(self.g, &edges).expect("lifted matching"),
                    }));
                }
            }
            if !any {
                return Ok(Some(ExtensionFailure::NoMatching { deleted: Some(v) }));
            }
        }
        Ok(None)
    }

    pub fn is_k_half_extendable(&self, k: usize) -> Result<bool, PropertyError> {
        Ok(self.k_half_extendable_failure(k)?.is_none())
    }

    /// k½-extendability decided as (k+1)-extendability of `G ∨ K_1`.
    pub fn is_k_half_extendable_via_join(&self, k: usize) -> Result<bool, PropertyError> {
        self.half_guard(k)?;
        let cone = self.g.join(&Graph::complete(1)).map_err(|_| out_of_range(k, self.g.order(), "order too large for the cone"))?;
        Checker::new(&cone).is_k_extendable(k + 1)
    }
}

/// Bitmasks of all `size`-subsets of `0..n`, increasing as integers.
pub fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = if size == 0 { Some(0) } else if size <= n { Some((1u64 << size) - 1) } else { None };
    std::iter::successors(first, move |&x| {
        if x == 0 || x == limit {
            return None;
        }
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x.checked_add(c)?;
        let next = (((r ^ x) >> 2) / c) | r;
        (next <= limit && next.count_ones() as usize == size).then_some(next)
    })
}

pub fn is_k_extendable(g: &Graph, k: usize) -> Result<bool, PropertyError> {
    Checker::new(g).is_k_extendable(k)
}

pub fn is_n_factor_critical(g: &Graph, n: usize) -> Result<bool, PropertyError> {
    Checker::new(g).is_n_factor_critical(n)
}

pub fn tutte_criterion(g: &Graph, n: usize) -> Result<bool, PropertyError> {
    Checker::new(g).tutte_criterion(n)
}

pub fn is_factor_critical(g: &Graph) -> bool {
    Checker::new(g).is_factor_critical()
}

/// Factor-criticality of the subgraph induced by `s`.
pub fn is_factor_critical_within(g: &Graph, s: VertexSet) -> bool {
    s.len() % 2 == 1
        && s.iter().all(|v| {
            let mut rest = s;
            rest.remove(v);
            has_perfect_matching_within(g, rest)
        })
}

pub fn is_k_half_extendable(g: &Graph, k: usize) -> Result<bool, PropertyError> {
    Checker::new(g).is_k_half_extendable(k)
}

pub fn is_k_half_extendable_via_join(g: &Graph, k: usize) -> Result<bool, PropertyError> {
    Checker::new(g).is_k_half_extendable_via_join(k)
}

/// Greedy colouring of `cand` in the graph `adj`; returns vertices in
/// non-decreasing colour order with their colour numbers (1-based).
fn colour_sort(adj: &[u64], cand: u64, order: &mut Vec<usize>, colours: &mut Vec<usize>) {
    order.clear();
    colours.clear();
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1u64 << v) & !adj[v];
            uncoloured &= !(1u64 << v);
            order.push(v);
            colours.push(colour);
        }
    }
}

fn expand_clique(adj: &[u64], current: u64, mut cand: u64, best: &mut u64) {
    let mut order = Vec::new();
    let mut colours = Vec::new();
    colour_sort(adj, cand, &mut order, &mut colours);
    let size = current.count_ones() as usize;
    for i in (0..order.len()).rev() {
        if size + colours[i] <= best.count_ones() as usize {
            return;
        }
        let v = order[i];
        let with = current | 1 << v;
        let next = cand & adj[v];
        if next == 0 {
            if with.count_ones() > best.count_ones() {
                *best = with;
            }
        } else {
            expand_clique(adj, with, next, best);
        }
        cand &= !(1u64 << v);
    }
}

/// A maximum clique, by branch and bound with a greedy-colouring bound.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let mut best = 0u64;
    if g.order() > 0 {
        expand_clique(g.rows(), 0, g.vertices().bits(), &mut best);
    }
    VertexSet::from_bits(best)
}

/// A maximum independent set (a maximum clique of the complement).
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximum_clique(&g.complement())
}

/// The independence number `α(G)`.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for
/// nonadjacent `s != t`, by augmenting paths on the split-vertex network.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    // node 2v is v_in, 2v+1 is v_out
    let size = 2 * n;
    let mut cap = vec![0i8; size * size];
    for v in 0..n {
        let inner = if v == s || v == t { n as i8 } else { 1 };
        cap[2 * v * size + 2 * v + 1] = inner;
        for u in g.neighbors(v).iter() {
            cap[(2 * v + 1) * size + 2 * u] = 1;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut prev = vec![usize::MAX; size];
    let mut queue = VecDeque::with_capacity(size);
    loop {
        prev.fill(usize::MAX);
        prev[source] = source;
        queue.clear();
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x * size + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x * size + y] -= 1;
            cap[y * size + x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Vertex connectivity `κ(G)`. `κ(K_n) = n - 1`; a disconnected graph has
/// `κ = 0`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let mut best = n.saturating_sub(1);
    if !g.is_connected() {
        return 0;
    }
    // some v_i with i <= κ lies outside a minimum separator, and every
    // vertex in another component of G - S then has a larger index
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j));
            }
        }
        i += 1;
    }
    best
}

/// A predicate with its integer parameter, used as a cache key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    KExtendable(usize),
    KHalfExtendable(usize),
    NFactorCritical(usize),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::KExtendable(k) => write!(f, "{k}-extendable"),
            Property::KHalfExtendable(k) => write!(f, "{k}.5-extendable"),
            Property::NFactorCritical(n) => write!(f, "{n}-factor-critical"),
        }
    }
}

/// Every metric and verdict for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyProfile {
    pub order: usize,
    pub size: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub min_degree: usize,
    pub connectivity: usize,
    pub independence: usize,
    pub matching_number: usize,
    pub factor_critical: bool,
    /// Every verdict computed, keyed by property and parameter.
    pub verdicts: BTreeMap<Property, bool>,
}

impl PropertyProfile {
    pub fn build(g: &Graph) -> Self {
        let checker = Checker::new(g);
        let nu = g.order();
        let mut verdicts = BTreeMap::new();
        for n in (0..=nu).filter(|&n| n + 2 <= nu) {
            verdicts.insert(Property::NFactorCritical(n), checker.is_n_factor_critical(n).expect("in range"));
        }
        if g.is_connected() && nu % 2 == 0 && nu >= 2 {
            for k in 0..=(nu - 2) / 2 {
                verdicts.insert(Property::KExtendable(k), checker.is_k_extendable(k).expect("in range"));
            }
        }
        if g.is_connected() && nu % 2 == 1 && nu >= 3 {
            for k in 0..=(nu - 3) / 2 {
                verdicts.insert(Property::KHalfExtendable(k), checker.is_k_half_extendable(k).expect("in range"));
            }
        }
        PropertyProfile {
            order: nu,
            size: g.edge_count(),
            connected: g.is_connected(),
            bipartite: g.is_bipartite(),
            min_degree: g.min_degree(),
            connectivity: vertex_connectivity(g),
            independence: independence_number(g),
            matching_number: matching_number(g),
            factor_critical: checker.is_factor_critical(),
            verdicts,
        }
    }

    fn max_param(&self, pick: impl Fn(Property) -> Option<usize>) -> Option<usize> {
        self.verdicts
            .iter()
            .filter(|&(_, &holds)| holds)
            .filter_map(|(&p, _)| pick(p))
            .max()
    }

    /// Largest `k` with `G` k-extendable.
    pub fn max_extendability(&self) -> Option<usize> {
        self.max_param(|p| match p {
            Property::KExtendable(k) => Some(k),
            _ => None,
        })
    }

    /// Largest `k` with `G` k½-extendable.
    pub fn max_half_extendability(&self) -> Option<usize> {
        self.max_param(|p| match p {
            Property::KHalfExtendable(k) => Some(k),
            _ => None,
        })
    }

    /// Largest `n <= ν - 2` with `G` n-factor-critical.
    pub fn max_factor_criticality(&self) -> Option<usize> {
        self.max_param(|p| match p {
            Property::NFactorCritical(n) => Some(n),
            _ => None,
        })
    }
}
