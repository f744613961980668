//! Recognizers for the two exceptional structures: the balanced bad
//! partition of a k-extendable graph on `4k` vertices, and the join
//! `G_0 ∨ (K_m ∪ K_m)`. Also the degree-band classifier for order `4k`.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::properties::{is_factor_critical_within, subsets_of_size, Checker};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizerError {
    #[error("order {order} is not 4k for k = {k}")]
    OrderNotFourK { order: usize, k: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("order {order} and n = {n} differ in parity")]
    ParityMismatch { order: usize, n: usize },
    #[error("n must be at least 1")]
    ZeroN,
}

/// `V = V1 ∪ V2` with `|V1| = |V2| = 2k` where each side induces exactly
/// two factor-critical components, each of order at least 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionWitness {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub components1: Vec<VertexSet>,
    pub components2: Vec<VertexSet>,
}

impl PartitionWitness {
    /// Re-checks every invariant from scratch against `g`.
    pub fn is_valid_for(&self, g: &Graph, k: usize) -> bool {
        self.v1.is_disjoint(self.v2)
            && self.v1.union(self.v2) == g.vertices()
            && self.v1.len() == 2 * k
            && self.v2.len() == 2 * k
            && g.components_within(self.v1) == self.components1
            && g.components_within(self.v2) == self.components2
            && [&self.components1, &self.components2].iter().all(|side| {
                side.len() == 2
                    && side
                        .iter()
                        .all(|&c| c.len() >= 3 && is_factor_critical_within(g, c))
            })
    }
}

/// The side structure demanded of one half of a bad partition.
fn side_components(g: &Graph, side: VertexSet) -> Option<Vec<VertexSet>> {
    let comps = g.components_within(side);
    let ok = comps.len() == 2
        && comps.iter().all(|c| c.len() >= 3 && c.len() % 2 == 1)
        && comps.iter().all(|&c| is_factor_critical_within(g, c));
    ok.then_some(comps)
}

fn check_partition(g: &Graph, v1: VertexSet) -> Option<PartitionWitness> {
    let v2 = g.vertices().difference(v1);
    let components1 = side_components(g, v1)?;
    let components2 = side_components(g, v2)?;
    Some(PartitionWitness {
        v1,
        v2,
        components1,
        components2,
    })
}

/// Searches for a bad partition. `V1` is pinned to contain vertex 0, which
/// loses nothing since the condition is symmetric in the two sides; the
/// witness returned has the numerically least `V1` bitmask.
pub fn find_bad_partition(g: &Graph, k: usize) -> Result<Option<PartitionWitness>, RecognizerError> {
    if k == 0 {
        return Err(RecognizerError::ZeroK);
    }
    if g.order() != 4 * k {
        return Err(RecognizerError::OrderNotFourK { order: g.order(), k });
    }
    // choose the other 2k-1 members of V1 from 1..4k
    Ok(subsets_of_size(4 * k - 1, 2 * k - 1)
        .map(|rest| VertexSet::from_bits(rest << 1 | 1))
        .find_map(|v1| check_partition(g, v1)))
}

/// Unpruned search over every `2k`-subset, for cross-checking
/// [`find_bad_partition`].
pub fn find_bad_partition_unpruned(g: &Graph, k: usize) -> Option<PartitionWitness> {
    if k == 0 || g.order() != 4 * k {
        return None;
    }
    subsets_of_size(4 * k, 2 * k)
        .map(VertexSet::from_bits)
        .find_map(|v1| check_partition(g, v1))
}

/// `G = G_0 ∨ (K_m ∪ K_m)` with `|G_0| = n` and `m = (ν - n) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinWitness {
    pub core: VertexSet,
    pub clique1: VertexSet,
    pub clique2: VertexSet,
}

impl JoinWitness {
    pub fn clique_order(&self) -> usize {
        self.clique1.len()
    }

    /// Whether `m` is odd, the side condition under which the join is a
    /// genuine exception.
    pub fn has_odd_cliques(&self) -> bool {
        self.clique_order() % 2 == 1
    }

    pub fn is_valid_for(&self, g: &Graph, n: usize) -> bool {
        let m = (g.order().saturating_sub(n)) / 2;
        let cliques = self.clique1.union(self.clique2);
        let is_clique = |s: VertexSet| s.iter().all(|v| s.difference(VertexSet::singleton(v)).is_subset(g.neighbors(v)));
        self.core.len() == n
            && self.clique1.len() == m
            && self.clique2.len() == m
            && m >= 1
            && self.clique1.is_disjoint(self.clique2)
            && self.core.is_disjoint(cliques)
            && self.core.union(cliques) == g.vertices()
            && is_clique(self.clique1)
            && is_clique(self.clique2)
            && g.cross_edge_count(self.clique1, self.clique2) == Ok(0)
            && g.cross_edge_count(self.core, cliques) == Ok(n * 2 * m)
    }
}

/// Matches the shape `G_0 ∨ (K_m ∪ K_m)` exactly. Whether `m` is odd is
/// reported on the witness, not required.
///
/// A clique vertex is non-adjacent to exactly the other clique, so it
/// suffices to try each vertex as a member of `clique1`.
pub fn recognize_exceptional_join(g: &Graph, n: usize) -> Result<Option<JoinWitness>, RecognizerError> {
    let nu = g.order();
    if n == 0 {
        return Err(RecognizerError::ZeroN);
    }
    if n > nu || (nu - n) % 2 == 1 {
        return Err(RecognizerError::ParityMismatch { order: nu, n });
    }
    let m = (nu - n) / 2;
    if m == 0 {
        return Ok(None);
    }
    let non_nbrs = |v: usize| g.vertices().difference(g.neighbors(v)).difference(VertexSet::singleton(v));
    for u in 0..nu {
        let q = non_nbrs(u);
        if q.len() != m {
            continue;
        }
        let Some(q0) = q.first() else { continue };
        let p = non_nbrs(q0);
        if p.len() != m || !p.contains(u) || !p.is_disjoint(q) {
            continue;
        }
        if p.iter().all(|x| non_nbrs(x) == q) && q.iter().all(|y| non_nbrs(y) == p) {
            let w = JoinWitness {
                core: g.vertices().difference(p).difference(q),
                clique1: p,
                clique2: q,
            };
            debug_assert!(w.is_valid_for(g, n));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Which hypothesis of the order-`4k` classification failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailedHypothesis {
    ZeroK,
    OrderNotFourK,
    Disconnected,
    Bipartite,
    NotKExtendable,
    /// All hypotheses hold but `δ < 2k`, which no band covers.
    DegreeBelowBand,
}

impl fmt::Display for FailedHypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FailedHypothesis::ZeroK => "k = 0",
            FailedHypothesis::OrderNotFourK => "order is not 4k",
            FailedHypothesis::Disconnected => "graph is disconnected",
            FailedHypothesis::Bipartite => "graph is bipartite",
            FailedHypothesis::NotKExtendable => "graph is not k-extendable",
            FailedHypothesis::DegreeBelowBand => "minimum degree is below 2k",
        };
        f.write_str(s)
    }
}

/// Degree band of a connected non-bipartite k-extendable graph on `4k`
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FourKCase {
    /// `δ >= 3k`.
    HighDegree,
    /// `δ = 2k`.
    Degree2k,
    /// `2k < δ < 3k` and a bad partition exists.
    MiddleWithPartition(PartitionWitness),
    /// `2k < δ < 3k` and no bad partition exists.
    MiddleNoPartition,
    NotApplicable(FailedHypothesis),
}

impl FourKCase {
    /// Predicted 2k-factor-criticality, when the case makes a prediction.
    pub fn predicts_2k_factor_critical(&self) -> Option<bool> {
        match self {
            FourKCase::HighDegree | FourKCase::MiddleNoPartition => Some(true),
            FourKCase::Degree2k | FourKCase::MiddleWithPartition(_) => Some(false),
            FourKCase::NotApplicable(_) => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FourKCase::HighDegree => "HIGH_DEGREE",
            FourKCase::Degree2k => "DEGREE_2K",
            FourKCase::MiddleWithPartition(_) => "MIDDLE_WITH_PARTITION",
            FourKCase::MiddleNoPartition => "MIDDLE_NO_PARTITION",
            FourKCase::NotApplicable(_) => "NOT_APPLICABLE",
        }
    }
}

/// Classifies `g` by minimum degree after verifying every hypothesis.
pub fn classify_4k_case(g: &Graph, k: usize) -> FourKCase {
    classify_4k_case_with(&Checker::new(g), k)
}

pub fn classify_4k_case_with(checker: &Checker<'_>, k: usize) -> FourKCase {
    use FailedHypothesis::*;
    let g = checker.graph();
    if k == 0 {
        return FourKCase::NotApplicable(ZeroK);
    }
    if g.order() != 4 * k {
        return FourKCase::NotApplicable(OrderNotFourK);
    }
    if !g.is_connected() {
        return FourKCase::NotApplicable(Disconnected);
    }
    if g.is_bipartite() {
        return FourKCase::NotApplicable(Bipartite);
    }
    if !checker.is_k_extendable(k).expect("hypotheses checked") {
        return FourKCase::NotApplicable(NotKExtendable);
    }
    let delta = g.min_degree();
    if delta >= 3 * k {
        FourKCase::HighDegree
    } else if delta == 2 * k {
        FourKCase::Degree2k
    } else if delta > 2 * k {
        match find_bad_partition(g, k).expect("order checked") {
            Some(w) => FourKCase::MiddleWithPartition(w),
            None => FourKCase::MiddleNoPartition,
        }
    } else {
        FourKCase::NotApplicable(DegreeBelowBand)
    }
}
