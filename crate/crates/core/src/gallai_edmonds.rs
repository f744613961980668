//! Gallai–Edmonds structure: the canonical partition `V = D ∪ A ∪ C` and an
//! auditor for the three structural clauses that hold for it.

use std::fmt;

use crate::graph::{Graph, VertexSet};
use crate::matching::{matching_number, matching_number_within, matchings_of_size, maximum_matching, Matching};
use crate::properties::is_factor_critical_within;

/// `D`: vertices missed by some maximum matching. `A`: vertices outside
/// `D` with a neighbour in `D`. `C`: everything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeDecomposition {
    pub d: VertexSet,
    pub a: VertexSet,
    pub c: VertexSet,
    /// Components of `G[D]`, ordered by smallest member.
    pub d_components: Vec<VertexSet>,
}

/// `v ∈ D` iff `α′(G - v) = α′(G)`. One matching computation per vertex,
/// independent of any blossom bookkeeping.
pub fn decompose(g: &Graph) -> GeDecomposition {
    let nu = matching_number(g);
    let all = g.vertices();
    let d: VertexSet = all
        .iter()
        .filter(|&v| {
            let mut rest = all;
            rest.remove(v);
            matching_number_within(g, rest) == nu
        })
        .collect();
    let mut a = VertexSet::EMPTY;
    for v in d.iter() {
        a = a.union(g.neighbors(v));
    }
    let a = a.difference(d);
    let c = all.difference(d).difference(a);
    GeDecomposition {
        d,
        a,
        c,
        d_components: g.components_within(d),
    }
}

/// Which clause of the structure theorem a violation concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeClause {
    FactorCritical,
    MatchingStructure,
    CountingIdentity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeViolation {
    pub clause: GeClause,
    pub detail: String,
}

impl fmt::Display for GeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.clause, self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct GeReport {
    pub decomposition: GeDecomposition,
    pub matching_number: usize,
    /// How many maximum matchings had their structure audited.
    pub matchings_checked: usize,
    pub violations: Vec<GeViolation>,
}

impl GeReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Graphs up to this order have the matching-structure clause checked on
/// every maximum matching rather than a single witness.
pub const EXHAUSTIVE_CLAUSE_B_ORDER: usize = 6;

/// Audits all three clauses. The matching-structure clause is checked on
/// every maximum matching for graphs of order at most
/// [`EXHAUSTIVE_CLAUSE_B_ORDER`], and on the deterministic maximum matching
/// otherwise.
pub fn verify_ge(g: &Graph) -> GeReport {
    verify_ge_with(g, g.order() <= EXHAUSTIVE_CLAUSE_B_ORDER)
}

pub fn verify_ge_with(g: &Graph, all_maximum_matchings: bool) -> GeReport {
    let dec = decompose(g);
    let mut violations = Vec::new();

    for &comp in &dec.d_components {
        if !is_factor_critical_within(g, comp) {
            violations.push(GeViolation {
                clause: GeClause::FactorCritical,
                detail: format!("component {comp} of G[D] is not factor-critical"),
            });
        }
    }

    let witness = maximum_matching(g);
    let size = witness.len();
    let matchings: Vec<Matching> = if all_maximum_matchings {
        matchings_of_size(g, size).expect("α′ ≤ ν/2").collect()
    } else {
        vec![witness]
    };
    for m in &matchings {
        violations.extend(matching_structure_violations(g, &dec, m));
    }

    let lhs = 2 * size;
    let rhs = g.order() + dec.a.len();
    if rhs < dec.d_components.len() || lhs != rhs - dec.d_components.len() {
        violations.push(GeViolation {
            clause: GeClause::CountingIdentity,
            detail: format!(
                "2α′ = {lhs} but ν - o(D) + |A| = {} - {} + {}",
                g.order(),
                dec.d_components.len(),
                dec.a.len()
            ),
        });
    }

    GeReport {
        decomposition: dec,
        matching_number: size,
        matchings_checked: matchings.len(),
        violations,
    }
}

/// Near-perfect on every `D` component, perfect on every component of
/// `G[C]`, and `A` matched into distinct `D` components.
fn matching_structure_violations(g: &Graph, dec: &GeDecomposition, m: &Matching) -> Vec<GeViolation> {
    let mut out = Vec::new();
    let mut push = |detail: String| {
        out.push(GeViolation {
            clause: GeClause::MatchingStructure,
            detail: format!("{m}: {detail}"),
        })
    };
    for &comp in &dec.d_components {
        if 2 * m.within(comp) + 1 != comp.len() {
            push(format!("not near-perfect on D component {comp}"));
        }
    }
    for comp in g.components_within(dec.c) {
        if 2 * m.within(comp) != comp.len() {
            push(format!("not perfect on C component {comp}"));
        }
    }
    let mut hit = vec![false; dec.d_components.len()];
    for a in dec.a.iter() {
        let Some(partner) = m.mate(a) else {
            push(format!("A vertex {a} is exposed"));
            continue;
        };
        match dec.d_components.iter().position(|c| c.contains(partner)) {
            None => push(format!("A vertex {a} is matched to {partner} outside D")),
            Some(i) if hit[i] => push(format!(
                "two A vertices matched into D component {}",
                dec.d_components[i]
            )),
            Some(i) => hit[i] = true,
        }
    }
    out
}
