//! The named extremal and exceptional graph families. Every family is a
//! join of cliques, empty graphs and unions thereof; the first factor of
//! each join always occupies the low vertex ids.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family}: {constraint}")]
    Constraint {
        family: FamilyId,
        constraint: &'static str,
    },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `K_{(ν+n)/2} ∨ ((ν-n)/2) K_1`
    CrtSharp,
    /// `((ν-n)/2 + 1) K_1 ∨ K_{(ν+n)/2 - 1}`
    IndCrtAlphaSharp,
    /// `(K_3 ∪ ((ν-n)/2 - 1) K_1) ∨ K_{(ν+n)/2 - 2}`
    IndCrtDeltaSharp,
    /// `((ν-1)/2 - k) K_1 ∨ K_{(ν+1)/2 + k}`
    K12Sharp,
    /// `(K_k ∪ K_k) ∨ (K_k ∪ K_k)`
    Exceptional4k,
    /// `G_0 ∨ (K_m ∪ K_m)`
    ExceptionalJoin,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::CrtSharp,
        FamilyId::IndCrtAlphaSharp,
        FamilyId::IndCrtDeltaSharp,
        FamilyId::K12Sharp,
        FamilyId::Exceptional4k,
        FamilyId::ExceptionalJoin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::CrtSharp => "CRT_SHARP",
            FamilyId::IndCrtAlphaSharp => "IND_CRT_ALPHA_SHARP",
            FamilyId::IndCrtDeltaSharp => "IND_CRT_DELTA_SHARP",
            FamilyId::K12Sharp => "K12_SHARP",
            FamilyId::Exceptional4k => "EXCEPTIONAL_4K",
            FamilyId::ExceptionalJoin => "EXCEPTIONAL_JOIN",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| ConstructionError::UnknownFamily(s.to_string()))
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    CrtSharp { nu: usize, n: usize },
    IndCrtAlphaSharp { nu: usize, n: usize },
    IndCrtDeltaSharp { nu: usize, n: usize },
    K12Sharp { nu: usize, k: usize },
    Exceptional4k { k: usize },
    ExceptionalJoin { core: Graph, m: usize },
}

impl FamilySpec {
    pub fn id(&self) -> FamilyId {
        match self {
            FamilySpec::CrtSharp { .. } => FamilyId::CrtSharp,
            FamilySpec::IndCrtAlphaSharp { .. } => FamilyId::IndCrtAlphaSharp,
            FamilySpec::IndCrtDeltaSharp { .. } => FamilyId::IndCrtDeltaSharp,
            FamilySpec::K12Sharp { .. } => FamilyId::K12Sharp,
            FamilySpec::Exceptional4k { .. } => FamilyId::Exceptional4k,
            FamilySpec::ExceptionalJoin { .. } => FamilyId::ExceptionalJoin,
        }
    }

    /// Every parameter choice of the numeric families with order at most
    /// `max_order`, plus exceptional joins over complete and empty cores.
    pub fn all_up_to(max_order: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for nu in 1..=max_order {
            for n in (0..nu).filter(|n| (nu - n) % 2 == 0) {
                out.push(FamilySpec::CrtSharp { nu, n });
                out.push(FamilySpec::IndCrtAlphaSharp { nu, n });
                out.push(FamilySpec::IndCrtDeltaSharp { nu, n });
            }
            for k in 0..nu {
                out.push(FamilySpec::K12Sharp { nu, k });
            }
        }
        for k in (1..).take_while(|k| 4 * k <= max_order) {
            out.push(FamilySpec::Exceptional4k { k });
        }
        for c in 1..max_order {
            for m in (1..).take_while(|m| c + 2 * m <= max_order) {
                out.push(FamilySpec::ExceptionalJoin {
                    core: Graph::complete(c),
                    m,
                });
                out.push(FamilySpec::ExceptionalJoin {
                    core: Graph::empty(c),
                    m,
                });
            }
        }
        out.retain(|s| s.build().is_ok());
        out
    }

    pub fn build(&self) -> Result<Graph, ConstructionError> {
        build_family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::CrtSharp { nu, n }
            | FamilySpec::IndCrtAlphaSharp { nu, n }
            | FamilySpec::IndCrtDeltaSharp { nu, n } => write!(f, "{}(nu={nu},n={n})", self.id()),
            FamilySpec::K12Sharp { nu, k } => write!(f, "{}(nu={nu},k={k})", self.id()),
            FamilySpec::Exceptional4k { k } => write!(f, "{}(k={k})", self.id()),
            FamilySpec::ExceptionalJoin { core, m } => write!(
                f,
                "{}(core={},m={m})",
                self.id(),
                crate::codec::emit_graph6(core)
            ),
        }
    }
}

fn union(a: &Graph, b: &Graph) -> Result<Graph, ConstructionError> {
    Ok(a.disjoint_union(b)?)
}

fn join(a: &Graph, b: &Graph) -> Result<Graph, ConstructionError> {
    Ok(a.join(b)?)
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, ConstructionError> {
    let family = spec.id();
    let require = |ok: bool, constraint: &'static str| {
        if ok {
            Ok(())
        } else {
            Err(ConstructionError::Constraint { family, constraint })
        }
    };
    let parity = |nu: usize, n: usize| {
        require(nu > n, "requires nu > n")?;
        require((nu - n) % 2 == 0, "requires nu ≡ n (mod 2)")
    };
    match *spec {
        FamilySpec::CrtSharp { nu, n } => {
            parity(nu, n)?;
            join(&Graph::complete((nu + n) / 2), &Graph::empty((nu - n) / 2))
        }
        FamilySpec::IndCrtAlphaSharp { nu, n } => {
            parity(nu, n)?;
            require(n >= 1, "requires n >= 1")?;
            join(&Graph::empty((nu - n) / 2 + 1), &Graph::complete((nu + n) / 2 - 1))
        }
        FamilySpec::IndCrtDeltaSharp { nu, n } => {
            parity(nu, n)?;
            require(n >= 1, "requires n >= 1")?;
            let m = (nu - n) / 2;
            require(m >= 2, "requires (nu - n) / 2 >= 2")?;
            let left = union(&Graph::complete(3), &Graph::empty(m - 1))?;
            join(&left, &Graph::complete((nu + n) / 2 - 2))
        }
        FamilySpec::K12Sharp { nu, k } => {
            require(nu % 2 == 1, "requires odd nu")?;
            require(nu >= 3 && 2 * k + 3 <= nu, "requires 0 <= k <= (nu - 3) / 2")?;
            join(&Graph::empty((nu - 1) / 2 - k), &Graph::complete((nu + 1) / 2 + k))
        }
        FamilySpec::Exceptional4k { k } => {
            require(k >= 1, "requires k >= 1")?;
            let side = union(&Graph::complete(k), &Graph::complete(k))?;
            join(&side, &side)
        }
        FamilySpec::ExceptionalJoin { ref core, m } => {
            require(m >= 1, "requires m >= 1")?;
            require(core.order() >= 1, "requires a non-empty core")?;
            join(core, &union(&Graph::complete(m), &Graph::complete(m))?)
        }
    }
}
