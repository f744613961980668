//! Sweeps graph streams and checks each registered result on every graph
//! whose hypotheses hold, collecting counterexample witnesses.
//!
//! Every hypothesis is re-verified per graph; biconditionals are checked in
//! both directions. Per-graph facts (extendability, criticality, α, κ, ...)
//! are computed lazily and shared between checks.

use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::codec::emit_graph6;
use crate::gallai_edmonds::verify_ge;
use crate::graph::{Graph, VertexSet};
use crate::matching::matching_number;
use crate::properties::{independence_number, vertex_connectivity, Checker, PropertyProfile};
use crate::recognizers::{classify_4k_case_with, recognize_exceptional_join, FailedHypothesis, FourKCase, JoinWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("could not build a thread pool: {0}")]
    ThreadPool(String),
}

/// Registered checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// k-extendable ⇒ κ ≥ k + 1.
    P1,
    /// n-factor-critical ⇒ n-connected.
    F1,
    /// k-extendable, k ≥ ν/4 ⇒ bipartite or κ ≥ 2k.
    Ly1,
    /// non-bipartite, k ≥ (ν+2)/4: k-extendable ⇔ 2k-factor-critical.
    Zwl1,
    /// k-extendable non-bipartite ⇒ α ≤ ν/2 - k.
    Mv1,
    /// Degree condition with ν/2 - k even: k-extendable ⇔ α ≤ ν/2 - k.
    Ac1,
    /// The three degree bands for ν = 4k.
    Main4k,
    /// n-factor-critical ⇒ α ≤ (ν - n)/2.
    CrtInd,
    /// Degree and α bounds: not n-factor-critical ⇔ odd exceptional join.
    IndCrt,
    /// Degree bound, no odd exceptional join: n-factor-critical ⇔ α bound.
    IndEq,
    /// Degree bound, no odd exceptional join: k-extendable ⇔
    /// 2k-factor-critical ⇔ α ≤ ν/2 - k.
    Cor,
    /// k½-extendable ⇒ α ≤ (ν - 1)/2 - k.
    K12Ind,
    /// Gallai–Edmonds clauses.
    Ge,
    /// k½-extendable ⇔ G ∨ K_1 is (k+1)-extendable.
    Y1,
    /// n-factor-critical ⇔ odd-component criterion.
    Y2,
    /// k-extendable ⇒ m-extendable for m ≤ k.
    Z1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::P1,
        TheoremId::F1,
        TheoremId::Ly1,
        TheoremId::Zwl1,
        TheoremId::Mv1,
        TheoremId::Ac1,
        TheoremId::Main4k,
        TheoremId::CrtInd,
        TheoremId::IndCrt,
        TheoremId::IndEq,
        TheoremId::Cor,
        TheoremId::K12Ind,
        TheoremId::Ge,
        TheoremId::Y1,
        TheoremId::Y2,
        TheoremId::Z1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::P1 => "T-P1",
            TheoremId::F1 => "T-F1",
            TheoremId::Ly1 => "T-LY1",
            TheoremId::Zwl1 => "T-ZWL1",
            TheoremId::Mv1 => "T-MV1",
            TheoremId::Ac1 => "T-AC1",
            TheoremId::Main4k => "T-MAIN-4K",
            TheoremId::CrtInd => "T-CRT-IND",
            TheoremId::IndCrt => "T-IND-CRT",
            TheoremId::IndEq => "T-IND-EQ",
            TheoremId::Cor => "T-COR",
            TheoremId::K12Ind => "T-K12-IND",
            TheoremId::Ge => "L-GE",
            TheoremId::Y1 => "L-Y1",
            TheoremId::Y2 => "L-Y2",
            TheoremId::Z1 => "L-Z1",
        }
    }

    /// `all` or a single id.
    pub fn parse_selection(s: &str) -> Result<Vec<TheoremId>, HarnessError> {
        if s.eq_ignore_ascii_case("all") {
            Ok(TheoremId::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == norm)
            .ok_or_else(|| HarnessError::UnknownTheorem(s.to_string()))
    }
}

/// Lazily computed facts about one graph, shared by all checks.
pub struct Facts<'g> {
    pub g: &'g Graph,
    checker: Checker<'g>,
    connected: OnceCell<bool>,
    bipartite: OnceCell<bool>,
    alpha: OnceCell<usize>,
    kappa: OnceCell<usize>,
    ext: RefCell<BTreeMap<usize, bool>>,
    fc: RefCell<BTreeMap<usize, bool>>,
    half: RefCell<BTreeMap<usize, bool>>,
    joins: RefCell<BTreeMap<usize, Option<JoinWitness>>>,
}

impl<'g> Facts<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Facts {
            g,
            checker: Checker::new(g),
            connected: OnceCell::new(),
            bipartite: OnceCell::new(),
            alpha: OnceCell::new(),
            kappa: OnceCell::new(),
            ext: RefCell::default(),
            fc: RefCell::default(),
            half: RefCell::default(),
            joins: RefCell::default(),
        }
    }

    pub fn nu(&self) -> usize {
        self.g.order()
    }

    pub fn delta(&self) -> usize {
        self.g.min_degree()
    }

    pub fn connected(&self) -> bool {
        *self.connected.get_or_init(|| self.g.is_connected())
    }

    pub fn bipartite(&self) -> bool {
        *self.bipartite.get_or_init(|| self.g.is_bipartite())
    }

    pub fn alpha(&self) -> usize {
        *self.alpha.get_or_init(|| independence_number(self.g))
    }

    pub fn kappa(&self) -> usize {
        *self.kappa.get_or_init(|| vertex_connectivity(self.g))
    }

    /// Admissible k for k-extendability: connected, even order, `k <= (ν-2)/2`.
    pub fn ext_range(&self) -> std::ops::Range<usize> {
        if self.connected() && self.nu() % 2 == 0 && self.nu() >= 2 {
            0..self.nu() / 2
        } else {
            0..0
        }
    }

    /// Admissible k for k½-extendability: connected, odd order, `k <= (ν-3)/2`.
    pub fn half_range(&self) -> std::ops::Range<usize> {
        if self.connected() && self.nu() % 2 == 1 && self.nu() >= 3 {
            0..(self.nu() - 1) / 2
        } else {
            0..0
        }
    }

    /// Admissible n for n-factor-criticality, excluding the vacuous `n = ν`.
    pub fn fc_range(&self) -> std::ops::Range<usize> {
        0..self.nu().saturating_sub(1)
    }

    pub fn ext(&self, k: usize) -> bool {
        if let Some(&v) = self.ext.borrow().get(&k) {
            return v;
        }
        let v = self.checker.is_k_extendable(k).expect("caller checks ext_range");
        self.ext.borrow_mut().insert(k, v);
        v
    }

    pub fn fc(&self, n: usize) -> bool {
        if let Some(&v) = self.fc.borrow().get(&n) {
            return v;
        }
        let v = self.checker.is_n_factor_critical(n).expect("caller checks fc_range");
        self.fc.borrow_mut().insert(n, v);
        v
    }

    pub fn half(&self, k: usize) -> bool {
        if let Some(&v) = self.half.borrow().get(&k) {
            return v;
        }
        let v = self.checker.is_k_half_extendable(k).expect("caller checks half_range");
        self.half.borrow_mut().insert(k, v);
        v
    }

    pub fn half_via_join(&self, k: usize) -> bool {
        self.checker.is_k_half_extendable_via_join(k).expect("caller checks half_range")
    }

    pub fn tutte(&self, n: usize) -> bool {
        self.checker.tutte_criterion(n).expect("caller checks fc_range")
    }

    /// Exceptional join with core order `n`, if the shape matches.
    pub fn join_witness(&self, n: usize) -> Option<JoinWitness> {
        if let Some(w) = self.joins.borrow().get(&n) {
            return w.clone();
        }
        let w = recognize_exceptional_join(self.g, n).ok().flatten();
        self.joins.borrow_mut().insert(n, w.clone());
        w
    }

    /// The odd exceptional join: `(ν-n)/2` odd and the shape matches.
    pub fn odd_exceptional_join(&self, n: usize) -> Option<JoinWitness> {
        self.join_witness(n).filter(JoinWitness::has_odd_cliques)
    }

    fn fc_witness(&self, n: usize) -> String {
        match self.checker.n_factor_critical_failure(n) {
            Ok(Some(s)) => format!("G-{s} has no perfect matching"),
            _ => String::from("no failing set"),
        }
    }

    fn ext_witness(&self, k: usize) -> String {
        match self.checker.k_extendable_failure(k) {
            Ok(Some(f)) => f.to_string(),
            _ => String::from("no failing matching"),
        }
    }
}

/// Outcome of one check on one graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    /// Parameter instances whose hypotheses held.
    pub instances: usize,
    pub violations: Vec<String>,
}

impl CheckOutcome {
    fn hit(&mut self) {
        self.instances += 1;
    }

    fn fail(&mut self, detail: String) {
        self.violations.push(detail);
    }
}

fn even_half(nu: usize) -> Option<usize> {
    (nu % 2 == 0).then_some(nu / 2)
}

/// Runs one registered check on one graph.
pub fn check_graph(id: TheoremId, f: &Facts<'_>) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let nu = f.nu();
    match id {
        TheoremId::P1 => {
            for k in f.ext_range() {
                if f.ext(k) {
                    out.hit();
                    if f.kappa() < k + 1 {
                        out.fail(format!("{k}-extendable but κ = {}", f.kappa()));
                    }
                }
            }
        }
        TheoremId::F1 => {
            for n in f.fc_range() {
                if f.fc(n) {
                    out.hit();
                    if f.kappa() < n {
                        out.fail(format!("{n}-factor-critical but κ = {}", f.kappa()));
                    }
                }
            }
        }
        TheoremId::Ly1 => {
            for k in f.ext_range().filter(|&k| 4 * k >= nu) {
                if f.ext(k) {
                    out.hit();
                    if !f.bipartite() && f.kappa() < 2 * k {
                        out.fail(format!("{k}-extendable, non-bipartite, κ = {}", f.kappa()));
                    }
                }
            }
        }
        TheoremId::Zwl1 => {
            if !f.bipartite() {
                for k in f.ext_range().filter(|&k| 4 * k >= nu + 2) {
                    out.hit();
                    let (ext, fc) = (f.ext(k), f.fc(2 * k));
                    if ext != fc {
                        let why = if ext { f.fc_witness(2 * k) } else { f.ext_witness(k) };
                        out.fail(format!("k={k}: {k}-extendable={ext}, {}-factor-critical={fc} ({why})", 2 * k));
                    }
                }
            }
        }
        TheoremId::Mv1 => {
            if !f.bipartite() {
                for k in f.ext_range() {
                    if f.ext(k) {
                        out.hit();
                        if f.alpha() + k > nu / 2 {
                            out.fail(format!("{k}-extendable non-bipartite with α = {}", f.alpha()));
                        }
                    }
                }
            }
        }
        TheoremId::Ac1 => {
            if let Some(half) = even_half(nu) {
                for k in f.ext_range().filter(|&k| {
                    k >= 1 && 4 * k >= nu && k + 2 <= half && (half - k) % 2 == 0 && f.delta() + 1 >= half + k
                }) {
                    out.hit();
                    let ext = f.ext(k);
                    let alpha_ok = f.alpha() + k <= half;
                    if ext != alpha_ok {
                        out.fail(format!("k={k}: {k}-extendable={ext} but α = {}", f.alpha()));
                    }
                }
            }
        }
        TheoremId::Main4k => {
            if nu >= 4 && nu % 4 == 0 {
                let k = nu / 4;
                let case = classify_4k_case_with(&f.checker, k);
                match &case {
                    FourKCase::NotApplicable(FailedHypothesis::DegreeBelowBand) => {
                        out.hit();
                        out.fail(format!("hypotheses hold but δ = {} < 2k", f.delta()));
                    }
                    FourKCase::NotApplicable(_) => {}
                    _ => {
                        out.hit();
                        let predicted = case.predicts_2k_factor_critical().expect("applicable case");
                        let actual = f.fc(2 * k);
                        if predicted != actual {
                            out.fail(format!(
                                "{} predicts {}-factor-critical={predicted}, actual {actual}",
                                case.label(),
                                2 * k
                            ));
                        }
                        if let FourKCase::MiddleWithPartition(w) = &case {
                            if !w.is_valid_for(f.g, k) {
                                out.fail(format!("invalid partition witness {}", w.v1));
                            }
                        }
                    }
                }
            }
        }
        TheoremId::CrtInd => {
            for n in f.fc_range() {
                if f.fc(n) {
                    out.hit();
                    if 2 * f.alpha() + n > nu {
                        out.fail(format!("{n}-factor-critical with α = {}", f.alpha()));
                    }
                }
            }
        }
        TheoremId::IndCrt => {
            for n in f.fc_range().filter(|&n| n >= 1 && (nu - n) % 2 == 0) {
                let m = (nu - n) / 2;
                if 2 * (f.delta() + 1) >= nu + n && f.alpha() <= m {
                    out.hit();
                    let predicted_bad = f.odd_exceptional_join(n).is_some();
                    let bad = !f.fc(n);
                    if predicted_bad != bad {
                        out.fail(format!(
                            "n={n}: not {n}-factor-critical={bad}, odd exceptional join={predicted_bad}"
                        ));
                    }
                }
            }
        }
        TheoremId::IndEq => {
            for n in f.fc_range().filter(|&n| n >= 1 && (nu - n) % 2 == 0) {
                let m = (nu - n) / 2;
                if 2 * (f.delta() + 1) >= nu + n && f.odd_exceptional_join(n).is_none() {
                    out.hit();
                    let fc = f.fc(n);
                    if fc != (f.alpha() <= m) {
                        out.fail(format!("n={n}: {n}-factor-critical={fc} but α = {}", f.alpha()));
                    }
                }
            }
        }
        TheoremId::Cor => {
            if let Some(half) = even_half(nu) {
                for k in f.ext_range().filter(|&k| k >= 1 && 4 * k >= nu && f.delta() + 1 >= half + k) {
                    if f.odd_exceptional_join(2 * k).is_some() {
                        continue;
                    }
                    out.hit();
                    let (ext, fc, alpha_ok) = (f.ext(k), f.fc(2 * k), f.alpha() + k <= half);
                    if ext != fc || fc != alpha_ok {
                        out.fail(format!(
                            "k={k}: {k}-extendable={ext}, {}-factor-critical={fc}, α = {}",
                            2 * k,
                            f.alpha()
                        ));
                    }
                }
            }
        }
        TheoremId::K12Ind => {
            for k in f.half_range() {
                if f.half(k) {
                    out.hit();
                    if 2 * (f.alpha() + k) + 1 > nu {
                        out.fail(format!("{k}.5-extendable with α = {}", f.alpha()));
                    }
                }
            }
        }
        TheoremId::Ge => {
            out.hit();
            let report = verify_ge(f.g);
            out.violations.extend(report.violations.iter().map(ToString::to_string));
        }
        TheoremId::Y1 => {
            for k in f.half_range() {
                out.hit();
                let (def, via) = (f.half(k), f.half_via_join(k));
                if def != via {
                    out.fail(format!("k={k}: definition says {def}, cone says {via}"));
                }
            }
        }
        TheoremId::Y2 => {
            for n in f.fc_range() {
                out.hit();
                let (def, tutte) = (f.fc(n), f.tutte(n));
                if def != tutte {
                    out.fail(format!("n={n}: definition says {def}, odd-component criterion says {tutte}"));
                }
            }
        }
        TheoremId::Z1 => {
            for k in f.ext_range() {
                if f.ext(k) {
                    out.hit();
                    for m in (0..k).filter(|&m| !f.ext(m)) {
                        out.fail(format!("{k}-extendable but not {m}-extendable ({})", f.ext_witness(m)));
                    }
                }
            }
        }
    }
    out
}

/// A graph together with its position in the input stream.
#[derive(Debug, Clone)]
pub struct Sample {
    /// 1-based line number, or stream position for generated input.
    pub line: usize,
    pub graph: Graph,
}

impl Sample {
    pub fn numbered(graphs: impl IntoIterator<Item = Graph>) -> Vec<Sample> {
        graphs
            .into_iter()
            .enumerate()
            .map(|(i, graph)| Sample { line: i + 1, graph })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub line: usize,
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// No violations, but the hypotheses never held.
    VacuousPass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::VacuousPass => "VACUOUS-PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    pub scanned: usize,
    /// Graphs on which at least one parameter instance met the hypotheses.
    pub hits: usize,
    pub instances: usize,
    pub violations: Vec<Violation>,
    /// Wall time of the whole sweep the verdict came from.
    pub elapsed: Duration,
}

impl TheoremVerdict {
    pub fn status(&self) -> Status {
        if !self.violations.is_empty() {
            Status::Fail
        } else if self.hits == 0 {
            Status::VacuousPass
        } else {
            Status::Pass
        }
    }
}

/// Runs `ids` over `samples` on a pool of `jobs` worker threads. Results do
/// not depend on `jobs`.
pub fn verify_many(ids: &[TheoremId], samples: &[Sample], jobs: usize) -> Result<Vec<TheoremVerdict>, HarnessError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| HarnessError::ThreadPool(e.to_string()))?;
    let start = Instant::now();
    let per_graph: Vec<Vec<CheckOutcome>> = pool.install(|| {
        samples
            .par_iter()
            .map(|s| {
                let facts = Facts::new(&s.graph);
                ids.iter().map(|&id| check_graph(id, &facts)).collect()
            })
            .collect()
    });
    let elapsed = start.elapsed();
    let mut verdicts: Vec<TheoremVerdict> = ids
        .iter()
        .map(|&id| TheoremVerdict {
            id,
            scanned: samples.len(),
            hits: 0,
            instances: 0,
            violations: Vec::new(),
            elapsed,
        })
        .collect();
    for (sample, outcomes) in samples.iter().zip(per_graph) {
        for (verdict, outcome) in verdicts.iter_mut().zip(outcomes) {
            if outcome.instances > 0 {
                verdict.hits += 1;
                verdict.instances += outcome.instances;
            }
            for detail in outcome.violations {
                verdict.violations.push(Violation {
                    line: sample.line,
                    graph6: emit_graph6(&sample.graph),
                    detail,
                });
            }
        }
    }
    for v in &mut verdicts {
        v.violations.sort_by_key(|x| x.line);
    }
    Ok(verdicts)
}

/// Single-threaded run of one check.
pub fn verify_theorem(id: TheoremId, samples: &[Sample]) -> TheoremVerdict {
    verify_many(&[id], samples, 1)
        .expect("single-thread pool")
        .pop()
        .expect("one verdict")
}

/// Line-delimited `key=value` records, one per theorem plus one per
/// violation. Contains no timing, so identical inputs give identical bytes.
pub fn machine_report(verdicts: &[TheoremVerdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let _ = writeln!(
            out,
            "theorem={} status={} scanned={} hits={} instances={} violations={}",
            v.id,
            v.status().name(),
            v.scanned,
            v.hits,
            v.instances,
            v.violations.len()
        );
        for x in &v.violations {
            let _ = writeln!(
                out,
                "violation theorem={} line={} graph6={} detail={}",
                v.id, x.line, x.graph6, x.detail
            );
        }
    }
    out
}

pub fn human_report(verdicts: &[TheoremVerdict]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10} {:<13} {:>9} {:>9} {:>10} {:>10}",
        "theorem", "status", "scanned", "hits", "violations", "elapsed"
    );
    for v in verdicts {
        let _ = writeln!(
            out,
            "{:<10} {:<13} {:>9} {:>9} {:>10} {:>9.2}s",
            v.id.name(),
            v.status().name(),
            v.scanned,
            v.hits,
            v.violations.len(),
            v.elapsed.as_secs_f64()
        );
    }
    for v in verdicts {
        for x in &v.violations {
            let _ = writeln!(out, "  {} line {} {}: {}", v.id, x.line, x.graph6, x.detail);
        }
    }
    out
}

/// Edge probabilities for the random stream.
pub const RANDOM_EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];

/// `count` connected Erdős–Rényi graphs with order uniform in
/// `min_order..=max_order` and edge probability drawn uniformly from
/// [`RANDOM_EDGE_PROBABILITIES`]; disconnected draws are rejected.
pub fn random_connected_graphs(count: usize, seed: u64, min_order: usize, max_order: usize) -> Vec<Graph> {
    assert!(1 <= min_order && min_order <= max_order && max_order <= crate::graph::MAX_ORDER);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(min_order..=max_order);
        let p = RANDOM_EDGE_PROBABILITIES[rng.gen_range(0..RANDOM_EDGE_PROBABILITIES.len())];
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("valid random graph");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Full profile of one graph.
pub fn analyze(g: &Graph) -> PropertyProfile {
    PropertyProfile::build(g)
}

/// `key=value` rendering of a profile on one line.
pub fn profile_record(g: &Graph, p: &PropertyProfile) -> String {
    let opt = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
    let mut s = format!(
        "graph6={} order={} size={} connected={} bipartite={} min_degree={} connectivity={} independence={} matching_number={} factor_critical={}",
        emit_graph6(g),
        p.order,
        p.size,
        p.connected,
        p.bipartite,
        p.min_degree,
        p.connectivity,
        p.independence,
        p.matching_number,
        p.factor_critical,
    );
    if p.order % 2 == 0 {
        let _ = write!(s, " max_extendable={}", opt(p.max_extendability()));
    } else {
        let _ = write!(s, " max_half_extendable={}", opt(p.max_half_extendability()));
    }
    let _ = write!(s, " max_factor_critical={}", opt(p.max_factor_criticality()));
    s
}

/// `α′` by minimising `(ν - o(G - S) + |S|) / 2` over every `S`.
pub fn tutte_berge_matching_number(g: &Graph) -> usize {
    let full = g.vertices().bits();
    let mut best = usize::MAX;
    let mut s = 0u64;
    loop {
        let set = VertexSet::from_bits(s);
        let val = g.order() + set.len() - g.odd_components_without(set);
        best = best.min(val / 2);
        if s == full {
            return best;
        }
        s += 1;
    }
}

/// A disagreement between two independent routes to the same quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub pair: &'static str,
    pub parameter: Option<usize>,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter {
            Some(p) => write!(f, "{} (param {p}): {} vs {}", self.pair, self.left, self.right),
            None => write!(f, "{}: {} vs {}", self.pair, self.left, self.right),
        }
    }
}

/// Runs every dual-oracle pair on `g`: n-factor-criticality against the
/// odd-component criterion, k½-extendability against the cone test, and
/// the blossom matching number against the Tutte–Berge minimum.
pub fn oracle_diff(g: &Graph) -> Vec<Disagreement> {
    let f = Facts::new(g);
    let mut out = Vec::new();
    for n in f.fc_range() {
        let (a, b) = (f.fc(n), f.tutte(n));
        if a != b {
            out.push(Disagreement {
                pair: "n-factor-critical/odd-component-criterion",
                parameter: Some(n),
                left: a.to_string(),
                right: b.to_string(),
            });
        }
    }
    for k in f.half_range() {
        let (a, b) = (f.half(k), f.half_via_join(k));
        if a != b {
            out.push(Disagreement {
                pair: "k-half-extendable/cone-extendable",
                parameter: Some(k),
                left: a.to_string(),
                right: b.to_string(),
            });
        }
    }
    let (a, b) = (matching_number(g), tutte_berge_matching_number(g));
    if a != b {
        out.push(Disagreement {
            pair: "blossom/tutte-berge",
            parameter: None,
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    out
}
