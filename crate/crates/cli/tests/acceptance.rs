//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode, Stdio};
use std::io::Write;
use std::time::Instant;

use matchext::constructions::{build_family, FamilySpec};
use matchext::enumerate::{connected_graphs, graphs_by_order};
use matchext::gallai_edmonds::{decompose, verify_ge};
use matchext::properties::{independence_number, maximum_clique, vertex_connectivity};
use matchext::recognizers::{classify_4k_case, recognize_exceptional_join, FourKCase};
use matchext::{matching_number, parse_graph6, Checker, Graph};

type Outcome = Result<String, String>;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matchext"))
}

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/connected_le8.g6")
}

fn corpus() -> Vec<Graph> {
    std::fs::read_to_string(fixture())
        .expect("fixture present")
        .lines()
        .map(|l| parse_graph6(l).expect("fixture decodes"))
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn records_ok(stdout: &str, expected_theorems: usize) -> Result<(), String> {
    let lines: Vec<&str> = stdout.lines().collect();
    ensure(lines.len() == expected_theorems, || format!("expected {expected_theorems} records, got:\n{stdout}"))?;
    for l in lines {
        ensure(
            l.ends_with("violations=0") && (l.contains("status=PASS") || l.contains("status=VACUOUS-PASS")),
            || format!("bad record: {l}"),
        )?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    // the fixture must be exactly the independently enumerated corpus
    let corpus = corpus();
    let enumerated = connected_graphs(8);
    ensure(corpus == enumerated, || "fixture differs from enumeration".into())?;
    let per_order: Vec<usize> = (1..=8).map(|n| corpus.iter().filter(|g| g.order() == n).count()).collect();
    ensure(per_order == [1, 1, 2, 6, 21, 112, 853, 11117], || format!("per-order counts {per_order:?}"))?;
    let start = Instant::now();
    let out = bin()
        .args(["verify", "all", "--jobs", "8", "--format", "records"])
        .arg(fixture())
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    records_ok(&String::from_utf8_lossy(&out.stdout), 16)?;
    Ok(format!(
        "{} connected graphs (11117 on 8 vertices), 16 checks, 0 violations, {:.1}s",
        corpus.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let run = |jobs: &str| {
        bin()
            .args(["verify", "all", "--random", "100000", "--seed", "7", "--format", "records", "--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())
    };
    let start = Instant::now();
    let a = run("1")?;
    let b = run("8")?;
    ensure(a.status.success(), || format!("exit status {}", a.status))?;
    records_ok(&String::from_utf8_lossy(&a.stdout), 16)?;
    ensure(a.stdout == b.stdout, || "reports differ between reruns".into())?;
    Ok(format!(
        "100000 graphs on 9-12 vertices, 0 violations, identical reports for 1 and 8 workers, {:.1}s",
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_3() -> Outcome {
    let mut compared = 0usize;
    for g in corpus() {
        let c = Checker::new(&g);
        for n in 0..=g.order() {
            if let (Ok(a), Ok(b)) = (c.is_n_factor_critical(n), c.tutte_criterion(n)) {
                compared += 1;
                ensure(a == b, || format!("{} n={n}: {a} vs {b}", matchext::emit_graph6(&g)))?;
            }
        }
    }
    Ok(format!("{compared} (graph, n) pairs agree"))
}

fn criterion_4() -> Outcome {
    let odd: Vec<Graph> = graphs_by_order(9, |_| true)
        .into_iter()
        .flatten()
        .filter(|g| g.order() % 2 == 1 && g.is_connected())
        .collect();
    let nine = odd.iter().filter(|g| g.order() == 9).count();
    ensure(nine == 261_080, || format!("{nine} connected graphs on 9 vertices"))?;
    let mut compared = 0usize;
    for g in &odd {
        let c = Checker::new(g);
        for k in 0..=2 {
            if let Ok(a) = c.is_k_half_extendable(k) {
                let b = c.is_k_half_extendable_via_join(k).map_err(|e| e.to_string())?;
                compared += 1;
                ensure(a == b, || format!("{} k={k}: {a} vs {b}", matchext::emit_graph6(g)))?;
            }
        }
    }
    Ok(format!("{} odd connected graphs, {compared} (graph, k) pairs agree", odd.len()))
}

fn criterion_5() -> Outcome {
    let mut exhaustive = 0usize;
    for g in corpus() {
        let d = decompose(&g);
        let lhs = 2 * matching_number(&g);
        let rhs = g.order() + d.a.len() - d.d_components.len();
        ensure(lhs == rhs, || format!("{}: 2α′={lhs}, ν-o(D)+|A|={rhs}", matchext::emit_graph6(&g)))?;
        let report = verify_ge(&g);
        ensure(report.holds(), || format!("{}: {:?}", matchext::emit_graph6(&g), report.violations))?;
        if g.order() <= 6 {
            exhaustive += 1;
        }
    }
    Ok(format!("identity and clauses hold; clause (b) over all maximum matchings on {exhaustive} graphs"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let g = build_family(&FamilySpec::Exceptional4k { k: 3 }).map_err(|e| e.to_string())?;
    let c = Checker::new(&g);
    ensure(c.is_k_extendable(3) == Ok(true), || "not 3-extendable".into())?;
    ensure(c.is_n_factor_critical(6) == Ok(false), || "6-factor-critical".into())?;
    let kappa = vertex_connectivity(&g);
    ensure(kappa == 6 && g.min_degree() == 8, || format!("κ={kappa}, δ={}", g.min_degree()))?;
    match classify_4k_case(&g, 3) {
        FourKCase::MiddleWithPartition(w) => ensure(w.is_valid_for(&g, 3), || "invalid witness".into())?,
        other => return Err(format!("classified {}", other.label())),
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed <= 60.0, || format!("took {elapsed:.1}s"))?;
    Ok(format!("3-extendable, not 6-factor-critical, κ=6, δ=8, MIDDLE_WITH_PARTITION, {elapsed:.2}s"))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for nu in 1..=12usize {
        for n in (0..nu).filter(|n| (nu - n) % 2 == 0) {
            let g = build_family(&FamilySpec::CrtSharp { nu, n }).map_err(|e| e.to_string())?;
            let alpha = independence_number(&g);
            ensure(alpha == (nu - n) / 2, || format!("ν={nu} n={n}: α={alpha}"))?;
            ensure(Checker::new(&g).is_n_factor_critical(n) == Ok(true), || format!("ν={nu} n={n}: not critical"))?;
            count += 1;
        }
    }
    Ok(format!("{count} instances attain α = (ν-n)/2 and are n-factor-critical"))
}

fn criterion_8() -> Outcome {
    let g = build_family(&FamilySpec::K12Sharp { nu: 9, k: 1 }).map_err(|e| e.to_string())?;
    ensure(g == Graph::empty(3).join(&Graph::complete(6)).unwrap(), || "wrong construction".into())?;
    ensure(Checker::new(&g).is_k_half_extendable(1) == Ok(true), || "not 1½-extendable".into())?;
    let alpha = independence_number(&g);
    ensure(alpha == 3, || format!("α={alpha}"))?;
    Ok("3K1 ∨ K6 is 1½-extendable with α = 3".into())
}

fn criterion_9() -> Outcome {
    let (mut a_count, mut d_count) = (0, 0);
    for nu in 1..=12usize {
        for n in (1..nu).filter(|n| (nu - n) % 2 == 0) {
            let m = (nu - n) / 2;
            if let Ok(g) = build_family(&FamilySpec::IndCrtAlphaSharp { nu, n }) {
                let alpha = independence_number(&g);
                ensure(alpha == m + 1, || format!("alpha family ν={nu} n={n}: α={alpha}"))?;
                ensure(2 * (g.min_degree() + 1) >= nu + n, || format!("alpha family ν={nu} n={n}: δ too small"))?;
                ensure(Checker::new(&g).is_n_factor_critical(n) == Ok(false), || format!("alpha family ν={nu} n={n}: critical"))?;
                a_count += 1;
            }
            if let Ok(g) = build_family(&FamilySpec::IndCrtDeltaSharp { nu, n }) {
                ensure(2 * (g.min_degree() + 2) == nu + n, || format!("delta family ν={nu} n={n}: δ={}", g.min_degree()))?;
                let alpha = independence_number(&g);
                ensure(alpha <= m, || format!("delta family ν={nu} n={n}: α={alpha}"))?;
                ensure(Checker::new(&g).is_n_factor_critical(n) == Ok(false), || format!("delta family ν={nu} n={n}: critical"))?;
                d_count += 1;
            }
        }
    }
    Ok(format!("{a_count} α-sharp and {d_count} δ-sharp instances each miss one bound by exactly one"))
}

/// Connected graphs on exactly `nu` vertices with `δ >= nu - 1 - max_codegree`
/// and `α <= max_alpha`, found as complements of the hereditary class
/// `Δ <= max_codegree, ω <= max_alpha`.
fn dense_graphs(nu: usize, max_codegree: usize, max_alpha: usize) -> Vec<Graph> {
    let levels = graphs_by_order(nu, |h| h.max_degree() <= max_codegree && maximum_clique(h).len() <= max_alpha);
    levels[nu].iter().map(Graph::complement).filter(Graph::is_connected).collect()
}

fn criterion_10() -> Outcome {
    let (mut graphs, mut instances, mut exceptional) = (0usize, 0usize, 0usize);
    for nu in 2..=10usize {
        // the weakest hypothesis over n in {1, 2, 3} is at the smallest n with the right parity
        let n0 = if nu % 2 == 1 { 1 } else { 2 };
        if n0 >= nu {
            continue;
        }
        let min_delta = (nu + n0) / 2 - 1;
        let candidates = dense_graphs(nu, nu - 1 - min_delta, (nu - n0) / 2);
        if nu <= 8 {
            // cross-check the complement enumeration against filtering the corpus
            let filtered = corpus()
                .into_iter()
                .filter(|g| g.order() == nu && g.min_degree() >= min_delta && independence_number(g) <= (nu - n0) / 2)
                .count();
            ensure(filtered == candidates.len(), || format!("ν={nu}: {filtered} vs {}", candidates.len()))?;
        }
        graphs += candidates.len();
        for g in &candidates {
            let c = Checker::new(g);
            for n in [1usize, 2, 3].into_iter().filter(|&n| n < nu && (nu - n) % 2 == 0) {
                let m = (nu - n) / 2;
                if 2 * (g.min_degree() + 1) < nu + n || independence_number(g) > m {
                    continue;
                }
                instances += 1;
                let not_fc = !c.is_n_factor_critical(n).map_err(|e| e.to_string())?;
                let join = recognize_exceptional_join(g, n).map_err(|e| e.to_string())?;
                let predicted = m % 2 == 1 && join.is_some();
                exceptional += usize::from(predicted);
                ensure(not_fc == predicted, || {
                    format!("{} n={n}: not critical={not_fc}, exceptional={predicted}", matchext::emit_graph6(g))
                })?;
            }
        }
    }
    ensure(exceptional > 0, || "no exceptional instance met".into())?;
    Ok(format!("{graphs} graphs, {instances} (graph, n) instances, {exceptional} exceptional, 0 exceptions"))
}

/// The CLI predicate examples from the command reference.
fn cli_examples() -> Result<(), String> {
    let pipe = |construct: &[&str], check: &[&str]| -> Result<bool, String> {
        let g6 = bin().args(construct).output().map_err(|e| e.to_string())?;
        ensure(g6.status.success(), || format!("construct {construct:?} failed"))?;
        let mut child = bin().args(check).stdin(Stdio::piped()).stdout(Stdio::null()).spawn().map_err(|e| e.to_string())?;
        child.stdin.take().unwrap().write_all(&g6.stdout).map_err(|e| e.to_string())?;
        Ok(child.wait().map_err(|e| e.to_string())?.success())
    };
    ensure(
        pipe(&["construct", "EXCEPTIONAL_4K", "--k", "3"], &["check", "k-extendable", "--param", "3"])?,
        || "EXCEPTIONAL_4K(3) | check k-extendable 3".into(),
    )?;
    ensure(
        pipe(&["construct", "CRT_SHARP", "--nu", "6", "--n", "2"], &["check", "n-factor-critical", "--param", "2"])?,
        || "CRT_SHARP(6,2) | check n-factor-critical 2".into(),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("exhaustive sweep of connected graphs on at most 8 vertices", criterion_1),
        ("seeded random sweep, deterministic report", criterion_2),
        ("n-factor-criticality oracles agree", criterion_3),
        ("k½-extendability oracles agree", criterion_4),
        ("Gallai–Edmonds identity and clauses", criterion_5),
        ("exceptional graph on 12 vertices", criterion_6),
        ("α bound attained for n-factor-critical graphs", criterion_7),
        ("α bound attained for k½-extendable graphs", criterion_8),
        ("degree and α bounds cannot be weakened", criterion_9),
        ("exceptional-join biconditional up to 10 vertices", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.1}s] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:.1}s] {name}: {why}", i + 1);
            }
        }
    }
    match cli_examples() {
        Ok(()) => println!("cli examples PASS"),
        Err(why) => {
            failed += 1;
            println!("cli examples FAIL: {why}");
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
