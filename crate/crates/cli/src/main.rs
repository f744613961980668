use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use matchext::constructions::{build_family, FamilyId, FamilySpec};
use matchext::enumerate::{graphs_by_order, CANON_MAX_ORDER};
use matchext::harness::{self, Sample, Status, TheoremId};
use matchext::{codec, emit_graph6, parse_graph6, Checker, Graph};

/// Matching extendability and factor-criticality toolkit.
#[derive(Parser, Debug)]
#[command(name = "matchext", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Skip input graphs with more vertices than this (at most 62).
    #[arg(long, global = true, default_value_t = 62, value_parser = clap::value_parser!(u64).range(1..=62))]
    max_order: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned human-readable table.
    Table,
    /// Line-delimited key=value records.
    Records,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    KExtendable,
    NFactorCritical,
    KHalfExtendable,
    /// The odd-component criterion for n-factor-criticality.
    Tutte,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the full property profile of every input graph.
    Analyze {
        /// graph6 file, or `-` for standard input.
        input: Option<PathBuf>,
    },
    /// Test one property on a single graph; exit 0 if it holds, 1 if not.
    Check {
        property: PropertyArg,
        #[arg(long)]
        param: usize,
        input: Option<PathBuf>,
    },
    /// Build a named family and print it as graph6.
    Construct {
        family: String,
        #[arg(long)]
        nu: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Core graph (graph6) for EXCEPTIONAL_JOIN.
        #[arg(long)]
        core: Option<String>,
    },
    /// Check registered results over a graph stream; exit 1 on any violation.
    Verify {
        /// Theorem id or `all`.
        theorem: String,
        input: Option<PathBuf>,
        /// Use this many seeded random connected graphs instead of input.
        #[arg(long, conflicts_with = "input")]
        random: Option<usize>,
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        min_order: usize,
        #[arg(long, default_value_t = 12)]
        max_random_order: usize,
        /// Worker threads.
        #[arg(long, env = "MATCHEXT_JOBS")]
        jobs: Option<usize>,
    },
    /// Compare independent oracles on every input graph; exit 1 on any disagreement.
    OracleDiff { input: Option<PathBuf> },
    /// Print every graph up to isomorphism on the given orders as graph6.
    Enumerate {
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        connected: bool,
    },
}

fn open_input(input: &Option<PathBuf>) -> Result<Box<dyn BufRead>> {
    Ok(match input {
        Some(p) if p.as_os_str() != "-" => {
            Box::new(BufReader::new(File::open(p).with_context(|| format!("cannot open {}", p.display()))?))
        }
        _ => Box::new(BufReader::new(io::stdin())),
    })
}

/// Decodes a graph6 stream, reporting bad lines on stderr. Fails if every
/// line was bad.
fn read_samples(input: &Option<PathBuf>, max_order: usize) -> Result<Vec<Sample>> {
    let mut samples = Vec::new();
    let mut bad = 0usize;
    for item in codec::read_graph6_stream(open_input(input)?) {
        let item = item.context("read error")?;
        match item.graph {
            Ok(g) if g.order() <= max_order => samples.push(Sample { line: item.line, graph: g }),
            Ok(g) => {
                bad += 1;
                eprintln!("line {}: order {} exceeds --max-order {max_order}", item.line, g.order());
            }
            Err(e) => {
                bad += 1;
                eprintln!("line {}: {e}", item.line);
            }
        }
    }
    if samples.is_empty() && bad > 0 {
        bail!("no line of the input could be decoded");
    }
    Ok(samples)
}

fn analyze(samples: &[Sample], format: Format, out: &mut impl Write) -> Result<ExitCode> {
    for s in samples {
        let p = harness::analyze(&s.graph);
        match format {
            Format::Records => writeln!(out, "line={} {}", s.line, harness::profile_record(&s.graph, &p))?,
            Format::Table => {
                let opt = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
                writeln!(out, "line {}: {}", s.line, emit_graph6(&s.graph))?;
                writeln!(out, "  order             {}", p.order)?;
                writeln!(out, "  size              {}", p.size)?;
                writeln!(out, "  connected         {}", p.connected)?;
                writeln!(out, "  bipartite         {}", p.bipartite)?;
                writeln!(out, "  min degree        {}", p.min_degree)?;
                writeln!(out, "  connectivity      {}", p.connectivity)?;
                writeln!(out, "  independence      {}", p.independence)?;
                writeln!(out, "  matching number   {}", p.matching_number)?;
                writeln!(out, "  factor-critical   {}", p.factor_critical)?;
                if p.order % 2 == 0 {
                    writeln!(out, "  max extendable    {}", opt(p.max_extendability()))?;
                } else {
                    writeln!(out, "  max k½-extendable {}", opt(p.max_half_extendability()))?;
                }
                writeln!(out, "  max n-f-critical  {}", opt(p.max_factor_criticality()))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check(g: &Graph, property: PropertyArg, param: usize) -> Result<bool> {
    let c = Checker::new(g);
    Ok(match property {
        PropertyArg::KExtendable => c.is_k_extendable(param)?,
        PropertyArg::NFactorCritical => c.is_n_factor_critical(param)?,
        PropertyArg::KHalfExtendable => c.is_k_half_extendable(param)?,
        PropertyArg::Tutte => c.tutte_criterion(param)?,
    })
}

fn construct_spec(
    family: &str,
    nu: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    core: Option<&str>,
) -> Result<FamilySpec> {
    let id: FamilyId = family.parse()?;
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("{id} needs --{flag}"));
    Ok(match id {
        FamilyId::CrtSharp => FamilySpec::CrtSharp { nu: need(nu, "nu")?, n: need(n, "n")? },
        FamilyId::IndCrtAlphaSharp => FamilySpec::IndCrtAlphaSharp { nu: need(nu, "nu")?, n: need(n, "n")? },
        FamilyId::IndCrtDeltaSharp => FamilySpec::IndCrtDeltaSharp { nu: need(nu, "nu")?, n: need(n, "n")? },
        FamilyId::K12Sharp => FamilySpec::K12Sharp { nu: need(nu, "nu")?, k: need(k, "k")? },
        FamilyId::Exceptional4k => FamilySpec::Exceptional4k { k: need(k, "k")? },
        FamilyId::ExceptionalJoin => FamilySpec::ExceptionalJoin {
            core: parse_graph6(core.context("EXCEPTIONAL_JOIN needs --core")?)?,
            m: need(m, "m")?,
        },
    })
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let max_order = cli.max_order as usize;
    match cli.command {
        Command::Analyze { input } => analyze(&read_samples(&input, max_order)?, cli.format, &mut out),
        Command::Check { property, param, input } => {
            let samples = read_samples(&input, max_order)?;
            let [sample] = samples.as_slice() else {
                eprintln!("check expects exactly one graph, got {}", samples.len());
                return Ok(ExitCode::from(2));
            };
            match check(&sample.graph, property, param) {
                Ok(holds) => {
                    writeln!(out, "{holds}")?;
                    Ok(if holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Construct { family, nu, n, k, m, core } => {
            let spec = match construct_spec(&family, nu, n, k, m, core.as_deref()) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return Ok(ExitCode::from(2));
                }
            };
            match build_family(&spec) {
                Ok(g) => {
                    writeln!(out, "{}", emit_graph6(&g))?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Verify { theorem, input, random, seed, min_order, max_random_order, jobs } => {
            let ids = match TheoremId::parse_selection(&theorem) {
                Ok(ids) => ids,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let samples = match random {
                Some(count) => {
                    if !(1..=max_random_order).contains(&min_order) || max_random_order > max_order {
                        eprintln!("error: random orders must satisfy 1 <= min-order <= max-random-order <= max-order");
                        return Ok(ExitCode::from(2));
                    }
                    Sample::numbered(harness::random_connected_graphs(count, seed, min_order, max_random_order))
                }
                None => read_samples(&input, max_order)?,
            };
            let verdicts = harness::verify_many(&ids, &samples, jobs.unwrap_or_else(default_jobs))?;
            let report = match cli.format {
                Format::Table => harness::human_report(&verdicts),
                Format::Records => harness::machine_report(&verdicts),
            };
            out.write_all(report.as_bytes())?;
            for v in verdicts.iter().filter(|v| v.status() == Status::VacuousPass) {
                eprintln!("warning: {} never met its hypotheses on this input", v.id);
            }
            let failed = verdicts.iter().any(|v| v.status() == Status::Fail);
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::OracleDiff { input } => {
            let samples = read_samples(&input, max_order)?;
            let mut disagreements = 0usize;
            for s in &samples {
                for d in harness::oracle_diff(&s.graph) {
                    disagreements += 1;
                    writeln!(out, "line {} {}: {d}", s.line, emit_graph6(&s.graph))?;
                }
            }
            writeln!(out, "graphs={} disagreements={disagreements}", samples.len())?;
            Ok(if disagreements > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Enumerate { min_order, order, connected } => {
            if order > CANON_MAX_ORDER || min_order > order {
                eprintln!("error: need min-order <= order <= {CANON_MAX_ORDER}");
                return Ok(ExitCode::from(2));
            }
            let levels = graphs_by_order(order, |_| true);
            for g in levels.iter().skip(min_order).flatten() {
                if !connected || g.is_connected() {
                    writeln!(out, "{}", emit_graph6(g))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
