use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use convexdim::commands::{self, Construction, Limits};
use convexdim::config::ConfigFile;
use convexdim::report::{self, MethodChoice, RunReport};
use convexdim::selftest::{self, Settings};
use convexdim::tables::{self, Which};
use convexdim_core::constructions::bound_report;
use serde_json::json;

const PASS: u8 = 0;
const VIOLATION: u8 = 1;
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "convexdim", version, about = "Exact checks for convex position of k-subset barycenters")]
struct Cli {
    /// Worker threads (0 picks one per core). Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of closed-form values as CSV.
    Tables(TablesArgs),
    /// Print upper and lower bounds on the number of edges of a k-uniform
    /// hypergraph with a convex embedding in R^d.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Decide whether a configuration preserves the i-skeleton of the
    /// hypersimplex and print a report with certificates.
    Check(CheckArgs),
    /// Emit one of the standard configurations.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Run the cross-checking suites on seeded random configurations.
    Selftest(SelftestArgs),
    /// Re-validate the certificates in a report by substitution.
    VerifyCertificate {
        report: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// cd(K_n^(k)), rows k and columns n.
    Cd,
    /// d(n,k,i), rows k and columns n.
    D,
    /// n_{k,d}, rows k and columns d.
    Nkd,
}

#[derive(Args)]
struct TablesArgs {
    which: TableKind,
    /// Column range for cd and d, e.g. 2..18.
    #[arg(long, value_parser = parse_range)]
    n: Option<RangeInclusive<usize>>,
    /// Row range.
    #[arg(long, value_parser = parse_range)]
    k: Option<RangeInclusive<usize>>,
    /// Column range for nkd.
    #[arg(long, value_parser = parse_range)]
    d: Option<RangeInclusive<usize>>,
    /// Skeleton dimension for the d table.
    #[arg(long, default_value_t = 2)]
    i: usize,
    /// Compare against the published values and exit 1 on any mismatch.
    #[arg(long)]
    diff: bool,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest configuration accepted.
    #[arg(long, default_value_t = Limits::default().max_points)]
    max_points: usize,
    /// Largest number of hypersimplex vertices (or hyperedges) accepted.
    #[arg(long, default_value_t = Limits::default().max_vertices)]
    max_vertices: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { max_points: self.max_points, max_vertices: self.max_vertices }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct CheckArgs {
    config: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    i: usize,
    #[arg(long, value_enum, default_value_t = MethodChoice::Both)]
    method: MethodChoice,
    #[command(flatten)]
    limits: LimitArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ConstructArgs {
    /// Re-check the advertised property; exit 1 if it fails.
    #[arg(long)]
    verify: bool,
    /// With --verify, also write the verification report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// n points on the moment curve in R^d.
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        args: ConstructArgs,
    },
    /// An (n-2)-simplex and its barycenter.
    SimplexBarycenter {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        args: ConstructArgs,
    },
    /// The vertices of the standard d-simplex.
    Simplex {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        args: ConstructArgs,
    },
    /// The direct sum of an a-simplex and a b-simplex.
    DirectSum {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[command(flatten)]
        args: ConstructArgs,
    },
    /// The r-fold pyramid over the direct sum of an a- and a b-simplex.
    Pyramid {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        args: ConstructArgs,
    },
    /// d parts of n points each, lifted so all transversal k-sets are convex.
    Multipartite {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        args: ConstructArgs,
    },
}

impl ConstructKind {
    fn split(&self) -> (Construction, &ConstructArgs) {
        match self {
            ConstructKind::Cyclic { n, d, args } => (Construction::Cyclic { n: *n, d: *d }, args),
            ConstructKind::SimplexBarycenter { n, args } => (Construction::SimplexBarycenter { n: *n }, args),
            ConstructKind::Simplex { d, args } => (Construction::Simplex { d: *d }, args),
            ConstructKind::DirectSum { a, b, args } => (Construction::DirectSum { a: *a, b: *b }, args),
            ConstructKind::Pyramid { a, b, r, args } => (Construction::Pyramid { a: *a, b: *b, r: *r }, args),
            ConstructKind::Multipartite { d, k, n, args } => (Construction::Multipartite { d: *d, k: *k, n: *n }, args),
        }
    }
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random trials per randomised suite.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Negate the characterisation verdict to check that failures are caught.
    #[arg(long)]
    inject_fault: bool,
    #[command(flatten)]
    out: OutputArgs,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

fn emit(text: &str, path: Option<&Path>) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_report(mut report: RunReport, out: &OutputArgs, started: Instant) -> anyhow::Result<()> {
    if out.timing {
        report.timing_ms = Some(started.elapsed().as_millis() as u64);
    }
    emit(&report.to_json(), out.output.as_deref())
}

fn tables_cmd(args: &TablesArgs) -> anyhow::Result<u8> {
    let which = match args.which {
        TableKind::Cd => Which::Cd,
        TableKind::D => Which::D,
        TableKind::Nkd => Which::Nkd,
    };
    let (rows, cols) = match which {
        Which::Cd => (args.k.clone().unwrap_or(1..=9), args.n.clone().unwrap_or(2..=18)),
        Which::D => (args.k.clone().unwrap_or(1..=9), args.n.clone().unwrap_or(3..=18)),
        Which::Nkd => (args.k.clone().unwrap_or(1..=7), args.d.clone().unwrap_or(1..=14)),
    };
    if *rows.end() > 200 || *cols.end() > 200 {
        bail!("table ranges are limited to 200");
    }
    let table = tables::generate(which, rows, cols, args.i);
    emit(&table.to_csv(), None)?;
    if !args.diff {
        return Ok(PASS);
    }
    let Some(expected) = tables::published(which, args.i) else {
        bail!("no published table for i = {}", args.i);
    };
    let (compared, mismatches) = tables::diff(&table, &expected);
    for m in &mismatches {
        eprintln!("mismatch at k={} column {}: published {}, computed {}", m.row, m.column, m.expected, m.found);
    }
    eprintln!("{compared} cells compared, {} mismatches", mismatches.len());
    Ok(if mismatches.is_empty() { PASS } else { VIOLATION })
}

fn check_cmd(args: &CheckArgs) -> anyhow::Result<u8> {
    let started = Instant::now();
    let config = ConfigFile::load(&args.config)?;
    let outcome = commands::check(&config, args.k, args.i, args.method, args.limits.limits())?;
    emit_report(outcome.report, &args.out, started)?;
    if let Some(d) = &outcome.disagreement {
        eprintln!("error: {d}");
        return Ok(VIOLATION);
    }
    Ok(if outcome.preserving { PASS } else { VIOLATION })
}

fn construct_cmd(kind: &ConstructKind) -> anyhow::Result<u8> {
    let started = Instant::now();
    let (construction, args) = kind.split();
    let s = construction.build()?;
    emit(&ConfigFile::from_configuration(&s).to_json(), args.out.output.as_deref())?;
    if !args.verify {
        return Ok(PASS);
    }
    let (mut report, holds) = construction.verify(args.limits.limits())?;
    let property = report.verdict["property"].as_str().unwrap_or_default().to_string();
    eprintln!("{}: {property}", if holds { "verified" } else { "FAILED" });
    if let Some(path) = &args.report {
        if args.out.timing {
            report.timing_ms = Some(started.elapsed().as_millis() as u64);
        }
        emit(&report.to_json(), Some(path))?;
    }
    Ok(if holds { PASS } else { VIOLATION })
}

fn selftest_cmd(args: &SelftestArgs) -> anyhow::Result<u8> {
    let started = Instant::now();
    let settings = Settings { seed: args.seed, inject_fault: args.inject_fault };
    let results = selftest::all(args.trials, settings);
    let mut passed = true;
    for r in &results {
        passed &= r.passed();
        eprintln!("{:<18} {:>5} trials  {}", r.name, r.trials, if r.passed() { "pass".to_string() } else { format!("FAIL ({})", r.failures.len()) });
        for f in r.failures.iter().take(3) {
            eprintln!("    trial {}: {}", f.trial, f.detail);
            if let Some(c) = &f.config {
                eprintln!("    {}", serde_json::to_string(c)?);
            }
        }
    }
    let summary: Vec<_> = results.iter().map(|r| json!({ "suite": r.name, "trials": r.trials, "failures": r.failures.len() })).collect();
    let counterexamples: Vec<_> = results.iter().filter(|r| !r.passed()).map(|r| json!({ "suite": r.name, "failures": r.failures })).collect();
    let inputs = json!({ "seed": args.seed, "trials": args.trials, "inject_fault": args.inject_fault });
    let report = RunReport::new("selftest", inputs, json!({ "passed": passed, "suites": summary }), json!({ "counterexamples": counterexamples }));
    emit_report(report, &args.out, started)?;
    Ok(if passed { PASS } else { VIOLATION })
}

fn verify_cmd(path: &Path) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let report: RunReport = serde_json::from_str(&text).context("malformed report")?;
    if !matches!(report.command.as_str(), "check" | "construct") {
        bail!("reports of `{}` carry no certificates", report.command);
    }
    match report::verify(&report) {
        Ok(msg) => {
            println!("ok: {msg}");
            Ok(PASS)
        }
        Err(e) => {
            println!("rejected: {e:#}");
            Ok(VIOLATION)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global()?;
    }
    match &cli.command {
        Command::Tables(args) => tables_cmd(args),
        Command::Bounds { n, k, d } => {
            let report = bound_report(*n, *k, *d)?;
            emit(&(serde_json::to_string_pretty(&report)? + "\n"), None)?;
            Ok(PASS)
        }
        Command::Check(args) => check_cmd(args),
        Command::Construct { kind } => construct_cmd(kind),
        Command::Selftest(args) => selftest_cmd(args),
        Command::VerifyCertificate { report } => verify_cmd(report),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
