//! Command-line front end: `gen`, `solve`, `verify`, `table` and
//! `check-cert`.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 budget exhausted,
//! 3 a theorem check or certificate failed.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::bounds::LedgerFormat;
use crate::campaign::{
    run_campaigns, standard_campaigns, CampaignSpec, Check, SizeRange, DEFAULT_NODE_BUDGET,
};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::graph::Graph;
use crate::middle::middle_graph;
use crate::solve::{solve, solve_middle, Budget, Certificate, Problem, SolveReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "midtdc",
    version,
    about = "Exact total dominator colouring of middle graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family member as an edge list.
    Gen(GenArgs),
    /// Solve one problem exactly and print the report as JSON.
    Solve(SolveArgs),
    /// Run theorem checks over a campaign and print a summary line.
    Verify(CampaignArgs),
    /// Print predicted against solved middle-graph TDC numbers as CSV.
    Table(CampaignArgs),
    /// Re-validate the certificate of a saved solve report.
    CheckCert(CheckCertArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Seed for `tree_random`.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (a directory for `tree_exhaustive`); stdout otherwise.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Number vertices from 1 in the output.
    #[arg(long)]
    one_indexed: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// tdc, chromatic, edge-chromatic, total-domination or independence.
    problem: Problem,
    /// Edge-list file, or `-` for stdin.
    input: PathBuf,
    /// Solve on the middle graph of the input.
    #[arg(long)]
    middle: bool,
    /// Search node limit.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Wall-clock limit; results then depend on machine speed.
    #[arg(long)]
    time_limit_ms: Option<u64>,
    #[arg(long)]
    one_indexed: bool,
    /// Print the wall time to stderr.
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Debug)]
struct CampaignArgs {
    #[arg(long)]
    family: Option<Family>,
    /// Size range such as `3..10` or `8`.
    #[arg(long)]
    n: Option<SizeRange>,
    /// Comma-separated checks; defaults to all that apply to the family.
    #[arg(long)]
    checks: Option<String>,
    /// Search node limit per solve.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// JSON campaign file: one campaign object or an array of them.
    #[arg(long, conflicts_with_all = ["family", "standard"])]
    config: Option<PathBuf>,
    /// Run the built-in campaigns over every family.
    #[arg(long, conflicts_with = "family")]
    standard: bool,
    /// Output file (`-` for stdout).
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// csv or json; inferred from the output extension by default.
    #[arg(long)]
    format: Option<LedgerFormat>,
}

#[derive(Args, Debug)]
struct CheckCertArgs {
    /// Edge-list file the report was computed on.
    input: PathBuf,
    /// JSON report printed by `solve`.
    report: PathBuf,
    /// The report is about the middle graph of the input.
    #[arg(long)]
    middle: bool,
    #[arg(long)]
    one_indexed: bool,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ConfigFile {
    Many(Vec<CampaignSpec>),
    One(Box<CampaignSpec>),
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a, out, err),
        Command::Solve(a) => cmd_solve(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::CheckCert(a) => cmd_check_cert(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExhausted { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn read_graph(path: &Path, one_indexed: bool) -> Result<Graph> {
    Graph::parse_edge_list(&read_input(path)?, one_indexed)
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let spec = FamilySpec {
        family: a.family,
        n: a.n,
        seed: a.seed,
    };
    spec.validate()?;
    if a.family == Family::TreeExhaustive {
        let dir = a
            .out
            .ok_or_else(|| Error::InvalidParameter("tree_exhaustive needs --out DIR".into()))?;
        std::fs::create_dir_all(&dir)?;
        let trees = spec.instances()?;
        for (k, t) in trees.iter().enumerate() {
            std::fs::write(
                dir.join(format!("tree_{}_{k:03}.txt", a.n)),
                t.to_edge_list(a.one_indexed),
            )?;
        }
        writeln!(err, "wrote {} trees to {}", trees.len(), dir.display())?;
        return Ok(EXIT_OK);
    }
    let g = crate::families::generate(&spec)?;
    let text = g.to_edge_list(a.one_indexed);
    match a.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn report_json(r: &SolveReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(r)? + "\n")
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input, a.one_indexed)?;
    let budget = Budget {
        max_nodes: Some(a.budget),
        max_time: a.time_limit_ms.map(Duration::from_millis),
    };
    let started = Instant::now();
    let report = if a.middle {
        solve_middle(a.problem, &middle_graph(&g)?, budget)?
    } else {
        solve(a.problem, &g, budget)?
    };
    out.write_all(report_json(&report)?.as_bytes())?;
    if a.timing {
        writeln!(
            err,
            "time: {} ms, {} nodes",
            started.elapsed().as_millis(),
            report.nodes
        )?;
    }
    Ok(if report.is_optimal() {
        EXIT_OK
    } else {
        EXIT_BUDGET
    })
}

fn campaigns(a: &CampaignArgs) -> Result<Vec<CampaignSpec>> {
    let mut specs = if a.standard {
        standard_campaigns(DEFAULT_NODE_BUDGET)
    } else if let Some(path) = &a.config {
        match serde_json::from_str(&read_input(path)?)? {
            ConfigFile::Many(v) => v,
            ConfigFile::One(s) => vec![*s],
        }
    } else {
        let (Some(family), Some(n)) = (a.family, a.n) else {
            return Err(Error::InvalidParameter(
                "give --family and --n, or --config, or --standard".into(),
            ));
        };
        let mut spec = CampaignSpec::new(family, n);
        spec.seed = a.seed;
        vec![spec]
    };
    for spec in &mut specs {
        if let Some(list) = &a.checks {
            spec.checks = Check::parse_list(list)?;
        }
        if let Some(b) = a.budget {
            spec.budget.max_nodes = b;
        }
        spec.validate()?;
    }
    if specs.is_empty() {
        return Err(Error::InvalidParameter(
            "campaign file lists no campaigns".into(),
        ));
    }
    Ok(specs)
}

/// Output target: the flag, else the first campaign's `output`.
fn output_target(a: &CampaignArgs, specs: &[CampaignSpec]) -> Option<(PathBuf, LedgerFormat)> {
    let configured = specs.first().and_then(|s| s.output.clone());
    let path = a
        .out
        .clone()
        .or_else(|| configured.as_ref().map(|o| o.path.clone()))?;
    let inferred = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => LedgerFormat::Json,
        _ => LedgerFormat::Csv,
    };
    let format = a
        .format
        .or(configured
            .filter(|o| a.out.is_none() || o.path == path)
            .map(|o| o.format))
        .unwrap_or(inferred);
    Some((path, format))
}

fn emit(path: &Path, text: &str, out: &mut dyn Write) -> Result<()> {
    if path == Path::new("-") {
        out.write_all(text.as_bytes())?;
    } else {
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn cmd_verify(a: CampaignArgs, out: &mut dyn Write) -> Result<i32> {
    let specs = campaigns(&a)?;
    let result = run_campaigns(&specs)?;
    let ledger = result.ledger();
    if let Some((path, format)) = output_target(&a, &specs) {
        emit(&path, &ledger.render(format)?, out)?;
    }
    let summary = ledger.summary();
    writeln!(out, "{}", summary.line())?;
    Ok(summary.exit_code())
}

fn cmd_table(a: CampaignArgs, out: &mut dyn Write) -> Result<i32> {
    let mut specs = campaigns(&a)?;
    for spec in &mut specs {
        spec.checks = vec![Check::Formula];
    }
    let result = run_campaigns(&specs)?;
    let csv = result.table_csv()?;
    match output_target(&a, &specs) {
        Some((path, _)) => emit(&path, &csv, out)?,
        None => out.write_all(csv.as_bytes())?,
    }
    let table = result.table();
    Ok(if table.iter().any(|r| r.matched == "no") {
        EXIT_CHECK_FAILED
    } else if table.iter().any(|r| r.matched == "unknown") {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}

fn cmd_check_cert(a: CheckCertArgs, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input, a.one_indexed)?;
    let target = if a.middle {
        middle_graph(&g)?.graph().clone()
    } else {
        g
    };
    let report: SolveReport = serde_json::from_str(&read_input(&a.report)?)?;
    let Some(cert) = report.certificate.clone() else {
        writeln!(out, "invalid: report carries no certificate")?;
        return Ok(EXIT_CHECK_FAILED);
    };
    let kind_matches = matches!(
        (report.problem, &cert),
        (Problem::Tdc, Certificate::Tdc(_))
            | (Problem::Chromatic, Certificate::Coloring { .. })
            | (Problem::EdgeChromatic, Certificate::EdgeColoring { .. })
            | (Problem::TotalDomination, Certificate::TotalDominatingSet(_))
            | (Problem::Independence, Certificate::IndependentSet { .. })
    );
    let verdict = if !kind_matches {
        Err("certificate kind does not match the problem".to_string())
    } else {
        match cert.reindex(target.order()) {
            Err(e) => Err(e.to_string()),
            Ok(cert) if !cert.validates(&target) => {
                Err("certificate does not validate".to_string())
            }
            Ok(cert) if report.upper_bound != Some(cert.value()) => Err(format!(
                "certificate value {} differs from the reported upper bound",
                cert.value()
            )),
            Ok(cert) => Ok(cert.value()),
        }
    };
    match verdict {
        Ok(value) => {
            writeln!(
                out,
                "valid: {} certificate of value {value}",
                report.problem
            )?;
            Ok(EXIT_OK)
        }
        Err(reason) => {
            writeln!(out, "invalid: {reason}")?;
            Ok(EXIT_CHECK_FAILED)
        }
    }
}
