//! Command-line front end: `table`, `verify`, and `export`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or output
//! error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::gf;
use crate::spt_crank::{sb_series, sptbar2_series};
use crate::verify::{all_checks, run_checks, Check, CheckConfig, VerificationReport, MIN_ORDER};
use crate::IntSeries;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "spt-kernel", version, about = "Exact q-series kernel for the overpartition spt-crank")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// s̄pt₂(n) and the residue classes N_S̄B(k,t,n) for n ≤ N.
    Table(TableArgs),
    /// Run the identity checks and enumeration cross-checks.
    Verify(VerifyArgs),
    /// Dump a dissection component or the spt-crank table.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct Output {
    /// Truncation order N.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..=100_000))]
    order: u64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    output: Output,
    /// Modulus for the residue classes of the crank.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=1000))]
    t: u64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    output: Output,
    /// Largest n enumerated by the combinatorial cross-checks.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(0..=30))]
    oracle_bound: u32,
    /// Run only the named check (repeatable).
    #[arg(long)]
    only: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    #[value(name = "A2")]
    A2,
    #[value(name = "N2rank0")]
    N2rank0,
    #[value(name = "N2rank1")]
    N2rank1,
    #[value(name = "N2rank2")]
    N2rank2,
    #[value(name = "M2crank0")]
    M2crank0,
    #[value(name = "M2crank1")]
    M2crank1,
    #[value(name = "M2crank2")]
    M2crank2,
    #[value(name = "spt2")]
    Spt2,
    #[value(name = "sb")]
    Sb,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[command(flatten)]
    output: Output,
    #[arg(long, value_enum)]
    what: Target,
}

/// Parses `args` (program name first) and runs the command against the full
/// check suite.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_checks(args, &all_checks(), stdout, stderr)
}

/// As [`run`], with `verify` drawing from `checks` instead of the built-in
/// suite.
pub fn run_with_checks<I, T>(args: I, checks: &[Check], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let (output, result) = match &cli.command {
        Command::Table(a) => (&a.output, cmd_table(a)),
        Command::Verify(a) => (&a.output, cmd_verify(a, checks)),
        Command::Export(a) => (&a.output, cmd_export(a)),
    };
    let (text, code) = match result {
        Ok(done) => done,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            return EXIT_USAGE;
        }
    };
    let written = match &output.out {
        Some(path) => fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| format!("cannot write to stdout: {e}")),
    };
    match written {
        Ok(()) => code,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<(String, i32), String>;

fn csv_string<R: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: R) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| e.to_string())?;
    for row in rows {
        w.write_record(&row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn json_string(value: &impl Serialize) -> Result<String, String> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    sptbar2: String,
    classes: Vec<String>,
}

#[derive(Serialize)]
struct TableJson {
    order: usize,
    t: usize,
    rows: Vec<TableRow>,
}

fn cmd_table(a: &TableArgs) -> CmdResult {
    let order = a.output.order as usize;
    let t = a.t as usize;
    let table = sb_series(order);
    let rows: Vec<TableRow> = (1..=order)
        .map(|n| TableRow {
            n,
            sptbar2: table.sptbar2(n).to_string(),
            classes: table.residue_classes(n, t).iter().map(ToString::to_string).collect(),
        })
        .collect();
    let text = match a.output.format.unwrap_or(Format::Text) {
        Format::Json => json_string(&TableJson { order, t, rows })?,
        Format::Csv => {
            let mut header = vec!["n".to_string(), "sptbar2".to_string()];
            header.extend((0..t).map(|k| format!("N({k},{t},n)")));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_string(
                &header,
                rows.into_iter().map(|r| {
                    let mut rec = vec![r.n.to_string(), r.sptbar2];
                    rec.extend(r.classes);
                    rec
                }),
            )?
        }
        Format::Text => {
            let mut s = format!("{:>5}  {:>12}  N(k,{t},n) for k = 0..{}\n", "n", "sptbar2(n)", t - 1);
            for r in rows {
                let _ = writeln!(s, "{:>5}  {:>12}  [{}]", r.n, r.sptbar2, r.classes.join(", "));
            }
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn cmd_verify(a: &VerifyArgs, checks: &[Check]) -> CmdResult {
    let order = a.output.order as usize;
    if order < MIN_ORDER {
        return Err(format!("verify needs --order >= {MIN_ORDER}, got {order}"));
    }
    let selected: Vec<Check> = if a.only.is_empty() {
        checks.to_vec()
    } else {
        let mut chosen = Vec::new();
        for name in &a.only {
            let check = checks.iter().find(|c| c.name == name).ok_or_else(|| {
                let known: Vec<&str> = checks.iter().map(|c| c.name).collect();
                format!("unknown check '{name}' (known: {})", known.join(", "))
            })?;
            if !chosen.iter().any(|c: &Check| c.name == check.name) {
                chosen.push(*check);
            }
        }
        chosen
    };
    let config = CheckConfig { order, oracle_bound: a.oracle_bound };
    let reports = run_checks(&selected, &config);
    let code = if reports.iter().all(VerificationReport::passed) { EXIT_OK } else { EXIT_FAILED };
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut s = String::new();
            for r in &reports {
                s += &serde_json::to_string(r).map_err(|e| e.to_string())?;
                s.push('\n');
            }
            s
        }
        Format::Csv => csv_string(
            &["check", "order", "status", "n", "expected", "actual"],
            reports.iter().map(|r| {
                let (n, expected, actual) = match &r.first_failure {
                    Some(f) => (f.n.to_string(), f.expected.clone(), f.actual.clone()),
                    None => Default::default(),
                };
                let status = if r.passed() { "pass" } else { "fail" };
                vec![r.check.clone(), r.order.to_string(), status.to_string(), n, expected, actual]
            }),
        )?,
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{r}");
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            let _ = writeln!(s, "{passed} of {} checks passed", reports.len());
            s
        }
    };
    Ok((text, code))
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    target: &'a str,
    order: usize,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct SbTerm {
    m: i64,
    coefficient: String,
}

#[derive(Serialize)]
struct SbRow {
    n: usize,
    terms: Vec<SbTerm>,
}

#[derive(Serialize)]
struct SbJson {
    target: &'static str,
    order: usize,
    rows: Vec<SbRow>,
}

fn component(target: Target, order: usize) -> Option<(&'static str, IntSeries)> {
    Some(match target {
        Target::A2 => ("A2", gf::a2(order)),
        Target::N2rank0 => ("N2rank0", gf::rank_component(0, order)),
        Target::N2rank1 => ("N2rank1", gf::rank_component(1, order)),
        Target::N2rank2 => ("N2rank2", gf::rank_component(2, order)),
        Target::M2crank0 => ("M2crank0", gf::crank_component(0, order)),
        Target::M2crank1 => ("M2crank1", gf::crank_component(1, order)),
        Target::M2crank2 => ("M2crank2", gf::crank_component(2, order)),
        Target::Spt2 => ("spt2", sptbar2_series(order)),
        Target::Sb => return None,
    })
}

fn cmd_export(a: &ExportArgs) -> CmdResult {
    let order = a.output.order as usize;
    let format = a.output.format.unwrap_or(Format::Csv);
    if let Some((name, series)) = component(a.what, order) {
        let coefficients = series.coefficient_strings();
        let text = match format {
            Format::Json => json_string(&SeriesJson { target: name, order, coefficients })?,
            Format::Csv => csv_string(
                &["n", "coefficient"],
                coefficients.into_iter().enumerate().map(|(n, c)| vec![n.to_string(), c]),
            )?,
            Format::Text => format!("{name} = {series}\n"),
        };
        return Ok((text, EXIT_OK));
    }
    let table = sb_series(order);
    let text = match format {
        Format::Json => json_string(&SbJson {
            target: "sb",
            order,
            rows: (1..=order)
                .map(|n| SbRow {
                    n,
                    terms: table.row(n).terms().map(|(m, c)| SbTerm { m, coefficient: c.to_string() }).collect(),
                })
                .collect(),
        })?,
        Format::Csv => csv_string(
            &["n", "m", "coefficient"],
            table.entries().map(|(n, m, c)| vec![n.to_string(), m.to_string(), c.to_string()]),
        )?,
        Format::Text => {
            let mut s = String::new();
            for n in 1..=order {
                let _ = writeln!(s, "q^{n}: {}", table.row(n));
            }
            s
        }
    };
    Ok((text, EXIT_OK))
}
