use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use coxinv::rootsys::{BuildOptions, Irreducible};
use coxinv::structure::{analyze, CheckResult, CheckStatus, TypeReport, CSV_HEADER};
use coxinv::tables::{class_count, compare, Discrepancy, ExpectedTable};
use coxinv::Error;

const SCHEMA_VERSION: u32 = 1;

const EXIT_MISMATCH: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "coxinv", version, about = "Involution centralizers in finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the centralizer table of a type.
    Analyze(Common),
    /// Compare computed tables with the expected ones.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Pipe-separated table fixture replacing the embedded one.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Run the per-class and per-type checks.
    Theorems {
        #[command(flatten)]
        common: Common,
        /// Only report checks with this name (`gamma` selects 1.2).
        #[arg(long)]
        check: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    /// Type name: A, B, D (with --rank), E6, E7, E8, F4, G2, H3, H4, or I2 (with --m).
    #[arg(long = "type", value_name = "TYPE", required_unless_present = "all")]
    type_name: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Order parameter of the dihedral type I2(m).
    #[arg(long)]
    m: Option<usize>,
    /// Run every supported type of the standard list.
    #[arg(long, conflicts_with = "type_name")]
    all: bool,
    /// Allow E8.
    #[arg(long, conflicts_with = "skip_large")]
    large: bool,
    /// Exclude E8 (the default).
    #[arg(long)]
    skip_large: bool,
    /// Write one file per type into this directory instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Violation(_) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn standard_list(large: bool) -> Vec<Irreducible> {
    use Irreducible::*;
    let mut v = vec![H(3), H(4), F4, G2, E(6), E(7)];
    if large {
        v.push(E(8));
    }
    v.extend((1..=6).map(A));
    v.extend((2..=7).map(B));
    v.extend((4..=7).map(D));
    v.extend([5, 7, 8, 10].map(I2));
    v
}

fn resolve_type(c: &Common) -> Result<Vec<Irreducible>, Failure> {
    if c.all {
        return Ok(standard_list(c.large));
    }
    let name = c.type_name.as_deref().expect("clap requires --type without --all").trim();
    let t = if name.eq_ignore_ascii_case("I2") {
        let m = c.m.ok_or_else(|| usage("I2 needs --m"))?;
        Irreducible::I2(m)
    } else if name.chars().all(|ch| ch.is_ascii_alphabetic()) {
        let n = c.rank.ok_or_else(|| usage(format!("{name} needs --rank")))?;
        format!("{}{n}", name.to_ascii_uppercase()).parse::<Irreducible>()?
    } else {
        let t: Irreducible = name.parse()?;
        if c.rank.is_some_and(|n| n != t.rank()) {
            return Err(usage(format!("--rank disagrees with {name}")));
        }
        t
    };
    if let Irreducible::I2(m) = t {
        if m < 2 {
            return Err(usage("I2 needs m >= 2"));
        }
    }
    if t == Irreducible::E(8) && !c.large {
        return Err(usage("E8 is large; pass --large"));
    }
    Ok(vec![t])
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    body: T,
}

fn json<T: Serialize>(body: T) -> String {
    let mut s = serde_json::to_string_pretty(&Envelope { schema_version: SCHEMA_VERSION, body })
        .expect("reports serialise");
    s.push('\n');
    s
}

fn file_stem(t: Irreducible) -> String {
    t.to_string().replace(['(', ')'], "")
}

/// Writes per-type artefacts into `out`, or concatenates them on stdout.
fn emit(out: Option<&Path>, artefacts: &[(String, String)], ext: &str) -> Result<(), Failure> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            for (stem, text) in artefacts {
                fs::write(dir.join(format!("{stem}.{ext}")), text)?;
            }
        }
        None => {
            let mut stdout = io::stdout().lock();
            for (_, text) in artefacts {
                stdout.write_all(text.as_bytes())?;
            }
        }
    }
    Ok(())
}

fn csv(report: &TypeReport, header: bool) -> String {
    let mut s = String::new();
    if header {
        s.push_str(CSV_HEADER);
        s.push('\n');
    }
    for p in &report.profiles {
        s.push_str(&p.csv_row());
        s.push('\n');
    }
    s
}

fn run_analyze(c: &Common) -> Result<u8, Failure> {
    let types = resolve_type(c)?;
    let format = c.format.unwrap_or(Format::Csv);
    let mut artefacts = Vec::new();
    for (k, &t) in types.iter().enumerate() {
        let report = analyze(t, BuildOptions::default(), false)?;
        let text = match format {
            Format::Csv => csv(&report, c.out.is_some() || k == 0),
            Format::Json => json(&report),
        };
        artefacts.push((file_stem(t), text));
    }
    let ext = if format == Format::Csv { "csv" } else { "json" };
    emit(c.out.as_deref(), &artefacts, ext)?;
    Ok(0)
}

#[derive(Serialize)]
struct Verification {
    #[serde(rename = "type")]
    type_name: String,
    rows_compared: usize,
    classes_compared: usize,
    discrepancies: Vec<Discrepancy>,
}

fn run_verify(c: &Common, fixtures: Option<&Path>) -> Result<u8, Failure> {
    let types = resolve_type(c)?;
    let table = match fixtures {
        Some(path) => ExpectedTable::parse(&fs::read_to_string(path)?)?,
        None => ExpectedTable::embedded(),
    };
    let mut results = Vec::new();
    for &t in &types {
        let expected = table.rows_for(t)?;
        let report = analyze(t, BuildOptions::default(), false)?;
        results.push(Verification {
            type_name: report.type_name.clone(),
            rows_compared: expected.len(),
            classes_compared: class_count(&expected),
            discrepancies: compare(&expected, &report.profiles),
        });
    }
    let mismatch = results.iter().any(|v| !v.discrepancies.is_empty());
    let text = match c.format {
        Some(Format::Json) => json(serde_json::json!({ "verifications": &results })),
        _ => {
            let mut s = String::new();
            for v in &results {
                let verdict = if v.discrepancies.is_empty() { "ok" } else { "MISMATCH" };
                s.push_str(&format!("{}: {} rows compared: {verdict}\n", v.type_name, v.rows_compared));
                for d in &v.discrepancies {
                    s.push_str(&format!("  {d}\n"));
                }
            }
            s
        }
    };
    let ext = if c.format == Some(Format::Json) { "json" } else { "txt" };
    emit(c.out.as_deref(), &[("verify".to_string(), text)], ext)?;
    Ok(if mismatch { EXIT_MISMATCH } else { 0 })
}

fn check_matches(filter: Option<&str>, c: &CheckResult) -> bool {
    match filter {
        None => true,
        Some("gamma") => c.check == "1.2",
        Some(name) => c.check == name,
    }
}

#[derive(Serialize)]
struct TheoremReport<'a> {
    #[serde(rename = "type")]
    type_name: &'a str,
    passed: usize,
    failed: usize,
    skipped: usize,
    undetermined: usize,
    checks: Vec<&'a CheckResult>,
    gamma: Vec<(&'a str, String)>,
}

fn run_theorems(c: &Common, filter: Option<&str>) -> Result<u8, Failure> {
    let types = resolve_type(c)?;
    let reports: Vec<TypeReport> = types
        .iter()
        .map(|&t| analyze(t, BuildOptions::default(), true))
        .collect::<Result<_, _>>()?;
    let mut summaries = Vec::new();
    for r in &reports {
        let checks: Vec<&CheckResult> = r.checks.iter().filter(|x| check_matches(filter, x)).collect();
        let count = |s: CheckStatus| checks.iter().filter(|x| x.status == s).count();
        if filter.is_some() && checks.is_empty() {
            return Err(usage(format!("no check named {:?} for {}", filter.unwrap_or(""), r.type_name)));
        }
        summaries.push(TheoremReport {
            type_name: &r.type_name,
            passed: count(CheckStatus::Pass),
            failed: count(CheckStatus::Fail),
            skipped: count(CheckStatus::Skipped),
            undetermined: count(CheckStatus::Undetermined),
            gamma: r.profiles.iter().map(|p| (p.label.as_str(), p.gamma.to_string())).collect(),
            checks,
        });
    }
    let violation = summaries.iter().any(|s| s.failed > 0);
    let text = json(serde_json::json!({ "reports": &summaries }));
    emit(c.out.as_deref(), &[("theorems".to_string(), text)], "json")?;
    Ok(if violation { EXIT_VIOLATION } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Analyze(c) => run_analyze(c),
        Command::Verify { common, fixtures } => run_verify(common, fixtures.as_deref()),
        Command::Theorems { common, check } => run_theorems(common, check.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("coxinv: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
