//! `convolutive`: expand eta-products, test convolutivity, verify the
//! identity catalog and bijections, and scan OEIS dumps.
//!
//! Exit codes: 0 success, 2 a convolutivity or identity check failed,
//! 1 usage or I/O error.

mod fetch;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use convolutive::bijections::{verify_bijection, BijectionKind};
use convolutive::dissections::{identity_ids, verify_catalog, verify_identity, IdentityCheck};
use convolutive::oeis::{full_report, read_corpus, FitOptions, ScanOptions, DEFAULT_MIN_LEN};
use convolutive::series::is_m_convolutive;
use convolutive::{EtaProductSpec, TruncatedSeries};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "convolutive", version, about = "Convolutive eta-products: series, bijections and OEIS scans")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of an eta-product such as "1^-1 3^-1 4^1 6^2 12^-1".
    Expand {
        spec: String,
        #[arg(short = 'N', long = "order", default_value_t = 20)]
        order: usize,
    },
    /// Test whether a_{mn} is the n-th coefficient of the m-th power.
    Check {
        /// Eta-product to expand; omit when using --terms.
        spec: Option<String>,
        /// File of integers a_0, a_1, ... separated by commas or whitespace.
        #[arg(long, conflicts_with = "spec")]
        terms: Option<PathBuf>,
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'N', long = "order", default_value_t = 200)]
        order: usize,
    },
    /// Verify dissection identities and exhaustively check bijections.
    Verify {
        /// "all" or a comma-separated list of identity ids.
        #[arg(long, value_delimiter = ',')]
        identities: Vec<String>,
        #[arg(short = 'N', long = "order", default_value_t = 150)]
        order: usize,
        /// "all" or a comma-separated list of bijection names.
        #[arg(long, value_delimiter = ',')]
        bijections: Vec<String>,
        #[arg(short = 'W', long = "max-weight", default_value_t = 20)]
        max_weight: u64,
        /// Print the results as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Scan an OEIS stripped file (optionally .gz) for convolutive sequences.
    Scan {
        #[arg(long)]
        corpus: PathBuf,
        /// Values of m to test, comma-separated, each in 2..=6.
        #[arg(long = "m", value_delimiter = ',', default_value = "2,3,4,5,6")]
        m_values: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_MIN_LEN)]
        min_len: usize,
        /// Fit eta-products to the hits.
        #[arg(long)]
        fit: bool,
        /// Also try each failing sequence with a_0 = 1 prepended.
        #[arg(long)]
        prepend_one: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Download the compressed stripped file.
    Fetch {
        #[arg(long, default_value = fetch::DEFAULT_URL)]
        url: String,
        #[arg(long)]
        dest: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Violation,
}

fn parse_spec(s: &str) -> Result<EtaProductSpec> {
    s.parse().with_context(|| format!("cannot parse eta-product `{s}`"))
}

fn read_terms(path: &PathBuf) -> Result<Vec<BigInt>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let terms = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BigInt>().with_context(|| format!("`{t}` is not an integer")))
        .collect::<Result<Vec<_>>>()?;
    if terms.is_empty() {
        bail!("{} contains no terms", path.display());
    }
    Ok(terms)
}

fn expand(spec: &str, order: usize) -> Result<Status> {
    let series = parse_spec(spec)?.expand(order);
    let mut out = io::stdout().lock();
    for (n, a) in series.coeffs().iter().enumerate() {
        writeln!(out, "{n}\t{a}")?;
    }
    Ok(Status::Ok)
}

fn check(spec: Option<String>, terms: Option<PathBuf>, m: u32, order: usize) -> Result<Status> {
    let series = match (spec, terms) {
        (_, Some(path)) => TruncatedSeries::new(read_terms(&path)?),
        (Some(spec), None) => parse_spec(&spec)?.expand(order),
        (None, None) => bail!("give an eta-product or --terms FILE"),
    };
    let v = is_m_convolutive(&series, m)?;
    let last = v.terms_testable - 1;
    if v.holds {
        println!("holds: m = {m}, a_{{{m}n}} matches the {m}-th power for n <= {last}");
        Ok(Status::Ok)
    } else {
        let n = v.first_violation.expect("violation index");
        println!("violation: m = {m}, first failure at n = {n} (tested n <= {last})");
        Ok(Status::Violation)
    }
}

fn verify(
    identities: Vec<String>,
    order: usize,
    bijections: Vec<String>,
    max_weight: u64,
    json: bool,
) -> Result<Status> {
    let (identities, bijections) = if identities.is_empty() && bijections.is_empty() {
        (vec!["all".to_string()], vec!["all".to_string()])
    } else {
        (identities, bijections)
    };
    // resolve every name before running anything
    let mut kinds = Vec::new();
    for name in &bijections {
        for k in BijectionKind::resolve(name)? {
            if !kinds.contains(&k) {
                kinds.push(k);
            }
        }
    }
    let all_ids = identity_ids();
    for id in identities.iter().filter(|id| *id != "all") {
        if !all_ids.contains(&id.as_str()) {
            return Err(convolutive::Error::UnknownIdentity(id.clone()).into());
        }
    }

    let checks: Vec<IdentityCheck> = if identities.iter().any(|id| id == "all") {
        verify_catalog(order)?
    } else {
        identities.iter().map(|id| verify_identity(id, order)).collect::<Result<_, _>>()?
    };
    let reports: Vec<_> = kinds.into_iter().map(|k| verify_bijection(k, max_weight)).collect();
    let passed = checks.iter().all(|c| c.holds) && reports.iter().all(|r| r.passed());

    if json {
        let doc = verify_json(&checks, &reports)?;
        println!("{doc}");
    } else {
        for c in &checks {
            match c.first_failure {
                None => println!("PASS  {:<20} order {}", c.id, c.order),
                Some(n) => println!("FAIL  {:<20} order {}, first difference at q^{n}", c.id, c.order),
            }
        }
        for r in &reports {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            println!(
                "{verdict}  {:<20} weight <= {}, {} domain and {} codomain objects",
                r.name, r.max_weight, r.domain_checked, r.codomain_checked
            );
            for f in &r.failures {
                println!("      {f}");
            }
        }
    }
    Ok(if passed { Status::Ok } else { Status::Violation })
}

fn verify_json(
    checks: &[IdentityCheck],
    reports: &[convolutive::bijections::ContractReport],
) -> Result<String> {
    #[derive(serde::Serialize)]
    struct Doc<'a> {
        identities: &'a [IdentityCheck],
        bijections: &'a [convolutive::bijections::ContractReport],
    }
    Ok(serde_json::to_string_pretty(&Doc { identities: checks, bijections: reports })?)
}

#[allow(clippy::too_many_arguments)]
fn scan(
    corpus: PathBuf,
    m_values: Vec<u32>,
    min_len: usize,
    fit: bool,
    prepend_one: bool,
    format: Format,
    out: Option<PathBuf>,
) -> Result<Status> {
    let parsed = read_corpus(&corpus).with_context(|| format!("reading {}", corpus.display()))?;
    for w in &parsed.warnings {
        eprintln!("warning: line {}: {}", w.line, w.message);
    }
    let opts = ScanOptions {
        m_values,
        min_len,
        fit: fit.then(FitOptions::default),
        prepend_one,
    };
    let report = full_report(&parsed.entries, &opts)?;
    let text = match format {
        Format::Json => report.to_json()?,
        Format::Csv => report.to_csv()?,
    };
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    let counts: Vec<String> = report.summary.hits.iter().map(|(m, c)| format!("m={m}: {c}")).collect();
    eprintln!("scanned {} sequences; hits {}", report.summary.sequences, counts.join(", "));
    Ok(Status::Ok)
}

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Expand { spec, order } => expand(&spec, order),
        Command::Check { spec, terms, m, order } => check(spec, terms, m, order),
        Command::Verify { identities, order, bijections, max_weight, json } => {
            verify(identities, order, bijections, max_weight, json)
        }
        Command::Scan { corpus, m_values, min_len, fit, prepend_one, format, out } => {
            scan(corpus, m_values, min_len, fit, prepend_one, format, out)
        }
        Command::Fetch { url, dest } => {
            let (bytes, sha) = fetch::fetch(&url, &dest)?;
            eprintln!("wrote {} ({bytes} bytes, sha256 {sha})", dest.display());
            Ok(Status::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
