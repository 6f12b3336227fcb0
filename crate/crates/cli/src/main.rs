//! `geomstir`: tables, conformance runs, oracle counts and asymptotic error
//! reports from the command line.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geomstir_core::arith::{format_rational, parse_rational};
use geomstir_core::asymptotics::{error_decay_report, AsymptoticParams};
use geomstir_core::euler::{euler_polynomial, euler_value};
use geomstir_core::exp_poly::s_exp_explicit;
use geomstir_core::geom::{a_poly, m_polynomial};
use geomstir_core::harness::{run_suite, GridSpec};
use geomstir_core::oracle::oracle_compare;
use geomstir_core::stirling::{s1, s2};
use geomstir_core::{BPAConfig, EulerParams, ExpPolyParams, Rational, XPolynomial};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "geomstir",
    version,
    about = "Exact generalized Stirling, geometric, exponential and Euler polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate one family over a range of n.
    Compute(ComputeArgs),
    /// Run the identity suite over a grid; exits 1 if a hard identity fails.
    Verify(VerifyArgs),
    /// Count barred preferential arrangements by enumeration and compare.
    Oracle(OracleArgs),
    /// Exact values against the large-lambda expansion.
    Asymptotic(AsymptoticArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Stirling,
    StirlingDual,
    #[value(name = "A")]
    A,
    #[value(name = "M")]
    M,
    ExpPoly,
    Euler,
}

impl Family {
    fn id(self) -> &'static str {
        match self {
            Family::Stirling => "stirling",
            Family::StirlingDual => "stirling-dual",
            Family::A => "A",
            Family::M => "M",
            Family::ExpPoly => "exp-poly",
            Family::Euler => "euler",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// `a..b` or `a..=b` (both inclusive), or a single `n`.
fn n_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a nonnegative integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

#[derive(Clone)]
struct Lambdas(Vec<u32>);

fn lambda_list(s: &str) -> Result<Lambdas, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("`{t}` is not a nonnegative integer")))
        .collect::<Result<_, _>>()
        .map(Lambdas)
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    alpha: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    beta: Rational,
    /// Also `r` for exp-poly. For euler, omitting it gives polynomials in gamma.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    gamma: Option<Rational>,
    #[arg(long, default_value_t = 1)]
    lambda: u32,
    /// Evaluate at this point instead of printing coefficients.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    x: Option<Rational>,
    #[arg(long, value_parser = n_range)]
    n: (usize, usize),
    /// Stirling column; all `k <= n` when omitted.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON grid file; the shipped default grid when omitted.
    #[arg(long)]
    grid: Option<PathBuf>,
    /// Identity ids or family names, comma separated.
    #[arg(long, value_delimiter = ',')]
    select: Option<Vec<String>>,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    lambda: u32,
    #[arg(long, default_value_t = 0)]
    alpha: u64,
    #[arg(long, default_value_t = 1)]
    beta: u64,
    #[arg(long, default_value_t = 0)]
    gamma: u64,
    #[arg(long, default_value_t = 1)]
    x: u64,
}

#[derive(Args)]
struct AsymptoticArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    alpha: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    beta: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    gamma: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    x: Rational,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[arg(long, value_parser = lambda_list, default_value = "64,128,256")]
    lambdas: Lambdas,
    #[command(flatten)]
    output: Output,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Hard,
}

impl From<geomstir_core::Error> for Failure {
    fn from(e: geomstir_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize)]
struct OutputRecord {
    family: &'static str,
    params: BTreeMap<&'static str, String>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<String>>,
}

/// Flat CSV shape of [`OutputRecord`].
#[derive(Serialize)]
struct CsvRow {
    family: &'static str,
    params: String,
    n: usize,
    k: String,
    value: String,
    coefficients: String,
}

impl OutputRecord {
    fn csv_row(&self) -> CsvRow {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        CsvRow {
            family: self.family,
            params: params.join(";"),
            n: self.n,
            k: self.k.map(|k| k.to_string()).unwrap_or_default(),
            value: self.value.clone().unwrap_or_default(),
            coefficients: self.coefficients.as_ref().map(|c| c.join(";")).unwrap_or_default(),
        }
    }
}

fn coefficients(p: &XPolynomial) -> Vec<String> {
    if p.coeffs().is_empty() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(format_rational).collect()
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(io::BufWriter::new(fs::File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn write_records<T: Serialize, R: Serialize>(
    records: &[T],
    output: &Output,
    csv_row: impl Fn(&T) -> R,
) -> Result<(), Failure> {
    let mut w = sink(&output.out)?;
    match output.format {
        Format::Jsonl => {
            for r in records {
                let line = serde_json::to_string(r).map_err(|e| Failure::Usage(e.to_string()))?;
                writeln!(w, "{line}")?;
            }
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            for r in records {
                c.serialize(csv_row(r))?;
            }
            c.flush()?;
        }
    }
    w.flush()?;
    Ok(())
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let ComputeArgs { family, alpha, beta, lambda, x, k, .. } = args;
    let gamma_or_zero = args.gamma.clone().unwrap_or_default();
    let mut params: BTreeMap<&'static str, String> = BTreeMap::new();
    params.insert("alpha", format_rational(alpha));
    params.insert("beta", format_rational(beta));
    match family {
        Family::M => {}
        Family::Euler => {
            if let Some(g) = &args.gamma {
                params.insert("gamma", format_rational(g));
            }
        }
        _ => {
            params.insert("gamma", format_rational(&gamma_or_zero));
        }
    }
    if matches!(family, Family::A | Family::Euler) {
        params.insert("lambda", lambda.to_string());
    }
    if let (Some(x), Family::A | Family::M | Family::ExpPoly) = (x, family) {
        params.insert("x", format_rational(x));
    }
    if *family == Family::Euler && x.is_some() {
        return Err(Failure::Usage("euler takes --gamma as its variable, not --x".into()));
    }

    let record =
        |n: usize, k: Option<usize>, value: Option<Rational>, poly: Option<XPolynomial>| OutputRecord {
            family: family.id(),
            params: params.clone(),
            n,
            k,
            value: value.as_ref().map(format_rational),
            coefficients: poly.as_ref().map(coefficients),
        };
    let poly_or_value = |n: usize, p: XPolynomial| match x {
        Some(x) => record(n, None, Some(p.eval(x)), None),
        None => record(n, None, None, Some(p)),
    };

    let mut records = Vec::new();
    for n in args.n.0..=args.n.1 {
        match family {
            Family::Stirling | Family::StirlingDual => {
                let ks: Vec<usize> = match k {
                    Some(k) => vec![*k],
                    None => (0..=n).collect(),
                };
                for k in ks {
                    let v = if *family == Family::Stirling {
                        s2(n, k, alpha, beta, &gamma_or_zero)
                    } else {
                        s1(n, k, alpha, beta, &gamma_or_zero)
                    };
                    records.push(record(n, Some(k), Some(v), None));
                }
            }
            Family::A => records.push(poly_or_value(n, a_poly(*lambda, alpha, beta, &gamma_or_zero, n))),
            Family::M => records.push(poly_or_value(n, m_polynomial(alpha, beta, n))),
            Family::ExpPoly => {
                let p = ExpPolyParams::new(alpha.clone(), beta.clone(), gamma_or_zero.clone());
                records.push(poly_or_value(n, s_exp_explicit(&p, n)));
            }
            Family::Euler => match &args.gamma {
                Some(g) => records.push(record(n, None, Some(euler_value(*lambda, alpha, beta, g, n)), None)),
                None => {
                    let p = EulerParams::new(*lambda, alpha.clone(), beta.clone());
                    records.push(record(n, None, None, Some(euler_polynomial(&p, n))));
                }
            },
        }
    }
    write_records(&records, &args.output, OutputRecord::csv_row)
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let mut grid = match &args.grid {
        Some(path) => GridSpec::from_json(&fs::read_to_string(path)?)?,
        None => GridSpec::default_grid(),
    };
    if let Some(sel) = &args.select {
        grid.select = Some(sel.clone());
    }
    let report = run_suite(&grid)?;
    if let Some(path) = &args.out {
        fs::write(path, report.to_json())?;
    }
    print!("{}", report.to_text());
    if report.hard_ok {
        Ok(())
    } else {
        Err(Failure::Hard)
    }
}

fn oracle(args: &OracleArgs) -> Result<(), Failure> {
    let cfg = BPAConfig {
        n: args.n,
        lambda: args.lambda,
        alpha: args.alpha,
        beta: args.beta,
        gamma: args.gamma,
        x: args.x,
    };
    let (count, value) = oracle_compare(&cfg)?;
    let verdict = if Rational::from_integer(count.clone()) == value { "MATCH" } else { "MISMATCH" };
    println!("count={count} value={} {verdict}", format_rational(&value));
    Ok(())
}

#[derive(Clone, Serialize)]
struct DecayRecord {
    lambda: u32,
    exact: String,
    predicted: String,
    rel_error: String,
    ratio: Option<String>,
}

/// Twelve significant digits.
fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

fn asymptotic(args: &AsymptoticArgs) -> Result<(), Failure> {
    let p = AsymptoticParams::new(args.alpha.clone(), args.beta.clone(), args.gamma.clone(), args.x.clone());
    let rows = error_decay_report(&p, args.n, args.s, &args.lambdas.0)?;
    let records: Vec<DecayRecord> = rows
        .iter()
        .map(|r| DecayRecord {
            lambda: r.lambda,
            exact: format_rational(&r.exact),
            predicted: format_rational(&r.predicted),
            rel_error: sig12(r.rel_error),
            ratio: r.ratio.map(sig12),
        })
        .collect();
    write_records(&records, &args.output, DecayRecord::clone)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => oracle(a),
        Command::Asymptotic(a) => asymptotic(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Hard) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
