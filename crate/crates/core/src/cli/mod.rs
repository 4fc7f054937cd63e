//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards `std::env::args` and the standard streams.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 pole or domain error,
//! 3 a verification or identity check failed.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

pub use render::{decimal, latex, EvalJson};

use crate::closed_form::{evaluate, DerivativeQuery, TrigFn};
use crate::cyclo::cyclotomic_poly;
use crate::error::Error;
use crate::exact_kernel::{bernoulli_poly, euler_poly};
use crate::oracle::{check_decompositions, sweep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MATH: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

/// Parses `p/q` or `p` with an optional leading sign, base 10, no whitespace.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("expected a rational like 3/4 or -2, got {s:?}");
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    let negative = s.starts_with('-');
    let (num, den) = body.split_once('/').unwrap_or((body, "1"));
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return Err(bad());
    }
    let mut p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    if negative {
        p = -p;
    }
    Ok(BigRational::new(p, q))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct RationalList(Vec<BigRational>);

fn parse_rational_list(s: &str) -> Result<RationalList, String> {
    if s.is_empty() {
        return Ok(RationalList::default());
    }
    s.split(',').map(parse_rational).collect::<Result<_, _>>().map(RationalList)
}

fn parse_fn(s: &str) -> Result<TrigFn, String> {
    s.parse().map_err(|_| format!("expected one of cot, csc, tan, sec, got {s:?}"))
}

fn parse_order_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let bad = || format!("expected an order range like 1..6 or a single order, got {s:?}");
    let (lo, hi) = s.split_once("..").unwrap_or((s, s));
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u32 = lo.parse().map_err(|_| bad())?;
    let hi: u32 = hi.parse().map_err(|_| bad())?;
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

fn parse_s(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 1.0 && v.is_finite() => Ok(v),
        _ => Err(format!("s must be a real number > 1, got {s:?}")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
    Decimal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    Bernoulli,
    Euler,
    Cyclotomic,
}

#[derive(Parser, Debug)]
#[command(name = "trigderiv", version, about = "Exact derivatives of cot, csc, tan, sec at rational multiples of pi")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one derivative exactly.
    Eval(EvalArgs),
    /// Check closed forms against the derivative oracle over a sweep.
    Verify(VerifyArgs),
    /// Tabulate derivatives over orders and points.
    Table(TableArgs),
    /// Print a Bernoulli, Euler or cyclotomic polynomial.
    Poly(PolyArgs),
    /// Check the zeta-series decompositions numerically.
    Identities(IdentitiesArgs),
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long = "fn", value_parser = parse_fn)]
    function: TrigFn,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    x: BigRational,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Digits after the point; default 50 for decimal output. Adds a
    /// `decimal` field to JSON output.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=100_000))]
    digits: Option<u32>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_n: u32,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(2..=4096))]
    max_q: u64,
    /// Working precision in bits.
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(64..))]
    precision: u32,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long = "fn", value_parser = parse_fn)]
    function: TrigFn,
    /// `a..b` or a single order.
    #[arg(long, value_parser = parse_order_range)]
    n: RangeInclusive<u32>,
    /// Comma-separated points; may be empty.
    #[arg(long, value_parser = parse_rational_list, allow_hyphen_values = true, default_value = "")]
    x: RationalList,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..=100_000))]
    digits: u32,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(value_enum)]
    kind: PolyKind,
    n: u32,
}

#[derive(Args, Debug)]
struct IdentitiesArgs {
    #[arg(long, value_delimiter = ',', value_parser = parse_s, default_values_t = [2.0, 3.0, 4.0])]
    s: Vec<f64>,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=64))]
    max_q: u64,
    #[arg(long, value_parser = parse_tol, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_MATH,
    }
}

type CmdResult = Result<i32, Error>;

/// Runs the program on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Poly(a) => cmd_poly(a, out),
        Command::Identities(a) => cmd_identities(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Domain(format!("write failed: {e}"))
}

fn json<T: serde::Serialize + ?Sized>(v: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Domain(format!("serialization failed: {e}")))
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> CmdResult {
    let query = DerivativeQuery::new(a.function, a.n, a.x)?;
    let ev = evaluate(&query)?;
    let digits = a.digits.map(|d| d as usize);
    let text = match a.format {
        OutputFormat::Text => ev.value.to_string(),
        OutputFormat::Latex => latex(&ev.value),
        OutputFormat::Decimal => decimal(&ev.value, digits.unwrap_or(50))?,
        OutputFormat::Json => json(&EvalJson::new(&ev, digits)?)?,
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let reports = sweep(a.max_n, a.max_q, a.precision as usize)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    match a.format {
        ReportFormat::Json => writeln!(out, "{}", json(&reports)?).map_err(io)?,
        ReportFormat::Text => {
            for r in &reports {
                writeln!(out, "{r}").map_err(io)?;
            }
            if failed == 0 {
                writeln!(out, "all {} cases pass", reports.len()).map_err(io)?;
            } else {
                writeln!(out, "{failed} of {} cases fail", reports.len()).map_err(io)?;
            }
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_table(a: TableArgs, out: &mut dyn Write) -> CmdResult {
    let mut xs = a.x.0;
    xs.sort();
    xs.dedup();
    let mut rows = Vec::new();
    for n in a.n.clone() {
        for x in &xs {
            rows.push(evaluate(&DerivativeQuery::new(a.function, n, x.clone())?)?);
        }
    }
    let digits = a.digits as usize;
    match a.format {
        OutputFormat::Json => {
            let items = rows
                .iter()
                .map(|ev| EvalJson::new(ev, Some(digits)))
                .collect::<Result<Vec<_>, _>>()?;
            writeln!(out, "{}", json(&items)?).map_err(io)?;
        }
        OutputFormat::Latex => {
            for ev in &rows {
                writeln!(out, "{} & {} & {} \\\\", ev.query.order, ev.query.x, latex(&ev.value)).map_err(io)?;
            }
        }
        OutputFormat::Text | OutputFormat::Decimal => {
            writeln!(out, "fn\tn\tx\tvalue").map_err(io)?;
            for ev in &rows {
                let value = if a.format == OutputFormat::Text {
                    ev.value.to_string()
                } else {
                    decimal(&ev.value, digits)?
                };
                writeln!(out, "{}\t{}\t{}\t{}", a.function, ev.query.order, ev.query.x, value).map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_poly(a: PolyArgs, out: &mut dyn Write) -> CmdResult {
    let poly = match a.kind {
        PolyKind::Bernoulli => bernoulli_poly(a.n as usize),
        PolyKind::Euler => euler_poly(a.n as usize),
        PolyKind::Cyclotomic => {
            if a.n == 0 {
                return Err(Error::InvalidArgument("cyclotomic index must be >= 1".into()));
            }
            cyclotomic_poly(a.n as u64)
        }
    };
    writeln!(out, "{poly}").map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_identities(a: IdentitiesArgs, out: &mut dyn Write) -> CmdResult {
    let report = check_decompositions(&a.s, a.max_q, a.tol)?;
    match a.format {
        ReportFormat::Text => writeln!(out, "{report}").map_err(io)?,
        ReportFormat::Json => writeln!(out, "{}", json(&report)?).map_err(io)?,
    }
    Ok(if report.pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
}
