//! Command-line front end for the `lacunary` library.
//!
//! Three subcommands:
//!
//! - `verify` sweeps registry checks over a prime range and prints a report
//!   in table, JSON, or CSV form,
//! - `compute` evaluates one quantity: class harmonic sums (`h`, `s`),
//!   binomial class sums (`t`, `tstar`), Lucas-sequence terms (`seq`), or a
//!   single registry check at one prime (`check`),
//! - `list` prints the check registry in its stable alphabetical order.
//!
//! Exit status is a pure function of what was computed: 0 when nothing
//! asserted failed (skipped rows are neutral), 1 when an asserted row failed
//! or a claimed divisibility did not hold, 2 on usage errors. Usage errors go
//! to standard error; reports go to standard output.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lacunary::checks::{
    list_checks, run_check, run_suite, CheckParams, CheckResult, Report, RunOptions, Status,
};
use lacunary::padic::PrimeRange;
use lacunary::sequences::{seq_exact, seq_mod, LucasKind};
use lacunary::sums::{binomial_lacunary, harmonic_double, harmonic_lacunary, ClassSpec};
use lacunary::Error;

/// Environment variable consulted for the default worker count when `--jobs`
/// is absent.
const JOBS_ENV: &str = "LACUNARY_JOBS";

#[derive(Parser)]
#[command(
    name = "lacunary",
    version,
    about = "Verify lacunary harmonic and binomial congruences over prime ranges"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks over a prime range and print a report.
    Verify(VerifyArgs),
    /// Compute a single quantity and print it.
    Compute(ComputeArgs),
    /// List the check registry (id, modulus, applicability, description).
    List(ListArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated check ids, or `all` for every asserted check.
    #[arg(long)]
    checks: Option<String>,
    /// Smallest prime to test.
    #[arg(long, default_value_t = 5)]
    pmin: u64,
    /// Largest prime to test.
    #[arg(long, default_value_t = 199)]
    pmax: u64,
    /// Class moduli: comma-separated values and inclusive `lo..hi` ranges.
    #[arg(long, default_value = "2..12")]
    moduli: String,
    /// Worker threads (default: $LACUNARY_JOBS, else all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Evaluate cells whose prime divides the class modulus instead of
    /// skipping them.
    #[arg(long)]
    include_p_dividing_m: bool,
    /// Stop at the first failing cell (sequential).
    #[arg(long)]
    fail_fast: bool,
    /// Also run the report-only statements (never affects the exit status).
    #[arg(long)]
    report_only_exceptions: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// In table format, print every row instead of failures only.
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(subcommand)]
    what: ComputeWhat,
}

#[derive(Subcommand)]
enum ComputeWhat {
    /// Class harmonic sum over 1..=p-1, k in class r mod m, in Z/p^e.
    #[command(name = "h", visible_alias = "H")]
    Harmonic(HarmonicArgs),
    /// Double class sum (inner full prefix, outer class-restricted) in Z/p^e.
    #[command(name = "s", visible_alias = "S")]
    Double(DoubleArgs),
    /// Unsigned binomial class sum over row n (exact integer).
    #[command(name = "t", visible_alias = "T")]
    Binomial(BinomialArgs),
    /// Signed binomial class sum over row n (exact integer).
    #[command(name = "tstar", visible_alias = "Tstar")]
    BinomialSigned(BinomialArgs),
    /// Lucas-sequence term, exact or modulo p^e when --p is given.
    Seq(SeqArgs),
    /// Evaluate one registry check at a single prime and print its rows.
    Check(CheckComputeArgs),
}

#[derive(Args)]
struct HarmonicArgs {
    /// Residue class (reduced mod m; may be negative).
    #[arg(long)]
    r: i64,
    /// Class modulus.
    #[arg(long)]
    m: u64,
    /// Odd prime.
    #[arg(long)]
    p: u64,
    /// Precision exponent of the modulus p^e.
    #[arg(long, default_value_t = 1)]
    e: u32,
    /// Weight terms by (-1)^k.
    #[arg(long)]
    signed: bool,
}

#[derive(Args)]
struct DoubleArgs {
    #[arg(long)]
    r: i64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    e: u32,
}

#[derive(Args)]
struct BinomialArgs {
    /// Residue class (reduced mod m; may be negative).
    #[arg(long)]
    r: i64,
    /// Class modulus.
    #[arg(long)]
    m: u64,
    /// Binomial row.
    #[arg(long)]
    n: u64,
}

#[derive(Args)]
struct SeqArgs {
    /// Sequence name: fibonacci, lucas, pell, pell-lucas (or f/l/p/q).
    #[arg(long)]
    kind: String,
    /// Term index.
    #[arg(long)]
    n: u64,
    /// Reduce modulo p^e instead of printing the exact value.
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, default_value_t = 1)]
    e: u32,
}

#[derive(Args)]
struct CheckComputeArgs {
    /// Check id from `list`.
    #[arg(long)]
    id: String,
    /// Prime, for per-prime checks.
    #[arg(long)]
    p: Option<u64>,
    /// Class modulus (grid checks only; default: the whole default grid).
    #[arg(long)]
    m: Option<u64>,
    /// Keep only sub-cases with this class r.
    #[arg(long)]
    r: Option<i64>,
    /// Keep only sub-cases with this weight a.
    #[arg(long)]
    a: Option<i64>,
    /// Keep only sub-cases with this shift s.
    #[arg(long)]
    s: Option<i64>,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

/// CLI-level failure: carries the message and the exit status it maps to.
enum CliError {
    /// Bad parameters: exit 2.
    Usage(String),
    /// A computation surfaced a broken claim (divisibility): exit 1.
    Failure(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match &e {
            Error::NotDivisible { .. } | Error::IndivisibleClosedForm(..) => {
                CliError::Failure(format!("divisibility failure: {e}"))
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Compute(args) => cmd_compute(&args.what),
        Command::List(args) => cmd_list(args),
    }
}

/// Writes a report to standard output. A closed pipe (e.g. `| head`) is not
/// an error: the text is simply truncated and the computed exit status
/// stands.
fn emit(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    match std::io::stdout().write_all(text.as_bytes()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(CliError::Failure(format!("cannot write output: {e}"))),
    }
}

/// Parses `--moduli`: comma-separated entries, each a value or an inclusive
/// `lo..hi` range.
fn parse_moduli(text: &str) -> Result<Vec<u64>, CliError> {
    let bad = |token: &str| CliError::usage(format!("bad modulus `{token}`"));
    let mut out = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((lo, hi)) = token.split_once("..") {
            let lo: u64 = lo.trim().parse().map_err(|_| bad(token))?;
            let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad(token))?;
            if lo > hi {
                return Err(CliError::usage(format!("empty modulus range `{token}`")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(token.parse().map_err(|_| bad(token))?);
        }
    }
    if out.is_empty() {
        return Err(CliError::usage("no class moduli given"));
    }
    Ok(out)
}

fn resolve_jobs(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(jobs) = flag {
        if jobs == 0 {
            return Err(CliError::usage("--jobs must be at least 1"));
        }
        return Ok(jobs);
    }
    // 0 lets the thread pool pick its own default width.
    Ok(std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&v| v > 0)
        .unwrap_or(0))
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let range = PrimeRange::new(args.pmin, args.pmax)?;
    let moduli = parse_moduli(&args.moduli)?;
    let ids: Option<Vec<String>> = match args.checks.as_deref() {
        None | Some("all") => None,
        Some(list) => Some(
            list.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect(),
        ),
    };
    let opts = RunOptions {
        jobs: resolve_jobs(args.jobs)?,
        include_p_dividing_m: args.include_p_dividing_m,
        fail_fast: args.fail_fast,
        report_only_exceptions: args.report_only_exceptions,
    };
    let report = run_suite(&range, &moduli, ids.as_deref(), &opts)?;
    let rendered = match args.format {
        Format::Json => render_json(&report)? + "\n",
        Format::Csv => render_csv(&report),
        Format::Table => render_table(&report, args.verbose),
    };
    emit(&rendered)?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_compute(what: &ComputeWhat) -> Result<ExitCode, CliError> {
    let line = match what {
        ComputeWhat::Harmonic(a) => {
            let spec = class_spec(a.r, a.m, checked_bound(a.p)?)?;
            let value = harmonic_lacunary(&spec, a.p, a.e, a.signed)?;
            format!("{} (mod {})\n", value, value.modulus())
        }
        ComputeWhat::Double(a) => {
            let spec = class_spec(a.r, a.m, checked_bound(a.p)?)?;
            let value = harmonic_double(&spec, a.p, a.e)?;
            format!("{} (mod {})\n", value, value.modulus())
        }
        ComputeWhat::Binomial(a) => {
            format!("{}\n", binomial_lacunary(&class_spec(a.r, a.m, a.n)?, false)?)
        }
        ComputeWhat::BinomialSigned(a) => {
            format!("{}\n", binomial_lacunary(&class_spec(a.r, a.m, a.n)?, true)?)
        }
        ComputeWhat::Seq(a) => {
            let kind: LucasKind = a.kind.parse()?;
            match a.p {
                None => format!("{}\n", seq_exact(kind, a.n)?),
                Some(p) => {
                    let value = seq_mod(kind, a.n, p, a.e)?;
                    format!("{} (mod {})\n", value, value.modulus())
                }
            }
        }
        ComputeWhat::Check(a) => {
            let params = CheckParams {
                m: a.m,
                r: a.r,
                a: a.a,
                s: a.s,
            };
            let rows = run_check(&a.id, a.p, &params)?;
            let mut out = String::new();
            for row in &rows {
                out.push_str(&row_line(row));
                out.push('\n');
            }
            emit(&out)?;
            let broken = rows.iter().any(|r| {
                matches!(r.status, Status::Fail | Status::DivisibilityFailure)
            });
            return Ok(if broken {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            });
        }
    };
    emit(&line)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_list(args: &ListArgs) -> Result<ExitCode, CliError> {
    let mut out = String::new();
    match args.format {
        Format::Table => {
            for def in list_checks() {
                let tag = if def.report_only { "  [report-only]" } else { "" };
                out.push_str(&format!(
                    "{:<18} {:<8} {:<34} {}{}\n",
                    def.id,
                    def.modulus.to_string(),
                    def.applicability,
                    def.description,
                    tag
                ));
            }
        }
        Format::Json => {
            let entries: Vec<serde_json::Value> = list_checks()
                .iter()
                .map(|def| {
                    serde_json::json!({
                        "id": def.id,
                        "description": def.description,
                        "modulus": def.modulus.to_string(),
                        "applicability": def.applicability,
                        "report_only": def.report_only,
                    })
                })
                .collect();
            out = serde_json::to_string_pretty(&entries).expect("registry listing serializes");
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("id,modulus,applicability,report_only,description\n");
            for def in list_checks() {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_field(def.id),
                    csv_field(&def.modulus.to_string()),
                    csv_field(def.applicability),
                    def.report_only,
                    csv_field(def.description)
                ));
            }
        }
    }
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn class_spec(r: i64, m: u64, n: u64) -> Result<ClassSpec, CliError> {
    Ok(ClassSpec::new(r, m, n)?)
}

/// Upper summation bound `p - 1` for the per-prime sums, rejecting `p < 3`
/// before the subtraction can wrap.
fn checked_bound(p: u64) -> Result<u64, CliError> {
    if p < 3 {
        return Err(Error::NotOddPrime(p).into());
    }
    Ok(p - 1)
}

fn status_str(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
        Status::DivisibilityFailure => "divisibility-failure",
    }
}

fn row_line(row: &CheckResult) -> String {
    let mut line = format!("{:<20} {:<8} {}", row.check, status_str(row.status), row.modulus);
    if let Some(p) = row.p {
        line.push_str(&format!("  p={p}"));
    }
    if let Some(m) = row.m {
        line.push_str(&format!("  m={m}"));
    }
    if let Some(sub) = &row.sub {
        line.push_str(&format!("  [{sub}]"));
    }
    match (&row.lhs, &row.rhs) {
        (Some(l), Some(r)) => line.push_str(&format!("  lhs={l}  rhs={r}")),
        (Some(l), None) => line.push_str(&format!("  lhs={l}")),
        (None, Some(r)) => line.push_str(&format!("  rhs={r}")),
        (None, None) => {}
    }
    line
}

fn render_table(report: &Report, verbose: bool) -> String {
    let mut out = String::new();
    for row in &report.results {
        let interesting = matches!(
            row.status,
            Status::Fail | Status::DivisibilityFailure
        );
        if verbose || interesting {
            out.push_str(&row_line(row));
            out.push('\n');
        }
    }
    let s = &report.summary;
    out.push_str(&format!(
        "summary: {} pass, {} fail, {} skipped, {} divisibility-failure\n",
        s.pass, s.fail, s.skip, s.divfail
    ));
    out
}

fn render_json(report: &Report) -> Result<String, CliError> {
    serde_json::to_string_pretty(report)
        .map_err(|e| CliError::Usage(format!("report serialization failed: {e}")))
}

/// Minimal CSV quoting: fields containing a comma, quote, or newline are
/// wrapped in double quotes with embedded quotes doubled.
fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = String::from("check,p,m,sub,modulus,lhs,rhs,status\n");
    for row in &report.results {
        let opt_num = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        let opt_str = |v: &Option<String>| v.as_deref().map(csv_field).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            csv_field(&row.check),
            opt_num(row.p),
            opt_num(row.m),
            opt_str(&row.sub),
            csv_field(&row.modulus),
            opt_str(&row.lhs),
            opt_str(&row.rhs),
            status_str(row.status)
        ));
    }
    out
}
