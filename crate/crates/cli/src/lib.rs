//! Command-line front end: `eval`, `table` and `verify`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use degen::identities::{self, IdentityReport};
use degen::rational::{display, parse};
use degen::{Error, ErrorKind, EvalMode, Family, NumberQuery, Rational};
use serde::Serialize;

pub const CSV_HEADER: &str = "family,n,m,p,lambda,lambda1,mode,value_exact,value_float";
pub const MAX_TERMS_ENV: &str = "DEGEN_MAX_TERMS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEXPECTED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "degen", version, about = "Degenerate hypergeometric numbers: evaluation, tables, identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one number.
    Eval(EvalArgs),
    /// Evaluate a family over ranges of n, m and p.
    Table(TableArgs),
    /// Run registered identities ("all" or a list of ids).
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Numeric,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long)]
    pub family: String,
    /// Rational literal: "p/q", an integer or a terminating decimal.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub lambda1: String,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Relative stopping tolerance in numeric mode.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub n: usize,
    /// Derivative order; GolombekB reads its k from here.
    #[arg(long, visible_alias = "k", default_value_t = 0)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub p: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// A value, an inclusive range "a..b", or a comma list.
    #[arg(long)]
    pub n: String,
    #[arg(long, visible_alias = "k", default_value = "0")]
    pub m: String,
    #[arg(long, default_value = "1")]
    pub p: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write here (atomically) instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity ids, or "all".
    #[arg(default_value = "all")]
    pub ids: Vec<String>,
    #[arg(long, default_value = "verify-report.json")]
    pub report: PathBuf,
}

/// A library error or a plain I/O failure.
#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) => match e.kind() {
                ErrorKind::Domain => EXIT_DOMAIN,
                ErrorKind::NonConvergence => EXIT_NO_CONVERGENCE,
                ErrorKind::Parse => EXIT_PARSE,
            },
            CliError::Io(_) => EXIT_UNEXPECTED,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "IoError: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let max_terms = std::env::var(MAX_TERMS_ENV).ok();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, max_terms.as_deref(), out),
        Command::Table(a) => cmd_table(&a, max_terms.as_deref(), out),
        Command::Verify(a) => cmd_verify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "degen: {e}");
            e.exit_code()
        }
    }
}

/// The evaluation mode selected by the flags and the `DEGEN_MAX_TERMS` override.
pub fn eval_mode(mode: Mode, tol: Option<f64>, max_terms: Option<&str>) -> degen::Result<EvalMode> {
    let mut m = match mode {
        Mode::Exact => EvalMode::exact(),
        Mode::Numeric => EvalMode::numeric(),
    };
    if let Some(tol) = tol {
        m = m.with_tol(tol);
    }
    if let Some(raw) = max_terms {
        let n: usize = raw
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_TERMS_ENV} must be a positive integer, got {raw:?}")))?;
        m = m.with_max_terms(n);
    }
    m.validate()?;
    Ok(m)
}

struct Shared {
    family: Family,
    lambda: Rational,
    lambda1: Rational,
    mode: Mode,
    eval_mode: EvalMode,
}

fn shared(c: &CommonArgs, max_terms: Option<&str>) -> degen::Result<Shared> {
    Ok(Shared {
        family: c.family.parse()?,
        lambda: parse(&c.lambda)?,
        lambda1: parse(&c.lambda1)?,
        mode: c.mode,
        eval_mode: eval_mode(c.mode, c.tol, max_terms)?,
    })
}

fn query(s: &Shared, n: usize, m: usize, p: usize) -> NumberQuery {
    NumberQuery::new(s.family, n, m, p, s.lambda.clone())
        .with_lambda1(s.lambda1.clone())
        .with_mode(s.eval_mode)
}

fn cmd_eval(a: &EvalArgs, max_terms: Option<&str>, out: &mut dyn Write) -> CliResult<i32> {
    let s = shared(&a.common, max_terms)?;
    let value = query(&s, a.n, a.m, a.p).evaluate()?;
    writeln!(out, "{value}")?;
    Ok(EXIT_OK)
}

/// Parses `"3"`, `"0..4"` (inclusive) or `"1,3,5"` into a sorted, deduplicated list.
pub fn parse_range(s: &str) -> degen::Result<Vec<usize>> {
    let bad = || Error::Parse(format!("invalid range {s:?}"));
    let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let mut values = Vec::new();
    for part in s.split(',') {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                let (lo, hi) = (int(lo)?, int(hi)?);
                if lo > hi {
                    return Err(bad());
                }
                values.extend(lo..=hi);
            }
            None => values.push(int(part)?),
        }
    }
    values.sort_unstable();
    values.dedup();
    Ok(values)
}

/// One table row; field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub lambda: String,
    pub lambda1: String,
    pub mode: String,
    pub value_exact: Option<String>,
    pub value_float: String,
}

impl Row {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.m,
            self.p,
            self.lambda,
            self.lambda1,
            self.mode,
            self.value_exact.as_deref().unwrap_or(""),
            self.value_float
        )
    }
}

/// Shortest round-trip decimal, switching to exponent form for very large or small magnitudes.
pub fn float_text(x: f64) -> String {
    let a = x.abs();
    if x != 0.0 && x.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Evaluates every `(n, m, p)` of the request. Any failure discards the whole table.
pub fn table_rows(a: &TableArgs, max_terms: Option<&str>) -> degen::Result<Vec<Row>> {
    let s = shared(&a.common, max_terms)?;
    let (ns, ms, ps) = (parse_range(&a.n)?, parse_range(&a.m)?, parse_range(&a.p)?);
    let mut rows = Vec::with_capacity(ns.len() * ms.len() * ps.len());
    for &n in &ns {
        for &m in &ms {
            for &p in &ps {
                let value = query(&s, n, m, p).evaluate()?;
                rows.push(Row {
                    family: s.family.name().to_string(),
                    n,
                    m,
                    p,
                    lambda: display(&s.lambda),
                    lambda1: display(&s.lambda1),
                    mode: s.mode.name().to_string(),
                    value_exact: value.exact().map(display),
                    value_float: float_text(value.to_f64()),
                });
            }
        }
    }
    Ok(rows)
}

pub fn render_table(rows: &[Row], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in rows {
                s.push_str(&r.csv_line());
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
    }
}

/// Parses one CSV line back into the query that produced it.
pub fn query_from_csv_line(line: &str, max_terms: Option<&str>) -> degen::Result<(NumberQuery, Option<String>)> {
    let cols: Vec<&str> = line.split(',').collect();
    if cols.len() != 9 {
        return Err(Error::Parse(format!("expected 9 columns, got {}", cols.len())));
    }
    let index = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("invalid index {t:?}")));
    let mode = match cols[6] {
        "exact" => Mode::Exact,
        "numeric" => Mode::Numeric,
        other => return Err(Error::Parse(format!("invalid mode {other:?}"))),
    };
    let q = NumberQuery::new(cols[0].parse()?, index(cols[1])?, index(cols[2])?, index(cols[3])?, parse(cols[4])?)
        .with_lambda1(parse(cols[5])?)
        .with_mode(eval_mode(mode, None, max_terms)?);
    let exact = (!cols[7].is_empty()).then(|| cols[7].to_string());
    Ok((q, exact))
}

fn write_atomically(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn cmd_table(a: &TableArgs, max_terms: Option<&str>, out: &mut dyn Write) -> CliResult<i32> {
    let rows = table_rows(a, max_terms)?;
    let text = render_table(&rows, a.format);
    match &a.output {
        Some(path) => write_atomically(path, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub all_as_expected: bool,
    pub identities: Vec<IdentityReport>,
}

/// Runs the named identities (`"all"` expands to the registry) in registry order.
pub fn verify(ids: &[String]) -> degen::Result<VerifyReport> {
    let known = identities::ids();
    let selected: Vec<&str> = if ids.iter().any(|i| i == "all") {
        known.clone()
    } else {
        for id in ids {
            if !known.contains(&id.as_str()) {
                return Err(Error::Parse(format!("unknown identity {id:?}")));
            }
        }
        known.iter().copied().filter(|k| ids.iter().any(|i| i == k)).collect()
    };
    let reports: Vec<IdentityReport> = identities::registry()
        .iter()
        .filter(|s| selected.contains(&s.id))
        .map(identities::run_identity)
        .collect();
    Ok(VerifyReport { all_as_expected: identities::all_as_expected(&reports), identities: reports })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let report = verify(&a.ids)?;
    for r in &report.identities {
        writeln!(out, "{}", r.summary_line())?;
    }
    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    write_atomically(&a.report, &json)?;
    Ok(if report.all_as_expected { EXIT_OK } else { EXIT_UNEXPECTED })
}
