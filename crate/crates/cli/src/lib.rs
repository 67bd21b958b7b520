//! `tcore` command-line front end.
//!
//! Exit codes: 0 on success, 1 when verification fails or output cannot be
//! written, 2 on usage errors. `TCORE_THREADS` sets the worker count.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use tcore::counting::{core_sums_from, CountTables};
use tcore::distribution::{
    core_size_asymptote, core_size_pmf, expected_core_size_of, gamma_moment_closed_form,
    scaled_moment, to_f64, CoreSizePmf, GammaParams,
};
use tcore::hookstats::{exact_residue_distribution, orbit_table, sampled_residue_distribution};
use tcore::sampling::{build_sampler, sample_batch};
use tcore::verify::{run_suite, Suite, VerificationReport};
use tcore::Partition;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "tcore", version, about = "t-cores of integer partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Series {
    #[value(name = "p")]
    Partitions,
    #[value(name = "c")]
    Cores,
    #[value(name = "d")]
    Divisible,
    #[value(name = "C")]
    CoreSums,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Sample,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// p(n), c_t(n), d_t(n) and C_t(n) for 0 ≤ n ≤ max-n.
    Counts {
        #[arg(long, value_parser = parse_t)]
        t: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "p,c,d,C")]
        series: Vec<Series>,
    },
    /// Exact law of the t-core size of a uniform partition of n.
    Pmf {
        #[arg(long, value_parser = parse_t)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Moments of the scaled core size against the gamma limit.
    Moments {
        #[arg(long, value_parser = parse_t)]
        t: usize,
        #[arg(long, value_delimiter = ',', default_value = "100,400,1600")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        max_k: u32,
    },
    /// CDFs of the scaled core size on a grid, with the gamma CDF.
    Figure1 {
        #[arg(long, value_parser = parse_t, default_value = "5")]
        t: usize,
        #[arg(long, value_delimiter = ',', default_value = "20,62,103")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 3.0)]
        x_max: f64,
        #[arg(long, default_value_t = 301)]
        points: usize,
    },
    /// Exact mean core size and its asymptote for 1 ≤ n ≤ max-n.
    Figure2 {
        #[arg(long, value_parser = parse_t, default_value = "3")]
        t: usize,
        #[arg(long, default_value_t = 100)]
        max_n: usize,
    },
    /// Distribution of hook lengths mod t.
    Hooks {
        #[arg(long, value_parser = parse_t)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The S_t orbit of a t-divisible partition with its smoothings.
    Orbit {
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_parser = parse_t)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        max_b: i64,
    },
    /// Uniform random partitions of n.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 22)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_t(s: &str) -> Result<usize, String> {
    let t: usize = s.parse().map_err(|e| format!("{e}"))?;
    if t < 2 {
        return Err(format!("t must be at least 2, got {t}"));
    }
    Ok(t)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: tcore::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        format!(
            "unknown suite {s:?}; expected one of {}",
            Suite::NAMES.join(", ")
        )
    })
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<tcore::Error> for Failure {
    fn from(e: tcore::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

/// A real with 17 significant digits, enough to round-trip an `f64`.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

/// An exact rational as `num/den`.
fn rational(r: &num_rational::BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

enum Report {
    Table(Table),
    Verification(VerificationReport),
}

fn require_sorted(n: &[usize]) -> Result<(), Failure> {
    if n.is_empty() || n.windows(2).any(|w| w[0] > w[1]) {
        return Err(Failure::Usage("n-list must be nonempty and sorted".into()));
    }
    Ok(())
}

fn counts(t: usize, max_n: usize, series: &[Series]) -> Result<Table, Failure> {
    let tables = CountTables::new(t, max_n)?;
    let sums = core_sums_from(&tables.cores);
    let mut table = Table::new(std::iter::once("n").chain(series.iter().map(|s| match s {
        Series::Partitions => "p",
        Series::Cores => "c_t",
        Series::Divisible => "d_t",
        Series::CoreSums => "C_t",
    })));
    for n in 0..=max_n {
        let mut row = vec![n.to_string()];
        for s in series {
            let v = match s {
                Series::Partitions => tables.partitions.get(n),
                Series::Cores => tables.cores.get(n),
                Series::Divisible => tables.divisible.get(n),
                Series::CoreSums => sums.get(n),
            };
            row.push(v.to_string());
        }
        table.push(row);
    }
    Ok(table)
}

fn pmf(t: usize, n: usize) -> Result<Table, Failure> {
    let pmf = core_size_pmf(t, n)?;
    let mut table = Table::new(["k", "c_t", "d_t", "mass", "mass_float"]);
    for k in pmf.support() {
        let (c, d) = pmf.factors(k);
        let mass = pmf.mass(k);
        table.push(vec![
            k.to_string(),
            c.to_string(),
            d.to_string(),
            rational(&mass),
            real(to_f64(&mass)),
        ]);
    }
    Ok(table)
}

fn moments(t: usize, ns: &[usize], max_k: u32) -> Result<Table, Failure> {
    require_sorted(ns)?;
    let g = GammaParams::for_cores(t)?;
    let mut table = Table::new([
        "n",
        "k",
        "raw_moment",
        "scaled_moment",
        "gamma_moment",
        "abs_gap",
    ]);
    for &n in ns {
        let pmf = core_size_pmf(t, n)?;
        for k in 1..=max_k {
            let scaled = scaled_moment(&pmf, k);
            let limit = gamma_moment_closed_form(&g, k);
            table.push(vec![
                n.to_string(),
                k.to_string(),
                rational(&pmf.raw_moment(k)),
                real(scaled),
                real(limit),
                real((scaled - limit).abs()),
            ]);
        }
    }
    Ok(table)
}

fn figure1(t: usize, ns: &[usize], x_max: f64, points: usize) -> Result<Table, Failure> {
    require_sorted(ns)?;
    if points < 2 || x_max.is_nan() || x_max <= 0.0 {
        return Err(Failure::Usage(
            "need at least 2 points and a positive x-max".into(),
        ));
    }
    let g = GammaParams::for_cores(t)?;
    let pmfs: Vec<CoreSizePmf> = ns
        .iter()
        .map(|&n| core_size_pmf(t, n))
        .collect::<tcore::Result<_>>()?;
    let mut columns = vec!["x".to_string()];
    columns.extend(ns.iter().map(|n| format!("cdf_n{n}")));
    columns.push("gamma".into());
    let mut table = Table::new(columns);
    for i in 0..points {
        let x = x_max * i as f64 / (points - 1) as f64;
        let mut row = vec![real(x)];
        row.extend(pmfs.iter().map(|p| real(p.scaled_cdf(x))));
        row.push(real(g.cdf(x)));
        table.push(row);
    }
    Ok(table)
}

fn figure2(t: usize, max_n: usize) -> Result<Table, Failure> {
    let tables = CountTables::new(t, max_n)?;
    let mut table = Table::new(["n", "expected_exact", "asymptote"]);
    for n in 1..=max_n {
        let e = expected_core_size_of(&CoreSizePmf::from_tables(&tables, n));
        table.push(vec![
            n.to_string(),
            real(e.exact_f64()),
            real(core_size_asymptote(t, n as f64)),
        ]);
    }
    Ok(table)
}

fn hooks(t: usize, n: usize, mode: Mode, samples: usize, seed: u64) -> Result<Table, Failure> {
    match mode {
        Mode::Exact => {
            let x = exact_residue_distribution(t, n)?;
            let mut table = Table::new(["residue", "probability", "probability_float"]);
            for (i, v) in x.iter().enumerate() {
                table.push(vec![i.to_string(), rational(v), real(to_f64(v))]);
            }
            Ok(table)
        }
        Mode::Sample => {
            let sampler = build_sampler(n);
            let est = sampled_residue_distribution(&sampler, t, samples, seed)?;
            let mut table = Table::new(["residue", "mean", "std_error"]);
            for i in 0..t {
                table.push(vec![
                    i.to_string(),
                    real(est.means[i]),
                    real(est.std_errors[i]),
                ]);
            }
            Ok(table)
        }
    }
}

fn orbit(nu: &Partition, t: usize, max_b: i64) -> Result<Table, Failure> {
    if max_b < 0 {
        return Err(Failure::Usage("max-b must be nonnegative".into()));
    }
    let rows = orbit_table(nu, t, max_b)?;
    let mut columns = vec!["sigma".to_string(), "sigma_nu".to_string()];
    columns.extend((0..=max_b).map(|b| format!("C{b}")));
    let mut table = Table::new(columns);
    for r in rows {
        let mut row = vec![r.word.to_string(), r.member.to_string()];
        row.extend(r.smoothings.iter().map(|c| c.to_string()));
        table.push(row);
    }
    Ok(table)
}

fn sample(n: usize, samples: usize, seed: u64) -> Result<Table, Failure> {
    let sampler = build_sampler(n);
    let mut table = Table::new(["index", "partition"]);
    for (i, lam) in sample_batch(&sampler, seed, samples)
        .into_iter()
        .enumerate()
    {
        table.push(vec![i.to_string(), lam.to_string()]);
    }
    Ok(table)
}

fn params(command: &Command) -> (&'static str, Value) {
    match command {
        Command::Counts { t, max_n, series } => (
            "counts",
            json!({ "t": t, "max_n": max_n, "series": format!("{series:?}") }),
        ),
        Command::Pmf { t, n } => ("pmf", json!({ "t": t, "n": n })),
        Command::Moments { t, n, max_k } => ("moments", json!({ "t": t, "n": n, "max_k": max_k })),
        Command::Figure1 {
            t,
            n,
            x_max,
            points,
        } => (
            "figure1",
            json!({ "t": t, "n": n, "x_max": real(*x_max), "points": points }),
        ),
        Command::Figure2 { t, max_n } => ("figure2", json!({ "t": t, "max_n": max_n })),
        Command::Hooks {
            t,
            n,
            mode,
            samples,
            seed,
        } => (
            "hooks",
            json!({
                "t": t,
                "n": n,
                "mode": format!("{mode:?}").to_lowercase(),
                "samples": samples,
                "seed": seed,
            }),
        ),
        Command::Orbit { nu, t, max_b } => (
            "orbit",
            json!({ "nu": nu.to_string(), "t": t, "max_b": max_b }),
        ),
        Command::Sample { n, samples, seed } => (
            "sample",
            json!({ "n": n, "samples": samples, "seed": seed }),
        ),
        Command::Verify { suite, max_n, seed } => (
            "verify",
            json!({ "suite": suite.to_string(), "max_n": max_n, "seed": seed }),
        ),
    }
}

fn execute(command: &Command) -> Result<Report, Failure> {
    let table = match *command {
        Command::Counts {
            t,
            max_n,
            ref series,
        } => {
            if series.is_empty() {
                return Err(Failure::Usage("series list is empty".into()));
            }
            counts(t, max_n, series)?
        }
        Command::Pmf { t, n } => pmf(t, n)?,
        Command::Moments { t, ref n, max_k } => moments(t, n, max_k)?,
        Command::Figure1 {
            t,
            ref n,
            x_max,
            points,
        } => figure1(t, n, x_max, points)?,
        Command::Figure2 { t, max_n } => figure2(t, max_n)?,
        Command::Hooks {
            t,
            n,
            mode,
            samples,
            seed,
        } => hooks(t, n, mode, samples, seed)?,
        Command::Orbit { ref nu, t, max_b } => orbit(nu, t, max_b)?,
        Command::Sample { n, samples, seed } => sample(n, samples, seed)?,
        Command::Verify { suite, max_n, seed } => {
            return Ok(Report::Verification(run_suite(suite, max_n, seed)))
        }
    };
    Ok(Report::Table(table))
}

fn write_csv(table: &Table, out: &mut dyn Write) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn verification_table(report: &VerificationReport) -> Table {
    let mut table = Table::new(["name", "params", "passed", "detail"]);
    for c in &report.cases {
        table.push(vec![
            c.name.clone(),
            c.params.clone(),
            c.passed.to_string(),
            c.detail.clone(),
        ]);
    }
    table
}

fn to_json(report: &Report, command: &str, params: Value) -> Value {
    let mut doc = Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert("command".into(), json!(command));
    doc.insert("params".into(), params);
    match report {
        Report::Table(t) => {
            doc.insert("columns".into(), json!(t.columns));
            doc.insert("rows".into(), json!(t.rows));
        }
        Report::Verification(r) => {
            let cases: Vec<Value> = r
                .cases
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "params": c.params,
                        "passed": c.passed,
                        "detail": c.detail,
                    })
                })
                .collect();
            doc.insert("suite".into(), json!(r.suite.to_string()));
            doc.insert("passed".into(), json!(r.passed()));
            doc.insert("master_seed".into(), json!(r.master_seed));
            doc.insert(
                "elapsed_ms".into(),
                json!(r.elapsed_ms.to_u64().unwrap_or(u64::MAX)),
            );
            doc.insert("cases".into(), Value::Array(cases));
        }
    }
    Value::Object(doc)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("TCORE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::Usage(format!(
            "TCORE_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    // A pool that is already configured is kept.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    configure_threads()?;
    let report = execute(&cli.command)?;
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(io::BufWriter::new(File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    match cli.format {
        Format::Csv => match &report {
            Report::Table(t) => write_csv(t, &mut out)?,
            Report::Verification(r) => write_csv(&verification_table(r), &mut out)?,
        },
        Format::Json => {
            let (command, params) = params(&cli.command);
            let doc = to_json(&report, command, params);
            serde_json::to_writer_pretty(&mut out, &doc)
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    match report {
        Report::Verification(r) if !r.passed() => Err(Failure::Verification),
        _ => Ok(()),
    }
}

/// Parses `args` (program name first) and runs the command; returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            1
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
