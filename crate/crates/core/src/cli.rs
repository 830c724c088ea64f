//! Command-line front end: `table`, `sweep`, `verify`, `figure`.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::geronimus::GeronimusContext;
use crate::measures::MeasureSpec;
use crate::tables::{compute_table, deviations, TableId, PRINTED_TOL};
use crate::verify::{verify, Suite};
use crate::zeros::ZeroAnalysis;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "geronimus", version, about = "Zeros, interlacing checks and electrostatics of Geronimus-perturbed Laguerre and Jacobi polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute a reference zero table (1: Laguerre, 2: Jacobi).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        id: u8,
        /// Compare with the printed values; exit 2 on mismatch.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Zeros of Q_n^{c,N} over a list of masses.
    Sweep(SweepArgs),
    /// Run a property suite over the default grid and print a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Curves behind the reference figures (1: Laguerre, 2: Jacobi).
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        id: u8,
        #[arg(long, default_value_t = FIGURE_POINTS)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Measure {
    Laguerre,
    Jacobi,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_enum)]
    measure: Measure,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    beta: f64,
    #[arg(long, allow_negative_numbers = true)]
    c: f64,
    #[arg(long)]
    n: usize,
    /// Comma-separated masses.
    #[arg(long = "N", value_delimiter = ',', conflicts_with = "logrange", allow_negative_numbers = true)]
    masses: Vec<f64>,
    /// `lo,hi,k`: k logarithmically spaced masses from lo to hi.
    #[arg(long = "N-logrange", value_delimiter = ',', num_args = 1)]
    logrange: Option<Vec<f64>>,
    #[command(flatten)]
    output: Output,
}

/// Failure inside a command, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("I/O error: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Table { id, check, output } => cmd_table(id, check, &output),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Verify { suite, out } => cmd_verify(suite, out.as_ref()),
        Command::Figure { id, points, out } => cmd_figure(id, points, out.as_ref()),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            EXIT_CHECK
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// `v` with nine significant digits.
pub fn sig9(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..=12).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.8e}")
    }
}

fn csv<'a>(header: &[String], rows: impl IntoIterator<Item = &'a Vec<f64>>) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&v| sig9(v)).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

fn cmd_table(id: u8, check: bool, output: &Output) -> Result<(), Failure> {
    let id = TableId::from_number(id)?;
    let rows = compute_table(id)?;
    let text = match output.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        Format::Csv => {
            let n = id.degree();
            let header: Vec<String> = std::iter::once("N".to_string())
                .chain((1..=n).map(|k| format!("y{k}")))
                .chain(std::iter::once("z".to_string()))
                .collect();
            let values: Vec<Vec<f64>> = rows
                .iter()
                .map(|r| {
                    std::iter::once(r.mass)
                        .chain(r.zeros.iter().copied())
                        .chain(std::iter::once(r.z))
                        .collect()
                })
                .collect();
            csv(&header, &values)
        }
    };
    emit(output.out.as_ref(), &text)?;
    if check {
        let printed = id.printed();
        let dev = deviations(&rows, &printed);
        let bad: Vec<String> = dev
            .iter()
            .zip(&printed)
            .filter(|(d, _)| !(**d < PRINTED_TOL))
            .map(|(d, p)| format!("N={} deviates by {d:.2e}", p.mass))
            .collect();
        if !bad.is_empty() {
            return Err(Failure::Check(bad.join("; ")));
        }
        eprintln!("table {}: all {} rows within {PRINTED_TOL:e}", id_number(id), rows.len());
    }
    Ok(())
}

fn id_number(id: TableId) -> u8 {
    match id {
        TableId::Laguerre => 1,
        TableId::Jacobi => 2,
    }
}

/// `k` masses from `lo` to `hi`, equally spaced in `ln N`.
pub fn logrange(lo: f64, hi: f64, k: usize) -> Vec<f64> {
    match k {
        0 => vec![],
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..k)
                .map(|i| (a + (b - a) * i as f64 / (k - 1) as f64).exp())
                .collect()
        }
    }
}

#[derive(Serialize)]
struct SweepJson<'a> {
    schema: &'static str,
    measure: Measure,
    alpha: f64,
    beta: f64,
    c: f64,
    n: usize,
    #[serde(rename = "N")]
    masses: &'a [f64],
    zeros: &'a [Vec<f64>],
    limits: &'a [f64],
    rate_constants: &'a [f64],
    products: &'a [Vec<f64>],
    monotone: &'static str,
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let mut masses = match &args.logrange {
        Some(v) => {
            if v.len() != 3 || !(v[0] > 0.0 && v[1] >= v[0]) || v[2] < 1.0 || v[2].fract() != 0.0 {
                return Err(Failure::Usage(
                    "--N-logrange expects lo,hi,k with 0 < lo <= hi and integer k >= 1".into(),
                ));
            }
            logrange(v[0], v[1], v[2] as usize)
        }
        None => args.masses.clone(),
    };
    if masses.is_empty() {
        return Err(Failure::Usage("empty mass list: give --N or --N-logrange".into()));
    }
    if let Some(&m) = masses.iter().find(|m| !(**m >= 0.0) || !m.is_finite()) {
        return Err(Error::ParameterDomain {
            name: "N",
            value: m,
            bound: ">= 0",
        }
        .into());
    }
    masses.sort_by(f64::total_cmp);
    masses.dedup();
    let spec = match args.measure {
        Measure::Laguerre => MeasureSpec::laguerre(args.alpha)?,
        Measure::Jacobi => MeasureSpec::jacobi(args.alpha, args.beta)?,
    };
    if args.n == 0 {
        return Err(Error::ParameterDomain {
            name: "n",
            value: 0.0,
            bound: ">= 1",
        }
        .into());
    }
    let ctx = GeronimusContext::new(spec, args.c, 0.0, args.n)?;
    let traj = ZeroAnalysis::new(&ctx, args.n)?.sweep(&masses)?;
    let verdict = if traj.is_monotone() { "pass" } else { "fail" };
    let text = match args.output.format {
        Format::Json => {
            let body = SweepJson {
                schema: crate::verify::SCHEMA,
                measure: args.measure,
                alpha: args.alpha,
                beta: if args.measure == Measure::Jacobi { args.beta } else { 0.0 },
                c: args.c,
                n: args.n,
                masses: &traj.masses,
                zeros: &traj.zeros,
                limits: &traj.limits,
                rate_constants: &traj.rate_constants,
                products: &traj.products,
                monotone: verdict,
            };
            serde_json::to_string_pretty(&body).expect("serializable") + "\n"
        }
        Format::Csv => {
            let n = args.n;
            let header: Vec<String> = std::iter::once("N".to_string())
                .chain((1..=n).map(|k| format!("y{k}")))
                .chain((1..=n).map(|k| format!("limit{k}")))
                .chain((1..=n).map(|k| format!("product{k}")))
                .collect();
            let rows: Vec<Vec<f64>> = (0..traj.masses.len())
                .map(|i| {
                    std::iter::once(traj.masses[i])
                        .chain(traj.zeros[i].iter().copied())
                        .chain(traj.limits.iter().copied())
                        .chain(traj.products[i].iter().copied())
                        .collect()
                })
                .collect();
            csv(&header, &rows)
        }
    };
    emit(args.output.out.as_ref(), &text)?;
    eprintln!("monotone: {verdict}");
    Ok(())
}

fn cmd_verify(suite: Suite, out: Option<&PathBuf>) -> Result<(), Failure> {
    let report = verify(suite);
    let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
    emit(out, &text)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} of {} cases failed in suite {}",
            report.failures.len(),
            report.cases,
            report.suite
        )))
    }
}

pub const FIGURE_POINTS: usize = 600;

/// Sampling window of each figure.
pub fn figure_window(id: TableId) -> (f64, f64) {
    match id {
        TableId::Laguerre => (-1.5, 7.0),
        TableId::Jacobi => (-1.6, 1.0),
    }
}

/// Columns `x`, `P` (classical monic polynomial) and `Q_N=…` for the masses
/// of the matching table.
pub fn figure_data(id: TableId, points: usize) -> crate::error::Result<(Vec<String>, Vec<Vec<f64>>)> {
    let n = id.degree();
    let masses = id.masses();
    let ctxs = masses
        .iter()
        .map(|&m| id.context(m))
        .collect::<crate::error::Result<Vec<_>>>()?;
    let (lo, hi) = figure_window(id);
    let header = ["x".to_string(), "P".to_string()]
        .into_iter()
        .chain(masses.iter().map(|m| format!("Q_N={m}")))
        .collect();
    let rows = (0..points)
        .map(|i| {
            let x = if points == 1 {
                lo
            } else {
                lo + (hi - lo) * i as f64 / (points - 1) as f64
            };
            let mut row = vec![x, ctxs[0].recurrence().eval(n, x).value];
            row.extend(ctxs.iter().map(|ctx| ctx.eval_qcn(n, x).value));
            row
        })
        .collect();
    Ok((header, rows))
}

fn cmd_figure(id: u8, points: usize, out: Option<&PathBuf>) -> Result<(), Failure> {
    if points < 2 {
        return Err(Failure::Usage("--points must be at least 2".into()));
    }
    let id = TableId::from_number(id)?;
    let (header, rows) = figure_data(id, points)?;
    emit(out, &csv(&header, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(sig9(0.296771234567), "0.296771235");
        assert_eq!(sig9(-1.5), "-1.50000000");
        assert_eq!(sig9(123456.789), "123456.789");
        assert_eq!(sig9(1e-9), "1.00000000e-9");
        assert_eq!(sig9(0.0), "0");
    }

    #[test]
    fn logrange_endpoints() {
        let v = logrange(1e-3, 1e6, 19);
        assert_eq!(v.len(), 19);
        assert!((v[0] - 1e-3).abs() < 1e-15);
        assert!((v[18] / 1e6 - 1.0).abs() < 1e-12);
        assert!((v[2] / 1e-2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn figure_curves_have_n_sign_changes() {
        for id in [TableId::Laguerre, TableId::Jacobi] {
            let (header, rows) = figure_data(id, FIGURE_POINTS).unwrap();
            assert_eq!(header.len(), 2 + id.masses().len());
            for col in 1..header.len() {
                let changes = rows
                    .windows(2)
                    .filter(|w| w[0][col].signum() != w[1][col].signum())
                    .count();
                assert_eq!(changes, id.degree(), "{id:?} column {}", header[col]);
            }
        }
    }
}
