//! Command-line driver behind the `qfi-bell` binary.
//!
//! State specs follow `family:N[:param]`: `ghz:8`, `perp:5`, `css:10`,
//! `dicke:6:3`, `oat:50:0.05`, `tat:40:0.02`, `mix:6:0.4`, `mixed:4`, or
//! `json:<path>` for a serialized state.

pub mod format;
pub mod report;
pub mod spec;
pub mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bell::{default_axis, region_map, RegionCell};
use crate::error::{Error, Result};
use format::sig;
use report::{csv_header, csv_record, evaluate_state, EvalOptions, Report, StateEvaluation};
use spec::{Family, ParamRange, StateSpec};
use verify::{run_verify, CheckResult, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_IO: i32 = 4;
/// Environment variable capping the worker-thread count.
pub const THREADS_ENV: &str = "QFI_BELL_THREADS";

#[derive(Debug, Parser)]
#[command(name = "qfi-bell", version, about = "QFI, spin squeezing and Bell correlations of symmetric qubit states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize one state: QFI, squeezing, witnesses, Bell values.
    Report(ReportArgs),
    /// Witness violation map over the (xi², C) plane.
    RegionMap(RegionArgs),
    /// One row per parameter point of a state family.
    Scan(ScanArgs),
    /// Cross-check against the full 2^N-space oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// State spec `family:N[:param]` or `json:<path>`.
    pub spec: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
    /// Grid resolution of the angle optimizations.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(2..))]
    pub angles: u32,
    /// Settings of the many-setting inequality.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..=64))]
    pub settings: u32,
    /// Also write the state record as JSON.
    #[arg(long)]
    pub dump_state: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    /// Cells per axis; cell centres (i+½)/grid.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u32).range(2..))]
    pub grid: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// One of oat, tat, mix, dicke.
    #[arg(long)]
    pub family: String,
    /// Party counts, repeated or comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<String>,
    /// Inclusive parameter grid `a:b:steps`.
    #[arg(long)]
    pub param_range: String,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(2..))]
    pub angles: u32,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..=64))]
    pub settings: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Seed of the random part of the state corpus.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=8))]
    pub max_n: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
    /// Perturb the library side of one check (negative control).
    #[arg(long, hide = true)]
    pub inject_fault: Option<String>,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) => EXIT_IO,
        Error::Csv(e) if matches!(e.kind(), csv::ErrorKind::Io(_)) => EXIT_IO,
        _ => EXIT_PARSE,
    }
}

/// Caps the global rayon pool at `QFI_BELL_THREADS` when set.
pub fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let threads: usize = v
            .parse()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| Error::Parse(format!("{THREADS_ENV}=`{v}` is not a positive integer")))?;
        // a pool that was already built keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    Ok(())
}

/// Runs one command, writing to `out` unless `--out` redirects it.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Report(a) => cmd_report(&a, out).map(|_| EXIT_OK),
        Command::RegionMap(a) => cmd_region_map(&a, out).map(|_| EXIT_OK),
        Command::Scan(a) => cmd_scan(&a, out).map(|_| EXIT_OK),
        Command::Verify(a) => cmd_verify(&a, out),
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn cmd_report(a: &ReportArgs, out: &mut dyn Write) -> Result<()> {
    let spec: StateSpec = a.spec.parse()?;
    let rho = spec.build()?;
    if let Some(path) = &a.dump_state {
        std::fs::write(path, rho.to_json()?)?;
    }
    let opts = EvalOptions {
        resolution: a.angles as usize,
        settings: a.settings as usize,
    };
    let report = Report {
        spec: spec.to_string(),
        eval: evaluate_state(&rho, opts)?,
    };
    let text = match a.format {
        TextFormat::Text => report.to_text(),
        TextFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
    };
    emit(&text, None, out)
}

pub const REGION_HEADER: [&str; 6] = ["xi2", "C", "w1m_margin", "w2m_margin", "w1m_violated", "w2m_violated"];

pub fn region_csv(cells: &[RegionCell]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(REGION_HEADER)?;
    for c in cells {
        w.write_record([
            sig(c.xi2),
            sig(c.contrast),
            sig(c.w1m_margin),
            sig(c.w2m_margin),
            c.w1m_violated.to_string(),
            c.w2m_violated.to_string(),
        ])?;
    }
    finish_csv(w)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn cmd_region_map(a: &RegionArgs, out: &mut dyn Write) -> Result<()> {
    let axis = default_axis(a.grid as usize);
    let cells = region_map(&axis, &axis)?;
    let text = match a.format {
        TableFormat::Csv => region_csv(&cells)?,
        TableFormat::Json => serde_json::to_string(&cells)? + "\n",
    };
    emit(&text, a.out.as_deref(), out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub n_parties: usize,
    pub parameter: f64,
    pub eval: StateEvaluation,
}

pub fn scan_family(family: Family, ns: &[usize], params: &[f64], opts: EvalOptions) -> Result<Vec<ScanRow>> {
    if !family.takes_param() {
        return Err(Error::Parse(format!(
            "family `{}` has no parameter to scan",
            family.keyword()
        )));
    }
    let points: Vec<(usize, f64)> = ns
        .iter()
        .flat_map(|&n| params.iter().map(move |&p| (n, p)))
        .collect();
    points
        .par_iter()
        .map(|&(n, p)| {
            Ok(ScanRow {
                n_parties: n,
                parameter: p,
                eval: evaluate_state(&family.build(n, p)?, opts)?,
            })
        })
        .collect()
}

pub fn scan_csv(rows: &[ScanRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["n"];
    header.extend(csv_header());
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![r.n_parties.to_string()];
        rec.extend(csv_record(r.parameter, &r.eval));
        w.write_record(&rec)?;
    }
    finish_csv(w)
}

/// JSON array with one flat object per CSV row and the same keys.
pub fn scan_json(rows: &[ScanRow]) -> Result<String> {
    let mut header = vec!["n"];
    header.extend(csv_header());
    let values: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            let e = &r.eval;
            let num = |x: f64| serde_json::json!(x);
            let vals = vec![
                serde_json::json!(r.n_parties),
                num(r.parameter),
                serde_json::json!(e.xi2),
                num(e.contrast),
                num(e.zeta2),
                num(e.qfi),
                num(e.qfi_over_n),
                serde_json::json!(e.n_over_xi2),
                num(e.eq17_phi),
                num(e.eq17_value),
                serde_json::json!(e.eq17_violated),
                num(e.eq3m_spread),
                num(e.eq3m_value),
                serde_json::json!(e.eq3m_violated),
                num(e.w1m_margin),
                serde_json::json!(e.w1m_violated),
                num(e.w2m_margin),
                serde_json::json!(e.w2m_violated),
                serde_json::json!(e.w2m_saturated),
                num(e.mermin_value),
                num(e.mermin_bound),
                serde_json::json!(e.mermin_violated),
                serde_json::json!(e.qfi_gt_n()),
                serde_json::json!(e.qfi_gt_2n()),
            ];
            serde_json::Value::Object(header.iter().map(|k| k.to_string()).zip(vals).collect())
        })
        .collect();
    Ok(serde_json::to_string_pretty(&values)? + "\n")
}

pub fn cmd_scan(a: &ScanArgs, out: &mut dyn Write) -> Result<()> {
    let family: Family = a.family.parse()?;
    let ns = a
        .n
        .iter()
        .map(|t| spec::parse_n(t))
        .collect::<Result<Vec<_>>>()?;
    let range: ParamRange = a.param_range.parse()?;
    let opts = EvalOptions {
        resolution: a.angles as usize,
        settings: a.settings as usize,
    };
    let rows = scan_family(family, &ns, &range.values(), opts)?;
    let text = match a.format {
        TableFormat::Csv => scan_csv(&rows)?,
        TableFormat::Json => scan_json(&rows)?,
    };
    emit(&text, a.out.as_deref(), out)
}

pub fn verify_table(results: &[CheckResult]) -> String {
    let mut s = format!("{:<14}{:>8}{:>16}{:>12}  status\n", "check", "cases", "max_error", "tolerance");
    for r in results {
        s += &format!(
            "{:<14}{:>8}{:>16}{:>12}  {}\n",
            r.name,
            r.cases,
            format!("{:.3e}", r.max_error),
            format!("{:.0e}", r.tolerance),
            if r.passed { "PASS" } else { "FAIL" }
        );
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    s += &if failed == 0 {
        format!("all {} checks passed\n", results.len())
    } else {
        format!("{failed} of {} checks FAILED\n", results.len())
    };
    s
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    if let Some(name) = &a.inject_fault {
        if !verify::CHECK_NAMES.contains(&name.as_str()) {
            return Err(Error::Parse(format!("unknown check `{name}`")));
        }
    }
    let opts = VerifyOptions {
        seed: a.seed,
        max_parties: a.max_n as usize,
        inject_fault: a.inject_fault.clone(),
    };
    let results = run_verify(&opts)?;
    let text = match a.format {
        TextFormat::Text => verify_table(&results),
        TextFormat::Json => serde_json::to_string_pretty(&results)? + "\n",
    };
    emit(&text, None, out)?;
    Ok(if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}
