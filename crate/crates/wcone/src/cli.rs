//! Command-line front end: configuration ingestion, subcommands, and
//! deterministic text/JSON/CSV emission.
//!
//! Exit codes: 0 on success, 2 on input errors, 3 on internal identity
//! failures (the cross-checked closed forms disagreeing, which should never
//! happen) and on verification-suite failures.

use crate::analysis::{
    full_report, scan_l2, stability_verdict, AnalysisError, AnalysisReport, Classification,
    CriticalSource, ReportOptions, ScanRow, StabilityVerdict, VerdictKind,
};
use crate::extremal::ExtremalError;
use crate::functionals::{FunctionalBundle, FunctionalError};
use crate::join::{JoinError, JoinParams, RayId};
use crate::ratio::{decimal_sig, parse_rational, to_pq};
use crate::verify;
use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        CliError { code: 3, message: message.into() }
    }
}

impl From<JoinError> for CliError {
    fn from(e: JoinError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<FunctionalError> for CliError {
    fn from(e: FunctionalError) -> Self {
        CliError::internal(e.to_string())
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::NonPositiveB | AnalysisError::Join(_) => CliError::input(e.to_string()),
            AnalysisError::Extremal(x) => x.into(),
            _ => CliError::internal(e.to_string()),
        }
    }
}

impl From<ExtremalError> for CliError {
    fn from(e: ExtremalError) -> Self {
        match e {
            ExtremalError::RegularRay
            | ExtremalError::BadScanRange(_)
            | ExtremalError::NoTransition(_)
            | ExtremalError::Join(_) => CliError::input(e.to_string()),
            _ => CliError::internal(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "wcone",
    version,
    about = "Exact analysis of the Einstein-Hilbert functional on the w-cone of Sasaki joins"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full per-manifold report: critical rays, csc rays, verdicts
    Analyze(AnalyzeArgs),
    /// Sweep l2 over a range, counting csc rays per manifold
    Scan(ScanArgs),
    /// Admissibility window and per-ray extremal solutions
    Extremal(ExtremalArgs),
    /// Sample b, H, H', f_CSC, S_num, V_num over a rational grid (CSV)
    Sample(SampleArgs),
    /// Run the built-in verification suite (golden examples and identities)
    #[command(name = "verify-paper")]
    VerifyPaper,
}

/// Join parameters, acceptable on the command line or from `--config`.
#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    /// Complex dimension of the base manifold
    #[arg(long = "dN")]
    pub d_n: Option<u32>,
    /// Normalized base scalar curvature, as "p/q", integer, or decimal
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    /// First join weight
    #[arg(long)]
    pub l1: Option<u64>,
    /// Second join weight (must be coprime to l1 and to w1*w2)
    #[arg(long)]
    pub l2: Option<u64>,
    /// Larger sphere weight
    #[arg(long)]
    pub w1: Option<u64>,
    /// Smaller sphere weight
    #[arg(long)]
    pub w2: Option<u64>,
    /// Flat key-value JSON config file; command-line flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_parser = ["text", "json", "csv"])]
    pub format: Option<String>,
    /// Shorthand for --format json
    #[arg(long)]
    pub json: bool,
    /// Write to this path instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Root-refinement tolerance, as "p/q" or decimal (default 1/10^12)
    #[arg(long)]
    pub tolerance: Option<String>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Ray to judge, as "v1,v2" (repeatable)
    #[arg(long = "ray")]
    pub rays: Vec<String>,
    /// Also scan for the extremal admissibility window in (blo, bhi)
    #[arg(long)]
    pub blo: Option<String>,
    #[arg(long)]
    pub bhi: Option<String>,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// First l2 of the sweep
    #[arg(long = "l2-from")]
    pub l2_from: Option<u64>,
    /// Last l2 of the sweep (inclusive)
    #[arg(long = "l2-to")]
    pub l2_to: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ExtremalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Ray to solve, as "v1,v2" (repeatable)
    #[arg(long = "ray")]
    pub rays: Vec<String>,
    /// Lower end of the admissibility window scan
    #[arg(long)]
    pub blo: Option<String>,
    /// Upper end of the admissibility window scan
    #[arg(long)]
    pub bhi: Option<String>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Smallest sampled b (> 0), as "p/q" or decimal
    #[arg(long)]
    pub bmin: Option<String>,
    /// Largest sampled b
    #[arg(long)]
    pub bmax: Option<String>,
    /// Number of grid points (>= 2)
    #[arg(long)]
    pub count: Option<usize>,
}

/// Flat key-value config file; unknown keys are rejected.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(rename = "dN")]
    d_n: Option<u32>,
    #[serde(rename = "A")]
    a: Option<RatOrInt>,
    l1: Option<u64>,
    l2: Option<u64>,
    w1: Option<u64>,
    w2: Option<u64>,
    rays: Option<Vec<String>>,
    tolerance: Option<RatOrInt>,
    format: Option<String>,
    output: Option<String>,
    bmin: Option<RatOrInt>,
    bmax: Option<RatOrInt>,
    count: Option<usize>,
    #[serde(rename = "l2-from")]
    l2_from: Option<u64>,
    #[serde(rename = "l2-to")]
    l2_to: Option<u64>,
    blo: Option<RatOrInt>,
    bhi: Option<RatOrInt>,
}

/// A rational in a config file: a JSON string ("p/q", decimal) or an integer.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RatOrInt {
    Int(i64),
    Str(String),
}

impl RatOrInt {
    fn to_rational(&self, field: &str) -> Result<BigRational, CliError> {
        match self {
            RatOrInt::Int(n) => Ok(crate::ratio::rat_int(*n)),
            RatOrInt::Str(s) => parse_rational(s)
                .map_err(|e| CliError::input(format!("config field {field}: {e}"))),
        }
    }
}

fn load_file_config(path: &Option<PathBuf>) -> Result<FileConfig, CliError> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| CliError::input(format!("config {}: {e}", path.display())))
}

fn parse_rational_flag(raw: &Option<String>, field: &str) -> Result<Option<BigRational>, CliError> {
    match raw {
        None => Ok(None),
        Some(s) => parse_rational(s)
            .map(Some)
            .map_err(|e| CliError::input(format!("{field}: {e}"))),
    }
}

fn parse_ray(s: &str) -> Result<RayId, CliError> {
    let (v1, v2) = s
        .split_once(',')
        .ok_or_else(|| CliError::input(format!("ray '{s}': expected \"v1,v2\"")))?;
    let v1: u64 = v1
        .trim()
        .parse()
        .map_err(|_| CliError::input(format!("ray '{s}': v1 is not a positive integer")))?;
    let v2: u64 = v2
        .trim()
        .parse()
        .map_err(|_| CliError::input(format!("ray '{s}': v2 is not a positive integer")))?;
    RayId::new(v1, v2).map_err(|e| CliError::input(format!("ray '{s}': {e}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

fn resolve_params(
    args: &ParamArgs,
    file: &FileConfig,
    l2_optional: bool,
) -> Result<JoinParams, CliError> {
    let d_n = args
        .d_n
        .or(file.d_n)
        .ok_or_else(|| CliError::input("missing parameter dN"))?;
    let a = match parse_rational_flag(&args.a, "A")? {
        Some(a) => a,
        None => file
            .a
            .as_ref()
            .map(|v| v.to_rational("A"))
            .transpose()?
            .ok_or_else(|| CliError::input("missing parameter A"))?,
    };
    let l1 = args.l1.or(file.l1).ok_or_else(|| CliError::input("missing parameter l1"))?;
    let l2 = match args.l2.or(file.l2) {
        Some(l2) => l2,
        None if l2_optional => 1,
        None => return Err(CliError::input("missing parameter l2")),
    };
    let w1 = args.w1.or(file.w1).ok_or_else(|| CliError::input("missing parameter w1"))?;
    let w2 = args.w2.or(file.w2).ok_or_else(|| CliError::input("missing parameter w2"))?;
    JoinParams::new(d_n, a, l1, l2, w1, w2).map_err(CliError::from)
}

fn resolve_output(
    args: &OutputArgs,
    file: &FileConfig,
    default_format: OutputFormat,
) -> Result<(OutputFormat, Option<PathBuf>, BigRational), CliError> {
    let format = if args.json {
        OutputFormat::Json
    } else {
        let name = args.format.clone().or_else(|| file.format.clone());
        match name.as_deref() {
            None => default_format,
            Some("text") => OutputFormat::Text,
            Some("json") => OutputFormat::Json,
            Some("csv") => OutputFormat::Csv,
            Some(other) => {
                return Err(CliError::input(format!(
                    "format '{other}' is not one of text, json, csv"
                )))
            }
        }
    };
    let output = args
        .output
        .clone()
        .or_else(|| file.output.as_ref().map(PathBuf::from));
    let tolerance = match parse_rational_flag(&args.tolerance, "tolerance")? {
        Some(t) => t,
        None => match &file.tolerance {
            Some(v) => v.to_rational("tolerance")?,
            None => crate::analysis::default_tolerance(),
        },
    };
    if !tolerance.is_positive() {
        return Err(CliError::input("tolerance: must be positive"));
    }
    Ok((format, output, tolerance))
}

fn resolve_rays(flag_rays: &[String], file: &FileConfig) -> Result<Vec<RayId>, CliError> {
    let sources: Vec<String> = if !flag_rays.is_empty() {
        flag_rays.to_vec()
    } else {
        file.rays.clone().unwrap_or_default()
    };
    sources.iter().map(|s| parse_ray(s)).collect()
}

fn resolve_window(
    blo: &Option<String>,
    bhi: &Option<String>,
    file: &FileConfig,
) -> Result<Option<(BigRational, BigRational)>, CliError> {
    let lo = match parse_rational_flag(blo, "blo")? {
        Some(v) => Some(v),
        None => file.blo.as_ref().map(|v| v.to_rational("blo")).transpose()?,
    };
    let hi = match parse_rational_flag(bhi, "bhi")? {
        Some(v) => Some(v),
        None => file.bhi.as_ref().map(|v| v.to_rational("bhi")).transpose()?,
    };
    match (lo, hi) {
        (Some(lo), Some(hi)) => Ok(Some((lo, hi))),
        (None, None) => Ok(None),
        _ => Err(CliError::input("blo and bhi must be given together")),
    }
}

/// The rendered result of a run.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub destination: Option<PathBuf>,
    pub code: u8,
}

/// Execute a parsed command, producing the bytes to emit.
pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Scan(args) => run_scan(args),
        Command::Extremal(args) => run_extremal(args),
        Command::Sample(args) => run_sample(args),
        Command::VerifyPaper => Ok(run_verify()),
    }
}

fn run_analyze(args: AnalyzeArgs) -> Result<Outcome, CliError> {
    let file = load_file_config(&args.params.config)?;
    let params = resolve_params(&args.params, &file, false)?;
    let (format, output, tolerance) = resolve_output(&args.output, &file, OutputFormat::Text)?;
    let rays = resolve_rays(&args.rays, &file)?;
    let window = resolve_window(&args.blo, &args.bhi, &file)?;
    let options = ReportOptions {
        tolerance,
        extremal_window: window,
        extremal_rays: false,
    };
    let report = full_report(&params, &rays, &options)?;
    let text = match format {
        OutputFormat::Json => to_json(&report)?,
        OutputFormat::Text => render_report_text(&report),
        OutputFormat::Csv => render_report_csv(&report),
    };
    Ok(Outcome { text, destination: output, code: 0 })
}

fn run_scan(args: ScanArgs) -> Result<Outcome, CliError> {
    let file = load_file_config(&args.params.config)?;
    let params = resolve_params(&args.params, &file, true)?;
    let (format, output, tolerance) = resolve_output(&args.output, &file, OutputFormat::Text)?;
    let from = args
        .l2_from
        .or(file.l2_from)
        .ok_or_else(|| CliError::input("missing parameter l2-from"))?;
    let to = args
        .l2_to
        .or(file.l2_to)
        .ok_or_else(|| CliError::input("missing parameter l2-to"))?;
    if from > to {
        return Err(CliError::input("l2-from exceeds l2-to"));
    }
    let rows = scan_l2(&params, from, to, &tolerance)?;
    let text = match format {
        OutputFormat::Json => to_json(&rows)?,
        OutputFormat::Csv => render_scan_csv(&rows),
        OutputFormat::Text => render_scan_text(&params, from, to, &rows),
    };
    Ok(Outcome { text, destination: output, code: 0 })
}

fn run_extremal(args: ExtremalArgs) -> Result<Outcome, CliError> {
    let file = load_file_config(&args.params.config)?;
    let params = resolve_params(&args.params, &file, false)?;
    let (format, output, tolerance) = resolve_output(&args.output, &file, OutputFormat::Text)?;
    let rays = resolve_rays(&args.rays, &file)?;
    let window = resolve_window(&args.blo, &args.bhi, &file)?;
    if window.is_none() && rays.is_empty() {
        return Err(CliError::input(
            "extremal needs --ray and/or a window scan range (--blo, --bhi)",
        ));
    }
    let options = ReportOptions {
        tolerance,
        extremal_window: window,
        extremal_rays: true,
    };
    let report = full_report(&params, &rays, &options)?;
    let ext = report.extremal.as_ref().expect("extremal section requested");
    let text = match format {
        OutputFormat::Json => to_json(ext)?,
        OutputFormat::Csv => render_extremal_csv(ext),
        OutputFormat::Text => render_extremal_text(&report),
    };
    Ok(Outcome { text, destination: output, code: 0 })
}

#[derive(Serialize)]
struct SampleRow {
    b: String,
    #[serde(rename = "H")]
    h: String,
    #[serde(rename = "dH")]
    dh: String,
    f_csc: String,
    #[serde(rename = "S_num")]
    s_num: String,
    #[serde(rename = "V_num")]
    v_num: String,
    verdict: String,
}

fn run_sample(args: SampleArgs) -> Result<Outcome, CliError> {
    let file = load_file_config(&args.params.config)?;
    let params = resolve_params(&args.params, &file, false)?;
    let (format, output, _tolerance) = resolve_output(&args.output, &file, OutputFormat::Csv)?;
    let b_min = match parse_rational_flag(&args.bmin, "bmin")? {
        Some(v) => Some(v),
        None => file.bmin.as_ref().map(|v| v.to_rational("bmin")).transpose()?,
    }
    .ok_or_else(|| CliError::input("missing parameter bmin"))?;
    let b_max = match parse_rational_flag(&args.bmax, "bmax")? {
        Some(v) => Some(v),
        None => file.bmax.as_ref().map(|v| v.to_rational("bmax")).transpose()?,
    }
    .ok_or_else(|| CliError::input("missing parameter bmax"))?;
    let count = args
        .count
        .or(file.count)
        .ok_or_else(|| CliError::input("missing parameter count"))?;
    if !b_min.is_positive() {
        return Err(CliError::input("bmin: must be positive"));
    }
    if b_min >= b_max {
        return Err(CliError::input("bmin must be below bmax"));
    }
    if count < 2 {
        return Err(CliError::input("count: need at least 2 grid points"));
    }
    let bundle = FunctionalBundle::new(params)?;
    let step = (&b_max - &b_min) / crate::ratio::rat_int(count as i64 - 1);
    let mut rows = Vec::with_capacity(count);
    for i in 0..count {
        let b = &b_min + &step * crate::ratio::rat_int(i as i64);
        let verdict = stability_verdict(&bundle, &b)?;
        rows.push(SampleRow {
            b: decimal_sig(&b, 17),
            h: decimal_sig(&bundle.h().eval(&b).expect("no pole for b > 0"), 17),
            dh: decimal_sig(&bundle.dh().eval(&b).expect("no pole for b > 0"), 17),
            f_csc: decimal_sig(&bundle.f_csc().eval(&b), 17),
            s_num: decimal_sig(&bundle.s_num().eval(&b), 17),
            v_num: decimal_sig(&bundle.v_num().eval(&b), 17),
            verdict: verdict_label(&verdict),
        });
    }
    let text = match format {
        OutputFormat::Json => to_json(&rows)?,
        _ => {
            let mut out = String::from("b,H,dH,f_csc,S_num,V_num,verdict\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    csv_field(&r.b),
                    csv_field(&r.h),
                    csv_field(&r.dh),
                    csv_field(&r.f_csc),
                    csv_field(&r.s_num),
                    csv_field(&r.v_num),
                    csv_field(&r.verdict),
                );
            }
            out
        }
    };
    Ok(Outcome { text, destination: output, code: 0 })
}

fn run_verify() -> Outcome {
    let (text, code) = render_verify(&verify::run_all());
    Outcome { text, destination: None, code }
}

fn render_verify(suite: &verify::SuiteReport) -> (String, u8) {
    let mut out = String::new();
    for check in &suite.checks {
        match &check.result {
            Ok(()) => {
                let _ = writeln!(out, "PASS  {}", check.name);
            }
            Err(why) => {
                let _ = writeln!(out, "FAIL  {}: {why}", check.name);
            }
        }
    }
    for note in &suite.notes {
        let _ = writeln!(out, "{note}");
    }
    let code = if suite.all_passed() { 0 } else { 3 };
    let _ = writeln!(
        out,
        "{}",
        if code == 0 { "all checks passed" } else { "verification FAILED" }
    );
    (out, code)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::internal(format!("serialization failed: {e}")))
}

/// RFC-style CSV quoting: quote when a field holds a comma, quote, or newline.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn verdict_label(v: &StabilityVerdict) -> String {
    match v.verdict {
        VerdictKind::KSemistableCscS => "K-semistable-cscS".to_string(),
        VerdictKind::KUnstable => "K-unstable".to_string(),
    }
}

fn source_label(s: CriticalSource) -> &'static str {
    match s {
        CriticalSource::FutakiZero => "futaki-zero",
        CriticalSource::NullScalar => "null-scalar",
        CriticalSource::Both => "both",
    }
}

fn class_label(c: Classification) -> &'static str {
    match c {
        Classification::LocalMin => "local-min",
        Classification::LocalMax => "local-max",
        Classification::Inflection => "inflection",
        Classification::Degenerate => "degenerate",
    }
}

fn render_report_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let p = &report.params;
    let _ = writeln!(
        out,
        "w-cone analysis: d_N={}, A={}, l1={}, l2={}, w=({},{})",
        p.d_n,
        to_pq(&p.a),
        p.l1,
        p.l2,
        p.w1,
        p.w2
    );
    let _ = writeln!(out, "closed forms (coefficients ascending, \"p/q\"):");
    let _ = writeln!(out, "  S_num  = {:?}", report.polynomials.s_num);
    let _ = writeln!(out, "  V_num  = {:?}", report.polynomials.v_num);
    let _ = writeln!(out, "  f_CSC  = {:?}", report.polynomials.f_csc);
    let _ = writeln!(
        out,
        "boundary: pole order {} at b=0 (lead {}), growth degree {} at infinity (lead {})",
        report.boundary.pole_order_at_zero,
        to_pq(&report.boundary.lead_at_zero),
        report.boundary.growth_degree_at_infinity,
        to_pq(&report.boundary.lead_at_infinity),
    );
    let _ = writeln!(out, "critical points ({}):", report.critical_points.len());
    for (i, c) in report.critical_points.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {}. b ~ {} in [{}, {}], multiplicity {}, source {}, {}",
            i + 1,
            c.approx_decimal,
            to_pq(&c.interval.lo),
            to_pq(&c.interval.hi),
            c.multiplicity_in_dh,
            source_label(c.source),
            class_label(c.classification),
        );
    }
    let _ = writeln!(out, "csc rays ({}):", report.csc_rays.len());
    for r in &report.csc_rays {
        let _ = writeln!(
            out,
            "  b ~ {} in [{}, {}] (multiplicity {}){}",
            r.approx_decimal,
            to_pq(&r.interval.lo),
            to_pq(&r.interval.hi),
            r.interval.multiplicity,
            r.note.as_deref().map(|n| format!(" — {n}")).unwrap_or_default(),
        );
    }
    let _ = writeln!(out, "null-scalar rays ({}):", report.null_scalar_rays.len());
    for r in &report.null_scalar_rays {
        let _ = writeln!(
            out,
            "  b ~ {} in [{}, {}] (multiplicity {})",
            r.approx_decimal,
            to_pq(&r.interval.lo),
            to_pq(&r.interval.hi),
            r.interval.multiplicity,
        );
    }
    if !report.verdicts.is_empty() {
        let _ = writeln!(out, "verdicts:");
        for v in &report.verdicts {
            let reason = match v.reason {
                Some(crate::analysis::UnstableReason::NonCritical) => " (non-critical)",
                Some(crate::analysis::UnstableReason::CriticalNullScalarNonzeroFutaki) => {
                    " (critical-null-scalar-nonzero-Futaki)"
                }
                None => " (up to isotopy)",
            };
            let near = if v.near_csc { " [near-csc]" } else { "" };
            let _ = writeln!(out, "  b = {} -> {}{}{}", to_pq(&v.b), verdict_label(v), reason, near);
        }
    }
    if let Some(ext) = &report.extremal {
        let _ = writeln!(out, "extremal:");
        if let Some(w) = &ext.window {
            let _ = writeln!(
                out,
                "  admissibility window: b1 ~ {} ({}), b2 ~ {} ({}), localized to width {}",
                w.b1_decimal,
                to_pq(&w.b1),
                w.b2_decimal,
                to_pq(&w.b2),
                to_pq(&w.tolerance),
            );
        }
        if let Some(note) = &ext.window_note {
            let _ = writeln!(out, "  window: {note}");
        }
        for r in &ext.rays {
            let _ = writeln!(
                out,
                "  ray ({},{}): alpha = {}, beta = {}, admissible = {}",
                r.v1,
                r.v2,
                to_pq(&r.alpha),
                to_pq(&r.beta),
                r.admissible,
            );
        }
    }
    let _ = writeln!(
        out,
        "meta: {} {} (tolerance {})",
        report.meta.tool,
        report.meta.version,
        to_pq(&report.meta.tolerance)
    );
    out
}

fn render_report_csv(report: &AnalysisReport) -> String {
    let mut out = String::from("kind,b_lo,b_hi,approx,multiplicity,source,classification\n");
    for c in &report.critical_points {
        let _ = writeln!(
            out,
            "critical,{},{},{},{},{},{}",
            to_pq(&c.interval.lo),
            to_pq(&c.interval.hi),
            c.approx_decimal,
            c.multiplicity_in_dh,
            source_label(c.source),
            class_label(c.classification),
        );
    }
    for r in &report.csc_rays {
        let _ = writeln!(
            out,
            "csc,{},{},{},{},,",
            to_pq(&r.interval.lo),
            to_pq(&r.interval.hi),
            r.approx_decimal,
            r.interval.multiplicity,
        );
    }
    for r in &report.null_scalar_rays {
        let _ = writeln!(
            out,
            "null-scalar,{},{},{},{},,",
            to_pq(&r.interval.lo),
            to_pq(&r.interval.hi),
            r.approx_decimal,
            r.interval.multiplicity,
        );
    }
    out
}

fn render_scan_text(params: &JoinParams, from: u64, to: u64, rows: &[ScanRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "l2 sweep {}..{} for d_N={}, A={}, l1={}, w=({},{}) — {} smooth rows",
        from,
        to,
        params.d_n(),
        to_pq(params.a()),
        params.l1(),
        params.w1(),
        params.w2(),
        rows.len()
    );
    let _ = writeln!(out, "l2,csc_count,critical_count,classifications");
    for r in rows {
        let classes: Vec<&str> = r.classifications.iter().map(|c| class_label(*c)).collect();
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.l2,
            r.csc_count,
            r.critical_count,
            classes.join("|")
        );
    }
    out
}

fn render_scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("l2,csc_count,critical_count,classifications\n");
    for r in rows {
        let classes: Vec<&str> = r.classifications.iter().map(|c| class_label(*c)).collect();
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.l2,
            r.csc_count,
            r.critical_count,
            csv_field(&classes.join("|"))
        );
    }
    out
}

fn render_extremal_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let p = &report.params;
    let _ = writeln!(
        out,
        "extremal analysis: d_N={}, A={}, l1={}, l2={}, w=({},{})",
        p.d_n,
        to_pq(&p.a),
        p.l1,
        p.l2,
        p.w1,
        p.w2
    );
    let ext = report.extremal.as_ref().expect("extremal section present");
    if let Some(w) = &ext.window {
        let _ = writeln!(
            out,
            "admissibility window: b1 ~ {} ({}), b2 ~ {} ({}), localized to width {}",
            w.b1_decimal,
            to_pq(&w.b1),
            w.b2_decimal,
            to_pq(&w.b2),
            to_pq(&w.tolerance),
        );
    }
    if let Some(note) = &ext.window_note {
        let _ = writeln!(out, "window: {note}");
    }
    for r in &ext.rays {
        let _ = writeln!(
            out,
            "ray ({},{}): b = {}, alpha = {}, beta = {}, admissible = {}",
            r.v1,
            r.v2,
            to_pq(&r.b),
            to_pq(&r.alpha),
            to_pq(&r.beta),
            r.admissible,
        );
    }
    out
}

fn render_extremal_csv(ext: &crate::analysis::ExtremalReport) -> String {
    let mut out = String::from("v1,v2,b,alpha,beta,admissible\n");
    for r in &ext.rays {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.v1,
            r.v2,
            to_pq(&r.b),
            to_pq(&r.alpha),
            to_pq(&r.beta),
            r.admissible
        );
    }
    out
}
