//! Command-line surface: `eval`, `verify`, `crossover`, `regions`, `table`.
//!
//! T is always given as log T. Exit codes: 0 all PASS, 1 any FAIL,
//! 2 bad input or domain error, 3 only INCONCLUSIVE left.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bounds::{widest_region_log, zero_free_gap_log, TRange, ZeroFreeRegionId};
use crate::density::{
    below_tabulated_range, range_for, sigma_crossover_log, theorem1_general_log, theorem1_simple_log, theorem2_log,
    ingham_type_log, ConstantTable,
};
use crate::error::{Error, Result};
use crate::interval::float::parse_decimal;
use crate::interval::{Interval, Precision, DEFAULT_BITS};
use crate::ledger::{self, CheckResult, ReportRecord, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Significant digits of printed endpoints.
const DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "zdb", version, about = "Certified checks of explicit zero-density estimates for zeta")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// working precision in bits (at least 53)
    #[arg(long = "precision-bits", env = "ZDB_PRECISION_BITS", default_value_t = DEFAULT_BITS, global = true)]
    precision_bits: u32,
    /// box budget per quantified claim
    #[arg(long = "max-subdivisions", default_value_t = 1_000_000, global = true)]
    max_subdivisions: u64,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate every applicable density bound at (sigma, log T)
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long = "logT", allow_hyphen_values = true)]
        log_t: String,
        /// constant of the Ingham-type comparator
        #[arg(long = "C", default_value = "1")]
        c: String,
    },
    /// Run ledger checks
    Verify {
        /// comma-separated ids such as L03,L26a, or "all"
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
    },
    /// Scan the sigma threshold below which the single-term bound is sharper
    Crossover {
        #[arg(long = "C", default_value = "1")]
        c: String,
        /// lo:hi:steps in log T
        #[arg(long)]
        scan: String,
    },
    /// Scan the zero-free gaps of the four regions
    Regions {
        #[arg(long)]
        scan: String,
    },
    /// Printed constants against their recomputed enclosures
    Table,
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub precision_bits: u32,
    pub max_subdivisions: u64,
    pub output_format: Format,
    /// `None` means all checks
    pub checks: Option<Vec<String>>,
}

impl Config {
    pub fn precision(&self) -> Result<Precision> {
        Precision::new(self.precision_bits, self.max_subdivisions)
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let checks = match &cli.cmd {
        Cmd::Verify { checks } if !checks.iter().any(|c| c.eq_ignore_ascii_case("all")) => Some(checks.clone()),
        _ => None,
    };
    let cfg = Config {
        precision_bits: cli.precision_bits,
        max_subdivisions: cli.max_subdivisions,
        output_format: cli.format,
        checks,
    };
    let res = match &cli.cmd {
        Cmd::Eval { sigma, log_t, c } => cmd_eval(&cfg, sigma, log_t, c, out),
        Cmd::Verify { .. } => cmd_verify(&cfg, out),
        Cmd::Crossover { c, scan } => cmd_crossover(&cfg, c, scan, out),
        Cmd::Regions { scan } => cmd_regions(&cfg, scan, out),
        Cmd::Table => cmd_table(&cfg, out),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn io(e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("output: {e}"))
}

fn pair(x: &Interval) -> (String, String) {
    x.to_decimal_pair(DIGITS)
}

fn decimal(s: &str, p: u32) -> Result<Interval> {
    Interval::from_decimal(s, p).map_err(|_| Error::Parse(format!("not a decimal number: {s:?}")))
}

fn to_rational(s: &str) -> Result<BigRational> {
    let (m, e) = parse_decimal(s).ok_or_else(|| Error::Parse(format!("not a decimal number: {s:?}")))?;
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize));
    let m = BigRational::from_integer(m);
    Ok(if e >= 0 { m * scale } else { m / scale })
}

/// `lo:hi:steps` as steps + 1 evenly spaced decimal strings from lo to hi
/// (one point when lo = hi).
/// Each point is printed in shortest form and evaluated at exactly that
/// decimal, so a row's label is its input.
pub fn parse_scan(s: &str) -> Result<Vec<String>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, steps] = parts[..] else {
        return Err(Error::Parse(format!("scan must be lo:hi:steps, got {s:?}")));
    };
    let (lo, hi) = (to_rational(lo)?, to_rational(hi)?);
    let steps: u32 = steps.trim().parse().map_err(|_| Error::Parse(format!("scan steps must be a positive integer, got {steps:?}")))?;
    if steps == 0 || steps > 100_000 {
        return Err(Error::Parse("scan steps must lie in [1, 100000]".into()));
    }
    if hi < lo {
        return Err(Error::Parse("scan range is reversed: hi < lo".into()));
    }
    let steps = if hi == lo { 0 } else { steps };
    let n = BigRational::from_integer(BigInt::from(steps.max(1)));
    Ok((0..=steps)
        .map(|k| {
            let x = &lo + (&hi - &lo) * BigRational::from_integer(BigInt::from(k)) / &n;
            format!("{}", x.to_f64().unwrap_or(f64::NAN))
        })
        .collect())
}

#[derive(Serialize)]
struct EvalReport {
    sigma: String,
    log_t: String,
    range: String,
    range_region: String,
    widest_region: String,
    below_tabulated_range: bool,
    bounds: Vec<BoundRow>,
}

#[derive(Serialize)]
struct BoundRow {
    name: String,
    lo: String,
    hi: String,
}

pub fn cmd_eval(cfg: &Config, sigma: &str, log_t: &str, c: &str, out: &mut dyn Write) -> Result<i32> {
    let p = cfg.precision()?.bits;
    let s = decimal(sigma, p)?;
    let ell = decimal(log_t, p)?;
    let c_iv = decimal(c, p)?;
    if !ell.is_positive() {
        return Err(Error::DomainError("log T must be positive".into()));
    }
    let mut bounds = Vec::new();
    let mut push = |name: &str, v: Interval| {
        let (lo, hi) = pair(&v);
        bounds.push(BoundRow { name: name.into(), lo, hi });
    };
    push("theorem1_general", theorem1_general_log(&s, &ell)?);
    push("theorem1_simple", theorem1_simple_log(&s, &ell)?);
    if ell.certainly_ge(&Interval::dec(ConstantTable::HIGH_LOG_T, p)) {
        push("theorem2", theorem2_log(&s, &ell)?);
    }
    push(&format!("ingham_type(C={c})"), ingham_type_log(&s, &ell, &c_iv)?);
    let range = range_for(&ell)?;
    let widest = match widest_region_log(&ell) {
        Ok(r) => r.name().to_string(),
        Err(_) => "INCONCLUSIVE".into(),
    };
    let rep = EvalReport {
        sigma: sigma.into(),
        log_t: log_t.into(),
        range: range.name().into(),
        range_region: range.region().name().into(),
        widest_region: widest,
        below_tabulated_range: below_tabulated_range(&ell),
        bounds,
    };
    match cfg.output_format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rep).map_err(io)?).map_err(io)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["sigma", "logT", "range", "bound", "lo", "hi"]).map_err(io)?;
            for b in &rep.bounds {
                w.write_record([sigma, log_t, &rep.range, &b.name, &b.lo, &b.hi]).map_err(io)?;
            }
            out.write_all(&w.into_inner().map_err(io)?).map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "sigma = {sigma}, log T = {log_t}").map_err(io)?;
            writeln!(out, "range {} (constants of {}), zero-free region used: {}", rep.range, rep.range, rep.range_region).map_err(io)?;
            writeln!(out, "widest zero-free region here: {}", rep.widest_region).map_err(io)?;
            if rep.below_tabulated_range {
                writeln!(out, "note: T < 3e12, where N(sigma, T) = 0; R1 constants shown").map_err(io)?;
            }
            for b in &rep.bounds {
                writeln!(out, "{:<22} [{}, {}]", b.name, b.lo, b.hi).map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// 0 iff all PASS, 1 if any FAIL, otherwise 3.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    match results.iter().map(|r| r.verdict).max() {
        None | Some(Verdict::Pass) => EXIT_OK,
        Some(Verdict::Fail) => EXIT_FAIL,
        Some(Verdict::Inconclusive) => EXIT_INCONCLUSIVE,
    }
}

/// The report in the requested format. Identical inputs give identical
/// bytes: nothing time- or thread-dependent is printed.
pub fn render_report(results: &[CheckResult], format: Format) -> Result<String> {
    let records: Vec<ReportRecord> = results.iter().map(|r| r.record()).collect();
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&records).map_err(io)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &records {
                w.serialize(r).map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(io)?).map_err(io)
        }
        Format::Text => {
            let mut s = String::new();
            for (r, rec) in results.iter().zip(&records) {
                s.push_str(&format!(
                    "{} {:<12} [{}, {}] {} {}  ({} boxes)  {}\n",
                    rec.id, rec.verdict, rec.computed_lo, rec.computed_hi, rec.direction, rec.claimed, rec.subdivisions, rec.paper_anchor
                ));
                for line in r.detail_lines() {
                    s.push_str(&line);
                    s.push('\n');
                }
                if r.verdict != Verdict::Pass && !rec.notes.is_empty() {
                    s.push_str(&format!("  note: {}\n", rec.notes));
                }
            }
            let count = |v: Verdict| results.iter().filter(|r| r.verdict == v).count();
            s.push_str(&format!(
                "{} checks: {} PASS, {} FAIL, {} INCONCLUSIVE\n",
                results.len(),
                count(Verdict::Pass),
                count(Verdict::Fail),
                count(Verdict::Inconclusive)
            ));
            Ok(s)
        }
    }
}

pub fn cmd_verify(cfg: &Config, out: &mut dyn Write) -> Result<i32> {
    let prec = cfg.precision()?;
    let ids: Vec<String> = match &cfg.checks {
        Some(ids) => ids.iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => ledger::check_ids().iter().map(|s| s.to_string()).collect(),
    };
    if ids.is_empty() {
        return Err(Error::Parse("no checks selected".into()));
    }
    let results = ledger::run_checks(&ids, prec)?;
    out.write_all(render_report(&results, cfg.output_format)?.as_bytes()).map_err(io)?;
    Ok(exit_code(&results))
}

pub fn cmd_crossover(cfg: &Config, c: &str, scan: &str, out: &mut dyn Write) -> Result<i32> {
    let p = cfg.precision()?.bits;
    let c_iv = decimal(c, p)?;
    let points = parse_scan(scan)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["logT", "sigma_star_lo", "sigma_star_hi", "kv_edge_lo", "kv_edge_hi", "relation"]).map_err(io)?;
    for x in &points {
        let ell = decimal(x, p)?;
        let range = range_for(&ell)?;
        let c1p = Interval::dec(ConstantTable::C1_PRIME[range.index()], p);
        let edge = &Interval::from_i64(1, p) - &zero_free_gap_log(ZeroFreeRegionId::KorobovVinogradov, &ell)?;
        let (elo, ehi) = pair(&edge);
        match sigma_crossover_log(&ell, &c_iv, &c1p) {
            Ok(s) => {
                let rel = if s.certainly_gt(&edge) {
                    "ABOVE_KV_EDGE"
                } else if s.certainly_lt(&edge) {
                    "BELOW_KV_EDGE"
                } else {
                    "INCONCLUSIVE"
                };
                let (lo, hi) = pair(&s);
                w.write_record([x.as_str(), &lo, &hi, &elo, &ehi, rel]).map_err(io)?;
            }
            Err(Error::NoCrossover) => {
                w.write_record([x.as_str(), "NO_CROSSOVER", "NO_CROSSOVER", &elo, &ehi, "NO_CROSSOVER"]).map_err(io)?;
            }
            Err(e) => return Err(e),
        }
    }
    out.write_all(&w.into_inner().map_err(io)?).map_err(io)?;
    Ok(EXIT_OK)
}

pub fn cmd_regions(cfg: &Config, scan: &str, out: &mut dyn Write) -> Result<i32> {
    let p = cfg.precision()?.bits;
    let points = parse_scan(scan)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["logT".to_string()];
    for r in ZeroFreeRegionId::ALL {
        header.push(format!("{}_lo", r.name()));
        header.push(format!("{}_hi", r.name()));
    }
    header.push("widest".into());
    w.write_record(&header).map_err(io)?;
    for x in &points {
        let ell = decimal(x, p)?;
        let mut row = vec![x.clone()];
        for r in ZeroFreeRegionId::ALL {
            let (lo, hi) = pair(&zero_free_gap_log(r, &ell)?);
            row.push(lo);
            row.push(hi);
        }
        row.push(match widest_region_log(&ell) {
            Ok(r) => r.name().into(),
            Err(Error::Inconclusive(_)) => "INCONCLUSIVE".into(),
            Err(e) => return Err(e),
        });
        w.write_record(&row).map_err(io)?;
    }
    out.write_all(&w.into_inner().map_err(io)?).map_err(io)?;
    Ok(EXIT_OK)
}

#[derive(Serialize, Clone, Debug)]
pub struct TableRow {
    pub constant: String,
    pub range: String,
    pub printed: String,
    pub computed_lo: String,
    pub computed_hi: String,
    pub status: String,
}

fn row(constant: &str, range: &str, printed: &str, computed: &Interval, p: u32) -> TableRow {
    let claim = Interval::dec(printed, p);
    let status = if computed.certainly_le(&claim.lower()) {
        Verdict::Pass
    } else if computed.certainly_gt(&claim.upper()) {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    };
    let (lo, hi) = pair(computed);
    TableRow {
        constant: constant.into(),
        range: range.into(),
        printed: printed.into(),
        computed_lo: lo,
        computed_hi: hi,
        status: status.name().into(),
    }
}

/// Rows of the constant tables. 𝒞 and C₁₀ come from the ledger boxes;
/// 𝒞₁ = 0.45·𝒞, 𝒞₂ = 0.45·C₁₀, and 𝒞′₁ absorbs the smaller log powers at
/// the bottom of each range using the printed 𝒞₁ and 𝒞₂.
pub fn constant_table(prec: Precision) -> Result<Vec<TableRow>> {
    let p = prec.bits;
    let ids: Vec<String> = ["L18", "L24", "L28"].iter().map(|s| s.to_string()).collect();
    let res = ledger::run_checks(&ids, prec)?;
    let (cal, c10, high) = (&res[0], &res[1], &res[2]);
    let k45 = Interval::dec("0.45", p);
    let cal_printed = ["1.04e24", "1.02e24", "3.22e23", "2.17e22"];
    let mut rows = Vec::new();
    for r in TRange::ALL {
        rows.push(row("cal_C", r.name(), cal_printed[r.index()], &cal.subs[r.index()].computed, p));
    }
    for r in TRange::ALL {
        rows.push(row("C1", r.name(), ConstantTable::C1[r.index()], &(&k45 * &cal.subs[r.index()].computed), p));
    }
    let c2 = &k45 * &c10.subs[0].computed;
    for r in TRange::ALL {
        let ell = r.log_t_lo(p).lower();
        let first = &Interval::dec(ConstantTable::C1[r.index()], p) * &ell.pow_ratio(-417, 1800)?;
        let third = &k45 * &ell.pow_ratio(7 * 45 - 503 * 5, 225)?;
        let v = &(&first + &Interval::dec(ConstantTable::C2, p)) + &third;
        rows.push(row("C1_prime", r.name(), ConstantTable::C1_PRIME[r.index()], &v, p));
    }
    rows.push(row("C2", "all", ConstantTable::C2, &c2, p));
    rows.push(row("third_term", "all", ConstantTable::THIRD, &k45, p));
    rows.push(row("C_high", "logT>=6.7e12", ConstantTable::C_HIGH, &high.subs[0].computed, p));
    Ok(rows)
}

pub fn cmd_table(cfg: &Config, out: &mut dyn Write) -> Result<i32> {
    let rows = constant_table(cfg.precision()?)?;
    match cfg.output_format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).map_err(io)?).map_err(io)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).map_err(io)?;
            }
            out.write_all(&w.into_inner().map_err(io)?).map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "{:<11} {:<13} {:>8}  computed", "constant", "range", "printed").map_err(io)?;
            for r in &rows {
                let flag = if r.status == "FAIL" { "  DISCREPANCY" } else { "" };
                writeln!(out, "{:<11} {:<13} {:>8}  [{}, {}] {}{flag}", r.constant, r.range, r.printed, r.computed_lo, r.computed_hi, r.status)
                    .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}
