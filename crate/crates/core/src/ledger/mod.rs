//! The constant ledger: every numeric claim of the zero-density proof,
//! re-derived over its parameter box.
//!
//! A check is a list of sub-claims. Quantified ones are settled by
//! [`certify`] over boxes in (log T, 1 − σ, ...); the rest are single
//! enclosures or exact rational identities. A check's verdict is the worst
//! of its sub-verdicts.

pub mod bnb;
pub mod checks;
pub mod model;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use bnb::{certify, extremum, Direction, Outcome, ParamBox, Verdict};
pub use model::{LogExpr, Model};

use crate::error::{Error, Result};
use crate::interval::{Interval, Precision};
use checks::{BoxClaim, Item, REGISTRY};

/// Outcome of one sub-claim.
#[derive(Clone, Debug)]
pub struct SubResult {
    pub label: String,
    pub verdict: Verdict,
    pub computed: Interval,
    pub claimed: Interval,
    pub dir: Direction,
    pub subdivisions: u64,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub verdict: Verdict,
    /// enclosure of the headline sub-claim (the first one with the worst
    /// verdict)
    pub computed: Interval,
    pub claimed: Interval,
    pub dir: Direction,
    pub subdivisions: u64,
    pub anchor: String,
    pub notes: String,
    pub subs: Vec<SubResult>,
    pub witness: Option<String>,
}

/// The flat record of the JSON report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportRecord {
    pub id: String,
    pub verdict: String,
    pub computed_lo: String,
    pub computed_hi: String,
    pub claimed: String,
    pub direction: String,
    pub subdivisions: u64,
    pub paper_anchor: String,
    pub notes: String,
}

const DIGITS: usize = 12;

/// Claims are decimal constants carried as tight enclosures; print the
/// constant itself.
fn fmt_claim(c: &Interval) -> String {
    let v = c.mid_f64();
    if v != 0.0 && !(1e-3..1e6).contains(&v.abs()) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

impl CheckResult {
    pub fn record(&self) -> ReportRecord {
        let (lo, hi) = self.computed.to_decimal_pair(DIGITS);
        ReportRecord {
            id: self.id.clone(),
            verdict: self.verdict.name().into(),
            computed_lo: lo,
            computed_hi: hi,
            claimed: fmt_claim(&self.claimed),
            direction: self.dir.symbol().into(),
            subdivisions: self.subdivisions,
            paper_anchor: self.anchor.clone(),
            notes: self.notes.clone(),
        }
    }

    /// One line per sub-claim, for the text report.
    pub fn detail_lines(&self) -> Vec<String> {
        self.subs
            .iter()
            .map(|s| {
                let (lo, hi) = s.computed.to_decimal_pair(DIGITS);
                let mut line = format!("  {:<12} {} [{lo}, {hi}] {} {}", s.verdict.name(), s.label, s.dir.symbol(), fmt_claim(&s.claimed));
                if let Some(w) = &s.witness {
                    line.push_str(&format!("  at {w}"));
                }
                line
            })
            .collect()
    }
}

fn run_item(m: &Model, item: Item, budget: u64) -> SubResult {
    match item {
        Item::Done(s) => s,
        Item::Boxed(c) => run_boxed(m, &c, budget),
    }
}

fn run_boxed(m: &Model, c: &BoxClaim, budget: u64) -> SubResult {
    let eval = |b: &ParamBox| (c.eval)(m, b);
    let wf = c.witness.as_ref().map(|w| move |b: &ParamBox| w(m, b));
    let o = match &wf {
        Some(w) => certify(c.boxes.clone(), &eval, Some(w), c.dir, &c.claim, budget),
        None => certify(c.boxes.clone(), &eval, None, c.dir, &c.claim, budget),
    };
    SubResult {
        label: c.label.clone(),
        verdict: o.verdict,
        computed: o.computed,
        claimed: c.claim.clone(),
        dir: c.dir,
        subdivisions: o.subdivisions,
        witness: o.witness.map(|b| b.describe()),
    }
}

fn assemble(id: &str, anchor: &str, notes: &str, subs: Vec<SubResult>) -> CheckResult {
    let worst = subs.iter().map(|s| s.verdict).max().unwrap_or(Verdict::Pass);
    let head = subs.iter().find(|s| s.verdict == worst).expect("checks have at least one sub-claim");
    let mut notes = notes.to_string();
    if subs.len() > 1 {
        let summary: Vec<String> = subs.iter().map(|s| format!("{}: {}", s.label, s.verdict.name())).collect();
        if !notes.is_empty() {
            notes.push(' ');
        }
        notes.push_str(&format!("[{}]", summary.join("; ")));
    }
    CheckResult {
        id: id.to_string(),
        verdict: worst,
        computed: head.computed.clone(),
        claimed: head.claimed.clone(),
        dir: head.dir,
        subdivisions: subs.iter().map(|s| s.subdivisions).sum(),
        anchor: anchor.to_string(),
        notes,
        witness: head.witness.clone(),
        subs,
    }
}

/// Every registered check id in report order.
pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

/// Split "L26c" into ("L26", Some(2)).
fn parse_id(id: &str) -> Result<(usize, Option<usize>)> {
    let up = id.trim().to_ascii_uppercase();
    let (base, suffix) = match up.char_indices().find(|(i, ch)| *i > 1 && ch.is_ascii_alphabetic()) {
        Some((i, _)) => (&up[..i], Some(&up[i..])),
        None => (&up[..], None),
    };
    let idx = REGISTRY.iter().position(|c| c.id == base).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    let sub = match suffix {
        None => None,
        Some(s) if s.len() == 1 => Some((s.as_bytes()[0] - b'A') as usize),
        Some(_) => return Err(Error::UnknownCheck(id.to_string())),
    };
    Ok((idx, sub))
}

/// Run one check. A suffixed id such as `L26a` runs only that sub-claim
/// and reports it as its own result.
pub fn verify(id: &str, prec: Precision) -> Result<CheckResult> {
    let (idx, sub) = parse_id(id)?;
    let def = &REGISTRY[idx];
    let m = Model::new(prec.bits);
    let items = (def.build)(&m);
    match sub {
        None => {
            let subs = items.into_iter().map(|it| run_item(&m, it, prec.max_subdivisions)).collect();
            Ok(assemble(def.id, def.anchor, def.notes, subs))
        }
        Some(k) => {
            let it = items.into_iter().nth(k).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
            let s = run_item(&m, it, prec.max_subdivisions);
            let sid = format!("{}{}", def.id, (b'a' + k as u8) as char);
            Ok(assemble(&sid, def.anchor, def.notes, vec![s]))
        }
    }
}

/// Run the given checks concurrently; results come back in the order of
/// `ids`.
pub fn run_checks(ids: &[String], prec: Precision) -> Result<Vec<CheckResult>> {
    for id in ids {
        parse_id(id)?;
    }
    let results: Vec<Result<CheckResult>> = std::thread::scope(|s| {
        let handles: Vec<_> = ids.iter().map(|id| s.spawn(move || verify(id, prec))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    results.into_iter().collect()
}

/// Every registered check, in id order.
pub fn run_all(prec: Precision) -> Vec<CheckResult> {
    let ids: Vec<String> = check_ids().iter().map(|s| s.to_string()).collect();
    run_checks(&ids, prec).expect("registered ids are valid")
}

/// Result of re-evaluating a check at random points of its boxes.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub id: String,
    pub samples: usize,
    /// sample points at which the claim was certifiably violated
    pub violations: Vec<String>,
    /// sample points where the evaluation failed or straddled the claim
    pub undecided: usize,
}

/// Draw `samples` random points from the boxes of every quantified
/// sub-claim of `id` and evaluate them at four times the precision.
/// Unbounded log T ranges are sampled log-uniformly up to 10^6 times
/// their lower end.
pub fn spot_audit(id: &str, samples: usize, seed: u64, prec: Precision) -> Result<AuditReport> {
    let (idx, sub) = parse_id(id)?;
    let def = &REGISTRY[idx];
    let hp = prec.bits * 4;
    let m = Model::new(prec.bits);
    let mh = Model::new(hp);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let claims: Vec<BoxClaim> = (def.build)(&m)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| sub.is_none_or(|s| s == *k))
        .filter_map(|(_, it)| match it {
            Item::Boxed(c) => Some(c),
            Item::Done(_) => None,
        })
        .collect();
    let mut report = AuditReport { id: id.to_string(), samples: 0, violations: Vec::new(), undecided: 0 };
    if claims.is_empty() {
        return Ok(report);
    }
    for i in 0..samples {
        let c = &claims[i % claims.len()];
        let b = &c.boxes[rng.gen_range(0..c.boxes.len())];
        let Some(pt) = sample_point(b, hp, &mut rng) else { continue };
        report.samples += 1;
        let claim = c.claim.with_prec(hp);
        match (c.eval)(&mh, &pt) {
            Ok(v) => {
                let (ok, bad) = match c.dir {
                    Direction::Le => (v.hi() <= claim.lo(), v.lo() > claim.hi()),
                    Direction::Ge => (v.lo() >= claim.hi(), v.hi() < claim.lo()),
                };
                if bad {
                    report.violations.push(format!("{}: {}", c.label, pt.describe()));
                } else if !ok {
                    report.undecided += 1;
                }
            }
            Err(_) => report.undecided += 1,
        }
    }
    Ok(report)
}

fn sample_point(b: &ParamBox, hp: u32, rng: &mut ChaCha8Rng) -> Option<ParamBox> {
    let mut vars = Vec::with_capacity(b.vars.len());
    for (i, v) in b.vars.iter().enumerate() {
        let lo = v.lo_f64();
        let x = if !v.is_finite() {
            lo * 10f64.powf(rng.gen_range(0.0..6.0))
        } else {
            let hi = v.hi_f64();
            if i == 0 && lo > 0.0 && hi / lo > 100.0 {
                lo * (hi / lo).powf(rng.gen::<f64>())
            } else {
                lo + (hi - lo) * rng.gen::<f64>()
            }
        };
        let x = Interval::from_f64(x, hp);
        let x = v.with_prec(hp).intersect(&x)?;
        vars.push(x);
    }
    ParamBox { vars, region: b.region, range: b.range }.couple()
}
