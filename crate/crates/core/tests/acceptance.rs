//! One line per acceptance criterion. Lines go straight to the process
//! stdout so they show in the plain `cargo test` log.
//!
//! The test asserts what is certified. A criterion whose target the
//! certified computation contradicts prints FAIL with the numbers, and the
//! test pins those numbers instead of hiding them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};
use zdb::bounds::{divisor_sum_band, stirling_gamma_upper};
use zdb::cli::render_report;
use zdb::density::t_regime_boundary;
use zdb::interval::{Interval, Precision};
use zdb::ledger::{run_all, CheckResult, Verdict};
use zdb::oracle::{divisor_sums_bruteforce, gamma_reference, hm_test, reference_value, HMInstance, RefOp};

const P: u32 = 128;

fn line(n: usize, name: &str, ok: bool, detail: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "acceptance {n} {name}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    let _ = out.flush();
}

fn d(s: &str) -> Interval {
    Interval::dec(s, P)
}

fn verdict(results: &[CheckResult], id: &str) -> Verdict {
    results.iter().find(|r| r.id == id).unwrap().verdict
}

fn all_pass(results: &[CheckResult], ids: &[&str]) -> (bool, String) {
    let bad: Vec<String> = ids.iter().filter(|id| verdict(results, id) != Verdict::Pass).map(|s| s.to_string()).collect();
    (bad.is_empty(), if bad.is_empty() { format!("PASS: {}", ids.join(", ")) } else { format!("not PASS: {}", bad.join(", ")) })
}

fn ledger_run(results: &[CheckResult], elapsed: Duration) {
    let failing: BTreeSet<&str> = results.iter().filter(|r| r.verdict != Verdict::Pass).map(|r| r.id.as_str()).collect();
    let l25 = results.iter().find(|r| r.id == "L25").unwrap();
    let ok = failing == BTreeSet::from(["L25"]) && l25.computed.contains(&d("0.45")) && elapsed.as_secs() <= 600;
    line(
        1,
        "ledger run",
        ok,
        &format!(
            "{:.1} s; non-PASS: {}; L25 enclosure {} contains 0.45; L08, L09, L19 are certified discrepancies",
            elapsed.as_secs_f64(),
            failing.iter().copied().collect::<Vec<_>>().join(", "),
            l25.computed
        ),
    );
    // pinned: exactly these four are certified FAILs, nothing inconclusive
    let fails: BTreeSet<&str> = results.iter().filter(|r| r.verdict == Verdict::Fail).map(|r| r.id.as_str()).collect();
    assert_eq!(failing, BTreeSet::from(["L08", "L09", "L19", "L25"]));
    assert_eq!(fails, failing);
    assert!(l25.computed.contains(&d("0.45")));
    assert!(elapsed.as_secs() <= 600);
}

fn divisor_suite() -> (bool, String) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1_5eed);
    let xs: Vec<u64> = (0..1000).map(|_| rng.gen_range(2..=10_000_000u64)).collect();
    let sums = divisor_sums_bruteforce(&xs).unwrap();
    let mut bad = Vec::new();
    for (&x, &s) in xs.iter().zip(&sums) {
        let xi = Interval::from_i64(x as i64, P);
        let si = Interval::from_i64(s as i64, P);
        let band = divisor_sum_band(&xi).unwrap();
        let l3 = &xi * &xi.ln().unwrap().powi(3).unwrap();
        let in_band = band.lower.certainly_le(&si) && band.upper.certainly_ge(&si);
        let quarter = x < 433 || si.certainly_le(&l3.mul_pow2(-2));
        let unit = x < 7 || si.certainly_le(&l3);
        if !(in_band && quarter && unit) {
            bad.push(x);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    (bad.is_empty() && secs <= 60.0, format!("1000 seeded x <= 1e7, {} outside, {secs:.1} s", bad.len()))
}

fn stirling_audit() -> (bool, String) {
    let mut violations = 0;
    let mut points = 0;
    for k in 0..=10 {
        let sigma = k as f64 / 10.0;
        for t in 1..=100 {
            for t in [t as f64, -(t as f64)] {
                let s = Interval::from_f64(sigma, P);
                let ti = Interval::from_f64(t, P);
                let z = (&s.sqr() + &ti.sqr()).sqrt().unwrap();
                let u = stirling_gamma_upper(&s, &ti, &z).unwrap();
                let g = gamma_reference(sigma, t, Precision::default()).unwrap();
                points += 1;
                if u.hi() < g.hi() {
                    violations += 1;
                }
            }
        }
    }
    (violations == 0, format!("{points} grid points, {violations} violations"))
}

fn hm_suite() -> (bool, String) {
    let mut broken = 0;
    for seed in 0..1000u64 {
        let r = 1 + (seed % 8) as usize;
        let dim = 1 + ((seed / 8) % 8) as usize;
        let rep = hm_test(&HMInstance::random(seed, r, dim).unwrap());
        if !(rep.holds1 && rep.holds2) {
            broken += 1;
        }
    }
    let scaled = hm_test(&HMInstance::random(3, 4, 5).unwrap().scaled(1e-3));
    let shown = !scaled.holds2_printed;
    (
        broken == 0 && shown,
        format!(
            "1000 instances, {broken} violations; printed form fails at seed 3 scaled by 1e-3: lhs {:.3e} > rhs {:.3e}",
            scaled.lhs2, scaled.rhs2
        ),
    )
}

fn containment() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let mut escaped = 0;
    let n = 100_000;
    for i in 0..n {
        let op = RefOp::ALL[i % RefOp::ALL.len()];
        let (x, y) = match op {
            RefOp::Sqrt | RefOp::Ln => (10f64.powf(rng.gen_range(-6.0..6.0)), 0.0),
            RefOp::Exp => (rng.gen_range(-50.0..50.0), 0.0),
            RefOp::Pow => (10f64.powf(rng.gen_range(-2.0..2.0)), rng.gen_range(-5.0..5.0)),
            _ => (rng.gen_range(-1e3..1e3), rng.gen_range(-1e3..1e3)),
        };
        let (a, b) = (Interval::from_f64(x, P), Interval::from_f64(y, P));
        let got = match op {
            RefOp::Add => Ok(&a + &b),
            RefOp::Sub => Ok(&a - &b),
            RefOp::Mul => Ok(&a * &b),
            RefOp::Div => a.div(&b),
            RefOp::Sqrt => a.sqrt(),
            RefOp::Exp => Ok(a.exp()),
            RefOp::Ln => a.ln(),
            RefOp::Pow => a.pow(&b),
        };
        let truth = reference_value(op, x, y).unwrap();
        if !got.map(|g| g.contains_float(&truth)).unwrap_or(false) {
            escaped += 1;
        }
    }
    (escaped == 0, format!("{n} samples, {escaped} escaped"))
}

#[test]
fn acceptance() {
    let prec = Precision::default();
    let start = Instant::now();
    let first = run_all(prec);
    let elapsed = start.elapsed();
    ledger_run(&first, elapsed);

    let (ok, detail) = all_pass(&first, &["L03", "L04", "L14", "L15", "L18", "L20", "L21", "L23", "L24"]);
    line(2, "constant reproduction", ok, &detail);
    assert!(ok, "{detail}");

    let (ok, detail) = all_pass(&first, &["L26"]);
    line(3, "exponent arithmetic", ok, &detail);
    assert!(ok);

    let (ok, detail) = all_pass(&first, &["L05", "L06", "L07", "L12", "L21", "L22", "L23"]);
    line(4, "tail integrals", ok, &detail);
    assert!(ok, "{detail}");

    let t = Instant::now();
    let b = t_regime_boundary(&d("1"), &d("4.72e20")).unwrap();
    let secs = t.elapsed().as_secs_f64();
    let ok = b.certainly_le(&d("6.7e12")) && secs <= 10.0 && verdict(&first, "L27") == Verdict::Pass;
    line(5, "crossover", ok, &format!("log T bracket {b}, {secs:.2} s"));
    assert!(ok);

    let (ok, mut detail) = divisor_suite();
    let l30 = verdict(&first, "L30") == Verdict::Pass;
    detail.push_str(if l30 { "; 0.106 at 1e85 certified" } else { "; 0.106 at 1e85 NOT certified" });
    line(6, "divisor-sum suite", ok && l30, &detail);
    assert!(ok && l30, "{detail}");

    let (ok, detail) = stirling_audit();
    line(7, "Stirling audit", ok, &detail);
    assert!(ok, "{detail}");

    let (ok, detail) = hm_suite();
    line(8, "Halasz-Montgomery suite", ok, &detail);
    assert!(ok, "{detail}");

    let (contained, cdetail) = containment();
    let second = run_all(prec);
    let r1 = render_report(&first, zdb::cli::Format::Json).unwrap();
    let r2 = render_report(&second, zdb::cli::Format::Json).unwrap();
    let same = r1 == r2;
    line(9, "interval soundness", contained && same, &format!("{cdetail}; two full reports byte-identical: {same}"));
    assert!(contained && same);
}
