use zdb::interval::{Interval, Precision};
use zdb::ledger::{check_ids, run_checks, spot_audit, verify, Direction, Verdict};
use zdb::Error;

fn prec() -> Precision {
    Precision::default()
}

#[test]
fn registry_lists_32_checks_in_order() {
    let ids = check_ids();
    assert_eq!(ids.len(), 32);
    assert_eq!(ids[0], "L01");
    assert_eq!(ids[31], "L32");
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn c1_minimum_is_certified() {
    let r = verify("L03", prec()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.dir, Direction::Ge);
    assert!(r.computed.certainly_ge(&Interval::dec("0.3386", 128)));
    assert_eq!(r.subs.len(), 4);
}

#[test]
fn exponent_identities_are_exact() {
    let r = verify("L26", prec()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.subs.iter().all(|s| s.verdict == Verdict::Pass));
    let a = verify("L26a", prec()).unwrap();
    assert_eq!(a.id, "L26a");
    assert_eq!(a.subs.len(), 1);
    assert_eq!(a.subs[0].label, r.subs[0].label);
}

#[test]
fn suffixes_are_case_insensitive() {
    assert_eq!(verify("l26A", prec()).unwrap().id, "L26a");
}

#[test]
fn unknown_ids_are_rejected() {
    for id in ["L99", "L26zz", "X01", "L26z"] {
        assert!(matches!(verify(id, prec()), Err(Error::UnknownCheck(_))), "{id}");
    }
    assert!(run_checks(&["L03".into(), "nope".into()], prec()).is_err());
}

#[test]
fn third_term_constant_is_045_not_027() {
    let r = verify("L25", prec()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.computed.contains(&Interval::dec("0.45", 128)));
    assert!(r.claimed.contains(&Interval::dec("0.27", 128)));
    assert!(!r.notes.is_empty());
    // every other part of the final assembly holds
    let others: Vec<_> = r.subs.iter().filter(|s| s.verdict != Verdict::Pass).collect();
    assert_eq!(others.len(), 1, "{:?}", r.subs.iter().map(|s| (&s.label, s.verdict)).collect::<Vec<_>>());
}

#[test]
fn nt_budget_fails_with_a_witness() {
    let r = verify("L08", prec()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.witness.is_some());
}

#[test]
fn divisor_coefficient_check() {
    let r = verify("L30", prec()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.computed.certainly_le(&Interval::dec("0.106", 128)));
}

#[test]
fn crossover_check() {
    let r = verify("L27", prec()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.computed.certainly_le(&Interval::dec("6.7e12", 128)));
}

#[test]
fn starved_budget_is_inconclusive() {
    let r = verify("L18", Precision::new(128, 1).unwrap()).unwrap();
    assert_eq!(r.verdict, Verdict::Inconclusive);
    assert_eq!(verify("L18", prec()).unwrap().verdict, Verdict::Pass);
}

#[test]
fn results_follow_request_order() {
    let ids: Vec<String> = ["L30", "L03", "L26b"].iter().map(|s| s.to_string()).collect();
    let rs = run_checks(&ids, prec()).unwrap();
    let got: Vec<&str> = rs.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(got, ["L30", "L03", "L26b"]);
}

#[test]
fn report_record_schema() {
    let r = verify("L30", prec()).unwrap();
    let v = serde_json::to_value(r.record()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["id", "verdict", "computed_lo", "computed_hi", "claimed", "direction", "subdivisions", "paper_anchor", "notes"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["direction"], "<=");
    let lo: f64 = v["computed_lo"].as_str().unwrap().parse().unwrap();
    let hi: f64 = v["computed_hi"].as_str().unwrap().parse().unwrap();
    assert!(lo <= hi && hi <= 0.106);
}

#[test]
fn spot_audits_find_no_violations_in_passing_checks() {
    for (k, id) in ["L03", "L04", "L14", "L15", "L18", "L20"].iter().enumerate() {
        let a = spot_audit(id, 200, k as u64, prec()).unwrap();
        assert!(a.samples > 0, "{id}");
        assert!(a.violations.is_empty(), "{id}: {:?}", a.violations);
    }
}

#[test]
fn spot_audit_finds_the_nt_budget_violation() {
    let a = spot_audit("L08", 400, 7, prec()).unwrap();
    assert!(!a.violations.is_empty());
}

#[test]
fn verdict_order_is_pass_inconclusive_fail() {
    assert!(Verdict::Pass < Verdict::Inconclusive && Verdict::Inconclusive < Verdict::Fail);
    assert_eq!([Verdict::Pass, Verdict::Fail, Verdict::Inconclusive].into_iter().max(), Some(Verdict::Fail));
}
