use proptest::prelude::*;
use zdb::bounds::{zero_free_gap_log, ZeroFreeRegionId};
use zdb::density::*;
use zdb::interval::Interval;
use zdb::Error;

const P: u32 = 128;

fn d(s: &str) -> Interval {
    Interval::dec(s, P)
}

fn one() -> Interval {
    Interval::from_i64(1, P)
}

fn encloses(v: &Interval, x: f64, rel: f64) -> bool {
    v.lo_f64() <= x * (1.0 + rel) && x * (1.0 - rel) <= v.hi_f64()
}

#[test]
fn general_bound_at_1e13() {
    let ell = d("1e13").ln().unwrap();
    let v = theorem1_general_log(&d("0.98"), &ell).unwrap();
    // mpmath: 3.07817318429513796e42
    assert!(encloses(&v, 3.07817318429513796e42, 1e-14));
    // the same evaluation at 300 bits agrees to well over 40 bits
    let hp = |s: &str| Interval::dec(s, 300);
    let w = theorem1_general_log(&hp("0.98"), &hp("1e13").ln().unwrap()).unwrap();
    assert!(v.contains(&w.with_prec(P)) || w.intersect(&v.with_prec(300)).is_some());
    assert!(v.width_f64() / v.mid_f64() < 2f64.powi(-40));
}

#[test]
fn simple_bound_at_sigma_one() {
    let ell = d("100");
    let v = theorem1_simple_log(&one(), &ell).unwrap();
    let want = &d("1.89e23") * &ell.pow_ratio(10393, 900).unwrap();
    assert!(v.intersect(&want).is_some());
}

#[test]
fn simple_bound_dominates_general_in_r3() {
    let (s, ell) = (d("0.99"), d("200"));
    let simple = theorem1_simple_log(&s, &ell).unwrap();
    let general = theorem1_general_log(&s, &ell).unwrap();
    assert!(simple.certainly_gt(&general));
}

#[test]
fn straddling_a_range_boundary_is_an_error() {
    let ell = Interval::dec_range("170", "171", P);
    assert!(matches!(theorem1_simple_log(&d("0.99"), &ell), Err(Error::RangeStraddle(_))));
}

#[test]
fn sigma_outside_range_is_rejected() {
    assert!(matches!(theorem1_general_log(&d("0.97"), &d("40")), Err(Error::DomainError(_))));
    assert!(matches!(theorem1_simple_log(&d("1.01"), &d("40")), Err(Error::DomainError(_))));
}

#[test]
fn high_range_bound() {
    let ell = d("6.7e12");
    let v = theorem2_log(&one(), &ell).unwrap();
    let want = &d("4.45e12") * &ell.pow_ratio(10393, 900).unwrap();
    assert!(v.intersect(&want).is_some());
    // mpmath: log of the bound at σ = 0.999, log T = 10¹³
    let v = theorem2_log(&d("0.999"), &d("1e13")).unwrap();
    assert!(encloses(&v.ln().unwrap(), 18305635180.0902636583, 1e-15));
    assert!(theorem2_log(&one(), &d("1e12")).is_err());
}

#[test]
fn ingham_type_values() {
    let ell = d("3e12").ln().unwrap();
    let v = ingham_type_log(&one(), &ell, &one()).unwrap();
    assert!(v.intersect(&ell.powi(3).unwrap()).is_some());
    // mpmath: 109758.135261324087
    let v = ingham_type_log(&d("0.98"), &ell, &one()).unwrap();
    assert!(encloses(&v, 109758.135261324087, 1e-15));
}

#[test]
fn crossover_at_high_range_start_lies_inside_kv_region() {
    let ell = d("6.7e12");
    let s = sigma_crossover_log(&ell, &one(), &d("4.72e20")).unwrap();
    // mpmath: 0.999999999983206373
    assert!(encloses(&s, 0.999999999983206373, 1e-17));
    let gap = zero_free_gap_log(ZeroFreeRegionId::KorobovVinogradov, &ell).unwrap();
    assert!(gap.certainly_gt(&(&one() - &s)));
    // below σ* the single-term bound is the smaller one
    let sigma = &one() - &(&one() - &s).mul_pow2(1);
    let sigma = Interval::from_f64(sigma.mid_f64(), P);
    let simple = theorem1_simple_log(&sigma, &ell).unwrap();
    let ingham = ingham_type_log(&sigma, &ell, &one()).unwrap();
    assert!(simple.certainly_lt(&ingham));
}

#[test]
fn no_crossover_at_3e12() {
    let ell = d("3e12").ln().unwrap();
    assert_eq!(sigma_crossover_log(&ell, &one(), &d("2.15e23")).unwrap_err(), Error::NoCrossover);
}

#[test]
fn dropped_term_matters_at_log_t_1e4() {
    // the explicit threshold neglects B(1−σ)^{3/2}; at log T = 10⁴ that term
    // dominates and the single-term bound never wins
    let ell = d("1e4");
    let c1p = d("4.42e22");
    let s = sigma_crossover_log(&ell, &one(), &c1p).unwrap();
    assert_eq!(sigma_crossover_implicit_log(&ell, &one(), &c1p).unwrap_err(), Error::NoCrossover);
    let sigma = Interval::from_f64(s.mid_f64() - 0.001, P);
    let simple = theorem1_simple_log(&sigma, &ell).unwrap();
    let ingham = ingham_type_log(&sigma, &ell, &one()).unwrap();
    assert!(simple.certainly_gt(&ingham));
}

#[test]
fn regime_boundary_brackets() {
    let c1p = d("4.72e20");
    let b1 = t_regime_boundary(&one(), &c1p).unwrap();
    // bisection oracle (mpmath): 6609667606613.77 and 6104099731214.17
    assert!(encloses(&b1, 6609667606613.77055, 1e-12));
    assert!(b1.certainly_le(&d("6.7e12")));
    let b3 = t_regime_boundary(&d("1000"), &c1p).unwrap();
    assert!(encloses(&b3, 6104099731214.16760, 1e-12));
    assert!(b3.certainly_lt(&b1));
}

#[test]
fn below_tabulated_range_is_flagged() {
    assert!(below_tabulated_range(&d("20")));
    assert!(!below_tabulated_range(&d("40")));
    // R1 constants are still used there
    let v = theorem1_simple_log(&one(), &d("20")).unwrap();
    assert!(v.intersect(&(&d("2.15e23") * &d("20").pow_ratio(10393, 900).unwrap())).is_some());
}

#[test]
fn printed_table_is_stored_as_printed() {
    let t = ConstantTable::printed(P);
    assert!(t.c1_prime[3].contains(&d("4.72e20")));
    assert!(t.c1[0].contains(&d("4.68e23")));
    assert!(t.c2.contains(&d("7.65e10")) && t.third.contains(&d("0.27")) && t.c_high.contains(&d("4.45e12")));
}

/// log T values inside one range, away from the boundaries.
fn in_range() -> impl Strategy<Value = f64> {
    prop_oneof![29.0f64..46.0, 47.0f64..170.0, 171.0f64..481_000.0, 482_000.0f64..1e12]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn general_bound_is_above_its_third_term(sigma in 0.98f64..1.0, ell in in_range()) {
        let (s, l) = (Interval::from_f64(sigma, P), Interval::from_f64(ell, P));
        let v = theorem1_general_log(&s, &l).unwrap();
        let floor = &(&d("0.27") * &l.pow_ratio(7, 5).unwrap()) * &l.ln().unwrap();
        prop_assert!(v.certainly_gt(&floor));
    }

    #[test]
    fn bounds_fall_as_sigma_rises(sigma in 0.98f64..0.999, step in 1e-4f64..1e-3, ell in in_range()) {
        let l = Interval::from_f64(ell, P);
        let (a, b) = (Interval::from_f64(sigma, P), Interval::from_f64(sigma + step, P));
        prop_assert!(theorem1_simple_log(&b, &l).unwrap().certainly_lt(&theorem1_simple_log(&a, &l).unwrap()));
        prop_assert!(theorem1_general_log(&b, &l).unwrap().certainly_lt(&theorem1_general_log(&a, &l).unwrap()));
        prop_assert!(ingham_type_log(&b, &l, &one()).unwrap().certainly_lt(&ingham_type_log(&a, &l, &one()).unwrap()));
    }

    #[test]
    fn simple_dominates_general(sigma in 0.98f64..1.0, ell in in_range()) {
        let (s, l) = (Interval::from_f64(sigma, P), Interval::from_f64(ell, P));
        prop_assert!(theorem1_simple_log(&s, &l).unwrap().certainly_gt(&theorem1_general_log(&s, &l).unwrap()));
    }

    #[test]
    fn implicit_threshold_is_further_from_one(ell in 1e6f64..1e14, c in 1.0f64..1e3) {
        let (l, ci) = (Interval::from_f64(ell, P), Interval::from_f64(c, P));
        let c1p = d("4.72e20");
        if let Ok(imp) = sigma_crossover_implicit_log(&l, &ci, &c1p) {
            let exp = sigma_crossover_log(&l, &ci, &c1p).unwrap();
            prop_assert!(imp.hi() <= exp.hi());
        }
    }
}
