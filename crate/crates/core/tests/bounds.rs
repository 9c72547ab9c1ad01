use proptest::prelude::*;
use zdb::bounds::*;
use zdb::interval::{const_e, const_pi, Interval, Precision};
use zdb::oracle::{divisor_sum_bruteforce, gamma_reference};

const P: u32 = 128;

fn d(s: &str) -> Interval {
    Interval::dec(s, P)
}

fn encloses(v: &Interval, x: f64, rel: f64) -> bool {
    v.lo_f64() <= x * (1.0 + rel) && x * (1.0 - rel) <= v.hi_f64()
}

#[test]
fn classical_gap_at_3e12() {
    let g = zero_free_gap(ZeroFreeRegionId::Classical, &d("3e12")).unwrap();
    // mpmath: 0.00626177391018633006
    assert!(encloses(&g, 0.00626177391018633006, 1e-15));
    assert!(g.certainly_ge(&d("6.26e-3")) && g.certainly_le(&d("6.27e-3")));
}

#[test]
fn littlewood_gap_at_e_to_e() {
    let ell = const_e(P);
    let g = zero_free_gap_log(ZeroFreeRegionId::Littlewood, &ell).unwrap();
    let exact = (&d("21.233") * &ell).recip().unwrap();
    assert!(g.intersect(&exact).is_some());
    assert!(g.width_f64() < 1e-30);
}

#[test]
fn j_at_range_ends() {
    // mpmath: J(e^46.2) = 11.0517129765632468, J(e^170.2) = 33.0223740612814941
    let j = j_function_log(&d("46.2")).unwrap();
    assert!(encloses(&j, 11.0517129765632468, 1e-15));
    let j = j_function_log(&d("170.2")).unwrap();
    assert!(encloses(&j, 33.0223740612814941, 1e-15));
    assert!(j_comparison_holds_log(&d("170.2")).unwrap());
    assert!(j_comparison_holds_log(&d("46.2")).unwrap());
}

#[test]
fn widest_region_per_range() {
    let cases = [
        ("40", ZeroFreeRegionId::Classical),
        ("100", ZeroFreeRegionId::Intermediate),
        ("300000", ZeroFreeRegionId::Littlewood),
        ("1e6", ZeroFreeRegionId::KorobovVinogradov),
    ];
    for (ell, want) in cases {
        assert_eq!(widest_region_log(&d(ell)).unwrap(), want, "log T = {ell}");
    }
    assert_eq!(widest_region(&d("3e12")).unwrap(), ZeroFreeRegionId::Classical);
}

#[test]
fn littlewood_hands_over_to_kv_near_481958() {
    let l = |s: &str| zero_free_gap_log(ZeroFreeRegionId::Littlewood, &d(s)).unwrap();
    let k = |s: &str| zero_free_gap_log(ZeroFreeRegionId::KorobovVinogradov, &d(s)).unwrap();
    assert!(l("481000").certainly_gt(&k("481000")));
    assert!(k("483000").certainly_gt(&l("483000")));
}

#[test]
fn ranges_partition_log_t() {
    assert_eq!(TRange::for_log_t(&d("30")).unwrap(), TRange::R1);
    assert_eq!(TRange::for_log_t(&d("46.2")).unwrap(), TRange::R1);
    assert_eq!(TRange::for_log_t(&d("46.3")).unwrap(), TRange::R2);
    assert_eq!(TRange::for_log_t(&d("170.2")).unwrap(), TRange::R2);
    assert_eq!(TRange::for_log_t(&d("200")).unwrap(), TRange::R3);
    assert_eq!(TRange::for_log_t(&d("1e9")).unwrap(), TRange::R4);
    let straddle = Interval::dec_range("170", "171", P);
    assert!(matches!(TRange::for_log_t(&straddle), Err(zdb::Error::RangeStraddle(_))));
}

#[test]
fn richert_bound_values() {
    let m = richert_log_m(&d("1"), &d("8")).unwrap().exp();
    assert!(m.contains(&d("282.798")));
    assert!(m.width_f64() < 1e-25);
    // mpmath: 13065652.8222419135
    let m = richert_m(&d("0.5"), &d("1000")).unwrap();
    assert!(encloses(&m, 13065652.8222419135, 1e-14));
    assert!(m.certainly_ge(&d("1.25e7")) && m.certainly_le(&d("1.35e7")));
    assert!(richert_m(&d("0.4"), &d("1000")).is_err());
}

#[test]
fn nt_at_e() {
    let e = const_e(P);
    let u = nt_upper(&e).unwrap();
    // mpmath: 8.67618293941394183
    assert!(encloses(&u, 8.67618293941394183, 1e-15));
    assert!(nt_lower(&e).unwrap().is_negative());
    assert!(nt_upper(&d("2")).is_err());
}

#[test]
fn nt_budget_holds_at_3e12_but_not_at_log_t_1838() {
    // 2 N(2 log T) ≤ 0.45 log T log log T: true at the bottom of the range
    let budget = |ell: &Interval| &(&d("0.45") * ell) * &ell.ln().unwrap();
    let ell = d("3e12").ln().unwrap();
    let lhs = &Interval::from_i64(2, P) * &nt_upper(&ell.mul_pow2(1)).unwrap();
    assert!(lhs.certainly_le(&budget(&ell)));
    // the main term grows like (2/π) ℓ log ℓ, which overtakes 0.45 ℓ log ℓ
    let ell = d("1838");
    let lhs = &Interval::from_i64(2, P) * &nt_upper(&ell.mul_pow2(1)).unwrap();
    assert!(lhs.certainly_gt(&budget(&ell)));
}

#[test]
fn stirling_at_half_plus_10i() {
    let (s, t) = (d("0.5"), d("10"));
    let z = (&s.sqr() + &t.sqr()).sqrt().unwrap();
    let u = stirling_gamma_upper(&s, &t, &z).unwrap();
    let exact = (&const_pi(P).mul_pow2(1).sqrt().unwrap()) * &(&(&Interval::from_i64(-5, P) * &const_pi(P)) + &(&Interval::from_i64(6, P) * &z).recip().unwrap()).exp();
    assert!(u.intersect(&exact).is_some());
    let g = gamma_reference(0.5, 10.0, Precision::default()).unwrap();
    assert!(u.certainly_ge(&g));
    assert!(stirling_gamma_upper(&s, &d("0"), &s).is_err());
}

#[test]
fn stirling_grid_quarter_steps() {
    for i in 0..=4 {
        let sigma = i as f64 / 4.0;
        for t in 1..=100 {
            let s = Interval::from_f64(sigma, P);
            let ti = Interval::from_i64(t, P);
            let z = (&s.sqr() + &ti.sqr()).sqrt().unwrap();
            let u = stirling_gamma_upper(&s, &ti, &z).unwrap();
            let g = gamma_reference(sigma, t as f64, Precision::default()).unwrap();
            assert!(u.hi() >= g.hi(), "σ = {sigma}, t = {t}: {u} < {g}");
        }
    }
}

#[test]
fn divisor_coefficient_at_1e85() {
    let c = divisor_coefficient(&d("1e85")).unwrap();
    assert!(c.certainly_le(&d("0.106")));
    let band = divisor_sum_band(&d("1e85")).unwrap();
    assert!(band.quarter_applies && band.unit_applies);
}

#[test]
fn divisor_band_contains_exact_sums() {
    // brute force: Σ_{n≤10⁶} d(n)² = 421094344, Σ_{n≤7} d(n)² = 42
    assert_eq!(divisor_sum_bruteforce(1_000_000).unwrap(), 421_094_344);
    let band = divisor_sum_band(&d("1e6")).unwrap();
    assert!(band.upper.certainly_ge(&d("421094344")));
    assert!(band.lower.certainly_le(&d("421094344")));
    assert_eq!(divisor_sum_bruteforce(7).unwrap(), 42);
    let seven = d("7");
    let b = divisor_sum_band(&seven).unwrap();
    assert!(b.unit_applies && !b.quarter_applies);
    let simple = &seven * &seven.ln().unwrap().powi(3).unwrap();
    assert!(d("42").certainly_le(&simple));
    assert!(divisor_sum_band(&d("1.5")).is_err());
}

#[test]
fn divisor_constants_are_intervals() {
    let [d1, d2, d3, d4] = divisor_constants(P);
    assert!(d1.certainly_gt(&d("0.101321")) && d1.certainly_lt(&d("0.101322")));
    assert!(d2.contains(&d("0.7455")) && d3.contains(&d("0.8245")) && d4.contains(&d("0.4615")));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gaps_are_positive_and_shrink(ell in 1.2f64..1e7, bump in 0.01f64..10.0) {
        let a = Interval::from_f64(ell, P);
        let b = Interval::from_f64(ell * (1.0 + bump), P);
        for r in [ZeroFreeRegionId::Classical, ZeroFreeRegionId::KorobovVinogradov] {
            let ga = zero_free_gap_log(r, &a).unwrap();
            let gb = zero_free_gap_log(r, &b).unwrap();
            prop_assert!(ga.is_positive());
            prop_assert!(gb.certainly_lt(&ga));
        }
    }

    #[test]
    fn richert_grows_in_t_and_falls_in_alpha(alpha in 0.5f64..0.99, ell in 2.0f64..1e6, da in 0.001f64..0.01, f in 1.01f64..3.0) {
        let a = Interval::from_f64(alpha, P);
        let l = Interval::from_f64(ell, P);
        let base = richert_log_m(&a, &l).unwrap();
        prop_assert!(richert_log_m(&a, &Interval::from_f64(ell * f, P)).unwrap().certainly_gt(&base));
        prop_assert!(richert_log_m(&Interval::from_f64(alpha + da, P), &l).unwrap().certainly_lt(&base));
    }

    #[test]
    fn nt_bounds_are_ordered(t in 3.0f64..1e9) {
        let ti = Interval::from_f64(t, P);
        prop_assert!(nt_lower(&ti).unwrap().certainly_lt(&nt_upper(&ti).unwrap()));
        prop_assert!(nt_upper(&ti).unwrap().is_positive());
    }

    #[test]
    fn divisor_band_holds_below_1e5(x in 2u64..100_000) {
        let band = divisor_sum_band(&Interval::from_i64(x as i64, P)).unwrap();
        let exact = Interval::from_i64(divisor_sum_bruteforce(x).unwrap() as i64, P);
        prop_assert!(band.lower.certainly_le(&exact));
        prop_assert!(band.upper.certainly_ge(&exact));
    }

    #[test]
    fn stirling_dominates_reference(sigma in 0.0f64..1.0, t in 0.5f64..60.0) {
        let s = Interval::from_f64(sigma, P);
        let ti = Interval::from_f64(t, P);
        let z = (&s.sqr() + &ti.sqr()).sqrt().unwrap();
        let u = stirling_gamma_upper(&s, &ti, &z).unwrap();
        prop_assert!(u.hi() >= gamma_reference(sigma, t, Precision::default()).unwrap().hi());
    }
}
