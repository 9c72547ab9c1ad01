use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zdb::interval::float::Float;
use zdb::interval::{const_e, const_pi, Interval, Precision};
use zdb::oracle::{reference_e, reference_pi, reference_value, RefOp};
use zdb::Error;

const P: u32 = 128;

fn iv(lo: f64, hi: f64) -> Interval {
    Interval::from_f64(lo, P).hull(&Interval::from_f64(hi, P))
}

fn apply(op: RefOp, x: &Interval, y: &Interval) -> zdb::Result<Interval> {
    match op {
        RefOp::Add => Ok(x + y),
        RefOp::Sub => Ok(x - y),
        RefOp::Mul => Ok(x * y),
        RefOp::Div => x.div(y),
        RefOp::Sqrt => x.sqrt(),
        RefOp::Exp => Ok(x.exp()),
        RefOp::Ln => x.ln(),
        RefOp::Pow => x.pow(y),
    }
}

/// Random operands inside each operation's domain.
fn sample(op: RefOp, rng: &mut ChaCha8Rng) -> (f64, f64) {
    let signed = |rng: &mut ChaCha8Rng| {
        let m = 10f64.powf(rng.gen_range(-3.0..3.0));
        if rng.gen_bool(0.5) {
            m
        } else {
            -m
        }
    };
    let pos = |rng: &mut ChaCha8Rng, lo: f64, hi: f64| 10f64.powf(rng.gen_range(lo..hi));
    match op {
        RefOp::Add | RefOp::Sub | RefOp::Mul | RefOp::Div => (signed(rng), signed(rng)),
        RefOp::Sqrt => (pos(rng, -6.0, 6.0), 0.0),
        RefOp::Exp => (rng.gen_range(-60.0..60.0), 0.0),
        RefOp::Ln => (pos(rng, -8.0, 8.0), 0.0),
        RefOp::Pow => (pos(rng, -2.0, 2.0), rng.gen_range(-6.0..6.0)),
    }
}

/// A box around `x` with x at a random position: a point, or a relative
/// width up to 2^-10.
fn box_around(x: f64, rng: &mut ChaCha8Rng) -> Interval {
    if rng.gen_bool(0.5) {
        return Interval::from_f64(x, P);
    }
    let w = x.abs() * rng.gen_range(0.0..1.0) * 2f64.powi(-10);
    let (a, b) = (x - w * rng.gen_range(0.0..1.0), x + w * rng.gen_range(0.0..1.0));
    iv(a.min(x), b.max(x))
}

fn contains(v: &Interval, f: &Float) -> bool {
    v.contains_float(f)
}

#[test]
fn containment_against_300_bit_reference_on_1e5_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2b_5eed);
    let mut failures = Vec::new();
    let n = 100_000;
    for i in 0..n {
        let op = RefOp::ALL[i % RefOp::ALL.len()];
        let (x, y) = sample(op, &mut rng);
        let (bx, by) = (box_around(x, &mut rng), box_around(y, &mut rng));
        let truth = reference_value(op, x, y).unwrap();
        let got = apply(op, &bx, &by).unwrap();
        if !contains(&got, &truth) {
            failures.push(format!("{op:?}({x:e}, {y:e}) -> {got}"));
        }
    }
    assert!(failures.is_empty(), "{} of {n} samples escaped: {:?}", failures.len(), &failures[..failures.len().min(5)]);
}

#[test]
fn exact_integer_sum() {
    let s = &Interval::from_i64(1, P) + &Interval::from_i64(2, P);
    assert!(s.is_point());
    assert_eq!(s, Interval::from_i64(3, P));
}

#[test]
fn product_enumerates_sign_cases() {
    let r = &iv(1.0, 2.0) * &iv(-1.0, 1.0);
    assert_eq!(r, iv(-2.0, 2.0));
}

#[test]
fn one_third_is_tight() {
    let q = Interval::from_i64(1, P).div(&Interval::from_i64(3, P)).unwrap();
    let third = reference_value(RefOp::Div, 1.0, 3.0).unwrap();
    assert!(contains(&q, &third));
    assert!(!q.is_point());
    assert!(q.width_f64() <= 2f64.powi(-120));
}

#[test]
fn division_by_interval_through_zero_is_an_error() {
    assert_eq!(Interval::from_i64(1, P).div(&iv(-1.0, 1.0)), Err(Error::DivisionByZeroInterval));
}

#[test]
fn ln_of_e_contains_one() {
    let l = const_e(P).ln().unwrap();
    assert!(l.contains(&Interval::from_i64(1, P)));
}

#[test]
fn square_root_as_power() {
    let r = Interval::from_i64(4, P).pow(&Interval::from_ratio(1, 2, P)).unwrap();
    assert!(r.contains(&Interval::from_i64(2, P)));
}

#[test]
fn exp_of_ln_3e12_contains_3e12() {
    let l = Interval::dec("3e12", P).ln().unwrap();
    assert!(l.exp().contains(&Interval::dec("3e12", P)));
    let wide = Interval::dec_range("28.7296", "28.7297", P).exp();
    assert!(wide.contains(&Interval::dec("3e12", P)));
}

#[test]
fn domain_errors_for_nonpositive_arguments() {
    for f in [Interval::ln, Interval::sqrt] {
        assert!(matches!(f(&iv(-1.0, 1.0)), Err(Error::DomainError(_))));
    }
    assert!(matches!(Interval::from_i64(0, P).pow(&Interval::from_i64(2, P)), Err(Error::DomainError(_))));
}

#[test]
fn constants_are_tight() {
    let pi = const_pi(P);
    assert!(contains(&pi, &reference_pi().unwrap()));
    assert!(pi.width_f64() <= 2f64.powi(8 - P as i32));
    let e = const_e(P);
    assert!(contains(&e, &reference_e().unwrap()));
    assert!(e.width_f64() <= 2f64.powi(8 - P as i32));
    let pi2 = &pi * &pi;
    let rp = Interval::point_float(reference_pi().unwrap(), 320);
    let rp2 = &rp * &rp;
    assert!(pi2.contains(&rp2), "pi^2 = 9.8696...");
    // D1 = 1/pi^2 = 0.101321...
    assert!(pi2.recip().unwrap().contains(&rp2.recip().unwrap()));
    assert!(pi2.recip().unwrap().certainly_gt(&Interval::dec("0.101321", P)));
    assert!(pi2.recip().unwrap().certainly_lt(&Interval::dec("0.101322", P)));
}

#[test]
fn precision_is_validated() {
    assert!(Precision::new(52, 1).is_err());
    assert!(Precision::new(53, 0).is_err());
    let p = Precision::default();
    assert_eq!((p.bits, p.max_subdivisions), (128, 1_000_000));
}

#[test]
fn infinite_endpoints_follow_set_semantics() {
    let unb = Interval::from_i64(1, P).to_infinity();
    let r = &iv(0.0, 1.0) * &unb;
    assert_eq!(r.lo_f64(), 0.0);
    assert!(!r.is_finite());
    assert_eq!(unb.neg().exp().lo_f64(), 0.0);
}

fn unary(k: u8) -> fn(&Interval) -> zdb::Result<Interval> {
    match k % 4 {
        0 => |x| Ok(x.exp()),
        1 => Interval::ln,
        2 => Interval::sqrt,
        _ => |x| Ok(x.sqr()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn binary_ops_contain_the_reference(
        a in 1e-3f64..1e3, b in 1e-3f64..1e3, sa in any::<bool>(), sb in any::<bool>(), k in 0usize..5,
    ) {
        let (x, y) = (if sa { a } else { -a }, if sb { b } else { -b });
        let op = [RefOp::Add, RefOp::Sub, RefOp::Mul, RefOp::Div, RefOp::Pow][k];
        let x = if op == RefOp::Pow { a } else { x };
        let y = if op == RefOp::Pow { y.clamp(-8.0, 8.0) } else { y };
        let got = apply(op, &Interval::from_f64(x, P), &Interval::from_f64(y, P)).unwrap();
        prop_assert!(contains(&got, &reference_value(op, x, y).unwrap()));
    }

    #[test]
    fn inclusion_monotone_for_unary_ops(c in 0.01f64..50.0, w1 in 0.0f64..0.5, w2 in 0.0f64..0.5, k in 0u8..4) {
        let inner = iv(c, c * (1.0 + w1));
        let outer = iv(c * (1.0 - w2 / 2.0), c * (1.0 + w1) * (1.0 + w2));
        let f = unary(k);
        prop_assert!(f(&outer).unwrap().contains(&f(&inner).unwrap()));
    }

    #[test]
    fn subdividing_never_widens(lo in 0.1f64..20.0, w in 0.01f64..5.0, k in 0u8..4) {
        let x = iv(lo, lo + w);
        let (a, b) = x.bisect();
        let f = unary(k);
        let whole = f(&x).unwrap();
        prop_assert!(whole.contains(&f(&a).unwrap().hull(&f(&b).unwrap())));
    }

    #[test]
    fn results_are_deterministic(x in 0.01f64..100.0, y in -5.0f64..5.0) {
        let a = Interval::from_f64(x, P);
        let b = Interval::from_f64(y, P);
        let r1 = (a.pow(&b).unwrap(), a.ln().unwrap(), (&a * &b).exp());
        let r2 = std::thread::spawn(move || (a.pow(&b).unwrap(), a.ln().unwrap(), (&a * &b).exp())).join().unwrap();
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn hull_and_intersect_are_consistent(a in -100.0f64..100.0, b in -100.0f64..100.0, c in -100.0f64..100.0) {
        let x = iv(a.min(b), a.max(b));
        let y = iv(b.min(c), b.max(c));
        let h = x.hull(&y);
        prop_assert!(h.contains(&x) && h.contains(&y));
        let m = x.intersect(&y).expect("both contain b");
        prop_assert!(x.contains(&m) && y.contains(&m));
    }
}
