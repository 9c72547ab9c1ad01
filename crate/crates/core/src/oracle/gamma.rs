//! |Γ(σ+it)| from the complex Stirling series, in astro-float arithmetic.
//!
//! The argument is pushed right by k steps until |w| = |z+k| is large,
//! ln|Γ(w)| is summed with the explicit remainder bound
//! `|B_{2m+2}| sec^{2m+2}(θ/2) / ((2m+2)(2m+1)|w|^{2m+1})`, θ = arg w, and
//! the logs of |z+j| for j < k are subtracted. Rounding error is bounded
//! crudely by the number of operations times the size of the terms, at a
//! working precision 64 bits above the requested one.

use crate::error::{Error, Result};
use crate::interval::float::{Dir, Float};
use crate::interval::{Interval, Precision};
use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::{Mutex, OnceLock};

const RM: RoundingMode = RoundingMode::ToEven;

/// B_0, B_1, B_2, ... as exact rationals, extended on demand.
fn bernoulli(upto: usize) -> Vec<BigRational> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let mut b = CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()])).lock().unwrap();
    while b.len() <= upto {
        // Σ_{k=0}^{n} C(n+1, k) B_k = 0
        let n = b.len();
        let mut s = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            s += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-s / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b[..=upto].to_vec()
}

fn big(r: &BigRational, w: usize, cc: &mut Consts) -> BigFloat {
    let n = BigFloat::parse(&r.numer().to_string(), astro_float::Radix::Dec, w, RM, cc);
    let d = BigFloat::parse(&r.denom().to_string(), astro_float::Radix::Dec, w, RM, cc);
    n.div(&d, w, RM)
}

pub(crate) fn to_float(b: &BigFloat) -> Result<Float> {
    if b.is_zero() {
        return Ok(Float::zero());
    }
    let (words, _, sign, e, _) = b.as_raw_parts().ok_or_else(|| Error::DomainError("non-finite Gamma value".into()))?;
    let mut mag = BigUint::zero();
    for &wd in words.iter().rev() {
        mag = (mag << 64u32) + BigUint::from(wd);
    }
    Ok(Float::from_parts(sign == Sign::Neg, mag, e as i64 - 64 * words.len() as i64))
}

fn f64_of(b: &BigFloat) -> f64 {
    to_float(b).map(|f| f.to_f64()).unwrap_or(f64::INFINITY)
}

/// ln of the standard upper bound |B_{2n}| < 2 (2n)! / ((2π)^{2n} (1 − 2^{1−2n})).
fn ln_bernoulli_bound(n: usize) -> f64 {
    let two_n = 2 * n;
    let ln_fact: f64 = (1..=two_n).map(|i| (i as f64).ln()).sum();
    2f64.ln() + ln_fact - two_n as f64 * (2.0 * std::f64::consts::PI).ln() - (1.0 - 2f64.powi(1 - two_n as i32)).ln()
}

/// Enclosure of |Γ(σ+it)| for |t| ≤ 1000, at `prec.bits` bits.
pub fn gamma_reference(sigma: f64, t: f64, prec: Precision) -> Result<Interval> {
    if !sigma.is_finite() || !t.is_finite() {
        return Err(Error::DomainError("Gamma reference needs finite input".into()));
    }
    if t.abs() > 1000.0 {
        return Err(Error::DomainError("Gamma reference supports |t| ≤ 1000".into()));
    }
    if t == 0.0 && sigma <= 0.0 && sigma.fract() == 0.0 {
        return Err(Error::PoleError(format!("Γ has a pole at {sigma}")));
    }
    let bits = prec.bits;
    let w = bits as usize + 64;
    let mut cc = Consts::new().map_err(|e| Error::DomainError(format!("astro-float: {e:?}")))?;

    let radius = (bits as f64).max(40.0);
    let k = if sigma < radius { (radius - sigma).ceil() as u64 } else { 0 };
    let sig = BigFloat::from_f64(sigma, w);
    let tt = BigFloat::from_f64(t, w);
    let t2 = tt.mul(&tt, w, RM);
    let half = BigFloat::from_f64(0.5, w);

    // Σ_{j<k} ln|z+j|, with a running total of term sizes for the error budget
    let mut size = 0.0f64;
    let mut shift_logs = BigFloat::from_u64(0, w);
    for j in 0..k {
        let re = sig.add(&BigFloat::from_u64(j, w), w, RM);
        let m2 = re.mul(&re, w, RM).add(&t2, w, RM);
        let l = m2.ln(w, RM, &mut cc).mul(&half, w, RM);
        size += f64_of(&l).abs();
        shift_logs = shift_logs.add(&l, w, RM);
    }

    let u = sig.add(&BigFloat::from_u64(k, w), w, RM);
    let abs2 = u.mul(&u, w, RM).add(&t2, w, RM);
    let ln_abs = abs2.ln(w, RM, &mut cc).mul(&half, w, RM);
    let abs_w = abs2.sqrt(w, RM);
    let theta = tt.div(&u, w, RM).atan(w, RM, &mut cc);

    // Re[(w − 1/2) ln w − w] + ln(2π)/2
    let two_pi = cc.pi(w, RM).mul(&BigFloat::from_u64(2, w), w, RM);
    let a = u.sub(&half, w, RM).mul(&ln_abs, w, RM);
    let b = tt.mul(&theta, w, RM);
    let c = two_pi.ln(w, RM, &mut cc).mul(&half, w, RM);
    size += f64_of(&a).abs() + f64_of(&b).abs() + f64_of(&u).abs() + f64_of(&c).abs();
    let mut total = a.sub(&b, w, RM).sub(&u, w, RM).add(&c, w, RM);

    // number of series terms: stop once the remainder is far below 2^-bits
    let ln_abs_f = f64_of(&ln_abs);
    let theta_f = f64_of(&theta);
    let ln_sec_half = -(theta_f / 2.0).cos().ln();
    let target = -((bits as f64) + 40.0) * 2f64.ln();
    let ln_rem = |m: usize| {
        let n = m + 1;
        ln_bernoulli_bound(n) - ((2 * n) as f64 * (2 * n - 1) as f64).ln() - (2 * n - 1) as f64 * ln_abs_f + (2 * n) as f64 * ln_sec_half
    };
    let mut m = 1;
    while ln_rem(m) > target && m < 400 {
        m += 1;
    }
    let bern = bernoulli(2 * m);
    let inv_abs = BigFloat::from_u64(1, w).div(&abs_w, w, RM);
    let inv_abs2 = inv_abs.mul(&inv_abs, w, RM);
    let mut pw = inv_abs.clone();
    for j in 1..=m {
        let cj = &bern[2 * j] / BigRational::from_integer(BigInt::from((2 * j) * (2 * j - 1)));
        let ang = theta.mul(&BigFloat::from_u64((2 * j - 1) as u64, w), w, RM);
        let term = big(&cj, w, &mut cc).mul(&pw, w, RM).mul(&ang.cos(w, RM, &mut cc), w, RM);
        size += f64_of(&term).abs();
        total = total.add(&term, w, RM);
        pw = pw.mul(&inv_abs2, w, RM);
    }
    total = total.sub(&shift_logs, w, RM);

    let ops = (k as f64) + 6.0 * m as f64 + 40.0;
    let round_err = ops * size.max(1.0) * 2f64.powi(4 - w as i32).max(f64::MIN_POSITIVE);
    let err = if round_err > 0.0 { round_err } else { 2f64.powi(-1000) } + (ln_rem(m) + 1.0).exp();
    // f64 error terms cannot go below ~2^-1074; at very high precision they
    // would be lost, so represent them exactly as BigFloats
    let err_b = BigFloat::from_f64(err, w).add(&BigFloat::from_f64(2f64.powi(-((bits as i32) + 60).min(1000)), w), w, RM);

    let lo_arg = total.sub(&err_b, w, RoundingMode::Down);
    let hi_arg = total.add(&err_b, w, RoundingMode::Up);
    let lo = lo_arg.exp(w, RoundingMode::Down, &mut cc);
    let hi = hi_arg.exp(w, RoundingMode::Up, &mut cc);
    // one more ulp-scale slack in case the library's exp is only faithful
    let slack = BigFloat::from_f64(2f64.powi(8 - w as i32), w);
    let one = BigFloat::from_u64(1, w);
    let lo = lo.mul(&one.sub(&slack, w, RoundingMode::Down), w, RoundingMode::Down);
    let hi = hi.mul(&one.add(&slack, w, RoundingMode::Up), w, RoundingMode::Up);

    let lo = to_float(&lo)?.round(bits, Dir::Down);
    let hi = to_float(&hi)?.round(bits, Dir::Up);
    if lo.is_neg() || hi.to_f64().is_nan() {
        return Err(Error::DomainError("Gamma reference lost accuracy".into()));
    }
    Interval::from_floats(lo, hi, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::const_pi;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn bernoulli_numbers() {
        let b = bernoulli(12);
        assert_eq!(b[2], BigRational::new(1.into(), 6.into()));
        assert_eq!(b[4], BigRational::new((-1).into(), 30.into()));
        assert_eq!(b[12], BigRational::new((-691).into(), 2730.into()));
        assert!(b[3].is_zero());
    }

    #[test]
    fn known_values() {
        let g = gamma_reference(1.0, 0.0, p()).unwrap();
        assert!(g.contains(&Interval::from_i64(1, 128)));
        assert!(g.width_f64() < 2f64.powi(16 - 128));
        let root_pi = const_pi(160).sqrt().unwrap();
        let h = gamma_reference(0.5, 0.0, p()).unwrap();
        assert!(h.intersect(&root_pi).is_some());
        assert!(h.width_f64() < 2f64.powi(16 - 128));
        // |Γ(it)|² = π / (t sinh πt)
        let t = 3.0f64;
        let g = gamma_reference(0.0, t, p()).unwrap();
        let expect = (std::f64::consts::PI / (t * (std::f64::consts::PI * t).sinh())).sqrt();
        assert!((g.mid_f64() / expect - 1.0).abs() < 1e-14);
    }

    #[test]
    fn poles_and_range() {
        assert!(matches!(gamma_reference(0.0, 0.0, p()), Err(Error::PoleError(_))));
        assert!(matches!(gamma_reference(-3.0, 0.0, p()), Err(Error::PoleError(_))));
        assert!(gamma_reference(-2.5, 0.0, p()).is_ok());
        assert!(gamma_reference(0.5, 2000.0, p()).is_err());
    }

    #[test]
    fn functional_equation_overlaps() {
        // |Γ(z+1)| = |z| |Γ(z)|; σ values chosen so that σ + 1 is exact in f64
        for &(s, t) in &[(0.25, 1.7), (-0.375, 12.0), (2.5, 40.0), (0.9375, 0.01)] {
            let g0 = gamma_reference(s, t, p()).unwrap();
            let g1 = gamma_reference(s + 1.0, t, p()).unwrap();
            let z = (&Interval::from_f64(s, 128).sqr() + &Interval::from_f64(t, 128).sqr()).sqrt().unwrap();
            assert!((&z * &g0).intersect(&g1).is_some(), "at ({s}, {t})");
        }
    }
}
