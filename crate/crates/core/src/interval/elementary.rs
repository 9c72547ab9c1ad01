//! Certified elementary functions: argument reduction, a truncated series
//! and an explicit bound on the truncation error, evaluated with interval
//! operations at a few guard bits above the target precision.

use super::float::{Dir, Float};
use super::{Ext, Interval, MIN_BITS};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

const GUARD: u32 = 24;
/// Beyond this magnitude exp saturates to a bound that is still valid
/// (e^(2^52) as a lower bound, e^(-2^52) as an upper bound).
const EXP_LIMIT_LOG2: i64 = 52;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Const {
    Pi,
    Ln2,
    Ln10,
    E,
}

fn cache() -> &'static Mutex<HashMap<(Const, u32), Interval>> {
    static C: OnceLock<Mutex<HashMap<(Const, u32), Interval>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(kind: Const, wp: u32, f: impl FnOnce(u32) -> Interval) -> Interval {
    if let Some(v) = cache().lock().unwrap().get(&(kind, wp)) {
        return v.clone();
    }
    // computed outside the lock; a concurrent duplicate computes the same bits
    let v = f(wp);
    cache().lock().unwrap().insert((kind, wp), v.clone());
    v
}

fn err_ball(e: Float, prec: u32) -> Interval {
    Interval::raw(Ext::Fin(e.neg()), Ext::Fin(e), prec)
}

/// Σ_{j≥0} x^(2j+1)/(2j+1) for |x| ≤ 1/2, with the tail bound
/// |x|^(2n+3)/((2n+3)(1−x²)).
fn atanh_series(x: &Interval, wp: u32) -> Interval {
    let zmax = x.abs().hi_f64();
    if zmax == 0.0 {
        return Interval::from_i64(0, wp);
    }
    let per = -zmax.log2();
    let n = (((wp as f64 + 16.0) / per - 3.0) / 2.0).ceil().max(0.0) as i64;
    let x2 = x.sqr();
    let mut pow = x.clone();
    let mut sum = x.clone();
    for j in 1..=n {
        pow = &pow * &x2;
        sum = &sum + &pow.div(&Interval::from_i64(2 * j + 1, wp)).unwrap();
    }
    let xa = x.abs().upper();
    let k = (2 * n + 3) as i32;
    let one = Interval::from_i64(1, wp);
    let rem = xa.powi(k).unwrap().div(&(Interval::from_i64(k as i64, wp) * (&one - &x2.upper()))).unwrap();
    let e = rem.hi().fin().unwrap().clone();
    &sum + &err_ball(e, wp)
}

/// Σ (−1)^j /((2j+1) k^(2j+1)) with the alternating tail bound.
fn atan_inv(k: i64, wp: u32) -> Interval {
    let kk = Interval::from_i64(k, wp);
    let k2 = &kk * &kk;
    let per = 2.0 * (k as f64).log2();
    let n = ((wp as f64 + 16.0) / per).ceil() as i64 + 1;
    let mut pow = kk.recip().unwrap();
    let mut sum = pow.clone();
    for j in 1..=n {
        pow = pow.div(&k2).unwrap();
        let t = pow.div(&Interval::from_i64(2 * j + 1, wp)).unwrap();
        sum = if j % 2 == 1 { &sum - &t } else { &sum + &t };
    }
    let next = pow.div(&k2).unwrap().div(&Interval::from_i64(2 * n + 3, wp)).unwrap();
    &sum + &err_ball(next.hi().fin().unwrap().clone(), wp)
}

/// π enclosure with width at most a few ulps at `prec` bits.
pub fn const_pi(prec: u32) -> Interval {
    let prec = prec.max(MIN_BITS);
    cached(Const::Pi, prec + 32, |wp| {
        let a = atan_inv(5, wp);
        let b = atan_inv(239, wp);
        &(&a * &Interval::from_i64(16, wp)) - &(&b * &Interval::from_i64(4, wp))
    })
    .with_prec(prec)
}

pub fn const_ln2(prec: u32) -> Interval {
    let prec = prec.max(MIN_BITS);
    cached(Const::Ln2, prec + 32, |wp| atanh_series(&Interval::from_ratio(1, 3, wp + 8), wp + 8).mul_pow2(1).with_prec(wp))
        .with_prec(prec)
}

pub fn const_ln10(prec: u32) -> Interval {
    let prec = prec.max(MIN_BITS);
    cached(Const::Ln10, prec + 32, |wp| {
        // ln 10 = 3 ln 2 + 2 atanh(1/9)
        let l2 = const_ln2(wp + 8);
        let r = atanh_series(&Interval::from_ratio(1, 9, wp + 8), wp + 8);
        (&(&l2 * &Interval::from_i64(3, wp + 8)) + &r.mul_pow2(1)).with_prec(wp)
    })
    .with_prec(prec)
}

pub fn const_e(prec: u32) -> Interval {
    let prec = prec.max(MIN_BITS);
    cached(Const::E, prec + 32, |wp| Interval::from_i64(1, wp).exp()).with_prec(prec)
}

/// Enclosure of e^x for a finite point x, at working precision wp.
fn exp_point(x: &Float, wp: u32) -> Interval {
    if x.is_zero() {
        return Interval::from_i64(1, wp);
    }
    let ip = wp + GUARD;
    let xf = x.to_f64();
    let k = (xf / std::f64::consts::LN_2).round() as i64;
    let ln2 = const_ln2(ip + 64);
    let r = (&Interval::point_float(x.clone(), ip + 64) - &(&ln2 * &Interval::from_i64(k, ip + 64))).with_prec(ip);
    let s = 12;
    let r = r.mul_pow2(-s);
    let rmax = r.abs().hi_f64().max(1e-300);
    // smallest n with 2 rmax^(n+1)/(n+1)! below 2^-(ip+8)
    let mut n = 1i64;
    let mut lg = rmax.log2();
    let mut lfact = 0.0f64;
    loop {
        lfact += ((n + 1) as f64).log2();
        let bound = 1.0 + (n + 1) as f64 * lg - lfact;
        if bound < -(ip as f64 + 8.0) {
            break;
        }
        n += 1;
        if n > 10_000 {
            lg = -1.0;
        }
    }
    let one = Interval::from_i64(1, ip);
    let mut sum = one.clone();
    for j in (1..=n).rev() {
        sum = &one + &(&r * &sum).div(&Interval::from_i64(j, ip)).unwrap();
    }
    let ra = r.abs().upper();
    let mut fact = Interval::from_i64(1, ip);
    for j in 2..=(n + 1) {
        fact = &fact * &Interval::from_i64(j, ip);
    }
    let rem = ra.powi((n + 1) as i32).unwrap().mul_pow2(1).div(&fact).unwrap();
    let mut v = &sum + &err_ball(rem.hi().fin().unwrap().clone(), ip);
    for _ in 0..s {
        v = v.sqr();
    }
    v.mul_pow2(k).with_prec(wp)
}

/// Enclosure of ln x for a finite point x > 0.
fn ln_point(x: &Float, wp: u32) -> Interval {
    let ip = wp + GUARD;
    let mut e = x.top();
    let mut m = x.mul_pow2(-e);
    if m >= Float::from_parts(false, 3u32.into(), -1) {
        m = m.mul_pow2(-1);
        e += 1;
    }
    // ln m = 2^k ln m^(1/2^k) shrinks the series argument by 2^k
    let k = 6;
    let mut mi = Interval::point_float(m, ip);
    for _ in 0..k {
        mi = mi.sqrt().unwrap();
    }
    let one = Interval::from_i64(1, ip);
    let z = (&mi - &one).div(&(&mi + &one)).unwrap();
    let at = atanh_series(&z, ip).mul_pow2(1 + k);
    let v = if e == 0 {
        at
    } else {
        let extra = 64 - (e.unsigned_abs().leading_zeros()).min(64);
        let ln2 = const_ln2(ip + extra + 8);
        &(&ln2 * &Interval::from_i64(e, ip + extra + 8)) + &at
    };
    v.with_prec(wp)
}

fn exp_lower(x: &Ext, wp: u32) -> Ext {
    match x {
        Ext::NegInf => Ext::Fin(Float::zero()),
        Ext::PosInf => exp_point(&Float::one().mul_pow2(EXP_LIMIT_LOG2), wp).lo().clone(),
        Ext::Fin(f) => {
            if f.top() >= EXP_LIMIT_LOG2 {
                if f.is_neg() {
                    Ext::Fin(Float::zero())
                } else {
                    exp_point(&Float::one().mul_pow2(EXP_LIMIT_LOG2), wp).lo().clone()
                }
            } else {
                exp_point(f, wp).lo().clone()
            }
        }
    }
}

fn exp_upper(x: &Ext, wp: u32) -> Ext {
    match x {
        Ext::NegInf => Ext::Fin(Float::zero()),
        Ext::PosInf => Ext::PosInf,
        Ext::Fin(f) => {
            if f.top() >= EXP_LIMIT_LOG2 {
                if f.is_neg() {
                    exp_point(&Float::one().mul_pow2(EXP_LIMIT_LOG2).neg(), wp).hi().clone()
                } else {
                    Ext::PosInf
                }
            } else {
                exp_point(f, wp).hi().clone()
            }
        }
    }
}

fn bernoulli(n: usize) -> BigRational {
    static B: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let cell = B.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut b = cell.lock().unwrap();
    while b.len() <= n {
        let m = b.len();
        // B_m = −1/(m+1) Σ_{k<m} C(m+1, k) B_k
        let mut s = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            s += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b[n].clone()
}

fn rational(q: &BigRational, prec: u32) -> Interval {
    let n = Interval::from_bigint(q.numer(), prec + 8);
    let d = Interval::from_bigint(q.denom(), prec + 8);
    n.div(&d).unwrap().with_prec(prec)
}

/// Real log-Gamma for w ≥ 8 by the Stirling series with the remainder
/// bounded by the first omitted term.
fn ln_gamma_large(w: &Interval, wp: u32) -> Interval {
    let wl = w.lo_f64();
    let target = -(wp as f64 + 10.0);
    let mut m = 1usize;
    loop {
        let k = 2 * m + 2;
        // log2 |B_k| ≈ log2(2 k!/(2π)^k)
        let lb = 1.0 + (1..=k).map(|i| (i as f64).log2()).sum::<f64>() - k as f64 * (2.0 * std::f64::consts::PI).log2();
        let rem = lb - ((k as f64) * (k as f64 - 1.0)).log2() - (k as f64 - 1.0) * wl.log2();
        if rem < target || m > 400 {
            break;
        }
        m += 1;
    }
    let half = Interval::from_ratio(1, 2, wp);
    let two_pi = const_pi(wp).mul_pow2(1);
    let lw = w.ln().unwrap();
    let mut s = &(&(w - &half) * &lw) - w;
    s = &s + &(&half * &two_pi.ln().unwrap());
    let w2 = w.sqr();
    let mut wpow = w.clone();
    for k in 1..=m {
        let c = rational(&bernoulli(2 * k), wp).div(&Interval::from_i64((2 * k * (2 * k - 1)) as i64, wp)).unwrap();
        s = &s + &c.div(&wpow).unwrap();
        wpow = &wpow * &w2;
    }
    let k = 2 * m + 2;
    let bk = rational(&bernoulli(k).abs(), wp);
    let wlo = w.lower();
    let rem = bk.div(&(Interval::from_i64((k * (k - 1)) as i64, wp) * wlo.powi((k - 1) as i32).unwrap())).unwrap();
    &s + &err_ball(rem.hi().fin().unwrap().clone(), wp)
}

/// Γ at a point-like positive interval, via upward recursion.
fn gamma_narrow(x: &Interval, wp: u32) -> Interval {
    let target = (wp as f64 / 6.0 + 8.0).ceil();
    let n = (target - x.lo_f64()).ceil().max(0.0) as i64;
    let mut w = x.clone();
    let mut prod = Interval::from_i64(1, wp);
    for _ in 0..n {
        prod = &prod * &w;
        w = &w + &Interval::from_i64(1, wp);
    }
    ln_gamma_large(&w, wp).exp().div(&prod).unwrap()
}

impl Interval {
    pub fn exp(&self) -> Interval {
        let wp = self.prec + 8;
        Interval::raw(exp_lower(self.lo(), wp), exp_upper(self.hi(), wp), wp).with_prec(self.prec)
    }

    pub fn ln(&self) -> Result<Interval> {
        let zero = Ext::Fin(Float::zero());
        if self.lo() <= &zero {
            return Err(Error::DomainError("ln needs a positive argument".into()));
        }
        let wp = self.prec + 8;
        let lo = ln_point(self.lo().fin().unwrap(), wp).lo().clone();
        let hi = match self.hi() {
            Ext::Fin(f) => ln_point(f, wp).hi().clone(),
            _ => Ext::PosInf,
        };
        Ok(Interval::raw(lo, hi, wp).with_prec(self.prec))
    }

    pub fn sqrt(&self) -> Result<Interval> {
        if self.lo() < &Ext::Fin(Float::zero()) {
            return Err(Error::DomainError("sqrt needs a nonnegative argument".into()));
        }
        let p = self.prec;
        let f = |e: &Ext, d: Dir| match e {
            Ext::Fin(x) => Ext::Fin(x.sqrt(p, d)),
            o => o.clone(),
        };
        Ok(Interval::raw(f(self.lo(), Dir::Down), f(self.hi(), Dir::Up), p))
    }

    /// `a^b = exp(b ln a)`; exact integer exponents use repeated products.
    pub fn pow(&self, b: &Interval) -> Result<Interval> {
        if self.lo() <= &Ext::Fin(Float::zero()) {
            return Err(Error::DomainError("pow needs a positive base".into()));
        }
        if b.is_point() {
            if let Some(k) = b.lo().fin().and_then(|f| f.to_i64_exact()) {
                if k.abs() <= 64 {
                    return self.powi(k as i32);
                }
            }
        }
        let p = self.prec.max(b.prec());
        Ok((b.with_prec(p + 8) * self.with_prec(p + 8).ln()?).exp().with_prec(p))
    }

    /// `a^(n/d)` for an exact rational exponent.
    pub fn pow_ratio(&self, n: i64, d: i64) -> Result<Interval> {
        if d == 2 && n == 1 {
            return self.sqrt();
        }
        self.pow(&Interval::from_ratio(n, d, self.prec + 8))
    }

    /// asinh(x) = ln(x + √(x²+1)) for x ≥ 0, evaluated endpoint-wise.
    pub fn asinh(&self) -> Result<Interval> {
        if !self.is_nonneg() {
            return Err(Error::DomainError("asinh implemented for x ≥ 0".into()));
        }
        let p = self.prec;
        let one = Interval::from_i64(1, p + 8);
        let at = |e: &Ext| -> Result<Interval> {
            let x = Interval::raw(e.clone(), e.clone(), p + 8);
            (&x + &(&x.sqr() + &one).sqrt()?).ln()
        };
        let lo = at(self.lo())?.lo().clone();
        let hi = match self.hi() {
            Ext::PosInf => Ext::PosInf,
            h => at(h)?.hi().clone(),
        };
        Ok(Interval::raw(lo, hi, p + 8).with_prec(p))
    }

    /// Γ(x) for x > 0, using monotonicity on either side of the minimum at
    /// x₀ = 1.46163…, where Γ(x₀) = 0.885603….
    pub fn gamma(&self) -> Result<Interval> {
        let zero = Ext::Fin(Float::zero());
        if self.lo() <= &zero {
            return Err(Error::DomainError("gamma implemented for x > 0".into()));
        }
        let p = self.prec;
        let wp = p + 16;
        let at = |e: &Ext| match e {
            Ext::Fin(x) => gamma_narrow(&Interval::point_float(x.clone(), wp), wp),
            _ => Interval::raw(Ext::PosInf, Ext::PosInf, wp),
        };
        let left = Interval::dec("1.4616", wp);
        let right = Interval::dec("1.4617", wp);
        let r = if self.certainly_le(&left) {
            Interval::raw(at(self.hi()).lo().clone(), at(self.lo()).hi().clone(), wp)
        } else if self.certainly_ge(&right) {
            let hi = match self.hi() {
                Ext::PosInf => Ext::PosInf,
                h => at(h).hi().clone(),
            };
            Interval::raw(at(self.lo()).lo().clone(), hi, wp)
        } else {
            let a = at(self.lo());
            let hi = match self.hi() {
                Ext::PosInf => Ext::PosInf,
                h => at(h).hi().clone().max(a.hi().clone()),
            };
            Interval::raw(Interval::dec("0.8856", wp).lo().clone(), hi, wp)
        };
        Ok(r.with_prec(p))
    }

    /// ψ(ℓ) = ℓ^(−a) (ln ℓ)^b for ℓ > 1 and a, b > 0, which increases up to
    /// ℓ = e^(b/a) and decreases after; ψ(∞) = 0.
    pub fn log_decay(&self, a: &Interval, b: &Interval) -> Result<Interval> {
        if self.lo() <= &Ext::Fin(Float::one()) {
            return Err(Error::DomainError("log_decay needs ℓ > 1".into()));
        }
        let p = self.prec;
        let at = |e: &Ext| -> Result<Interval> {
            match e {
                Ext::PosInf => Ok(Interval::from_i64(0, p)),
                e => {
                    let l = Interval::raw(e.clone(), e.clone(), p);
                    let ll = l.ln()?;
                    Ok((&(-a) * &ll + b * &ll.ln()?).exp())
                }
            }
        };
        let peak = b.div(a)?.exp();
        let vlo = at(self.lo())?;
        let vhi = at(self.hi())?;
        if self.certainly_le(&peak) {
            Ok(Interval::raw(vlo.lo().clone(), vhi.hi().clone(), p))
        } else if self.certainly_ge(&peak) {
            Ok(Interval::raw(vhi.lo().clone(), vlo.hi().clone(), p))
        } else {
            // interior maximum (b/(a e))^b
            let top = (b * &(b.div(a)?.ln()? - Interval::from_i64(1, p))).exp();
            let lo = vlo.lo().clone().min(vhi.lo().clone());
            Ok(Interval::raw(lo, top.hi().clone().max(vlo.hi().clone()).max(vhi.hi().clone()), p))
        }
    }
}
