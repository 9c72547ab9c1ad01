//! Outward-rounded interval arithmetic over the extended reals.
//!
//! An [`Interval`] carries its own working precision in bits. Binary
//! operations round to the larger precision of their operands, so the
//! precision chosen when constants are created flows through a whole
//! computation without any global state.
//!
//! Infinite endpoints follow set semantics: `[0, 1] · [1, ∞]` is `[0, ∞]`
//! because every member of either factor is a finite real.

mod decimal;
mod elementary;
pub mod float;

use crate::error::{Error, Result};
pub use decimal::{ext_to_decimal, DEFAULT_DIGITS};
pub use elementary::{const_e, const_ln2, const_pi};
use float::{decimal_to_float, parse_decimal, Dir, Float};
use num_bigint::BigInt;
use std::cmp::Ordering;
use std::fmt;

/// Default working precision in bits.
pub const DEFAULT_BITS: u32 = 128;
/// Smallest accepted precision.
pub const MIN_BITS: u32 = 53;

/// Precision settings passed explicitly through every certified computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision {
    pub bits: u32,
    pub max_subdivisions: u64,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { bits: DEFAULT_BITS, max_subdivisions: 1_000_000 }
    }
}

impl Precision {
    pub fn new(bits: u32, max_subdivisions: u64) -> Result<Precision> {
        if bits < MIN_BITS {
            return Err(Error::InvalidPrecision(format!("bits must be at least {MIN_BITS}, got {bits}")));
        }
        if max_subdivisions < 1 {
            return Err(Error::InvalidPrecision("max_subdivisions must be at least 1".into()));
        }
        Ok(Precision { bits, max_subdivisions })
    }

    pub fn with_bits(bits: u32) -> Result<Precision> {
        Precision::new(bits, Precision::default().max_subdivisions)
    }
}

/// An extended real endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ext {
    NegInf,
    Fin(Float),
    PosInf,
}

impl Ext {
    pub fn is_finite(&self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    pub fn fin(&self) -> Option<&Float> {
        match self {
            Ext::Fin(f) => Some(f),
            _ => None,
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Ext::Fin(f) if f.is_zero())
    }

    fn sign(&self) -> i8 {
        match self {
            Ext::NegInf => -1,
            Ext::PosInf => 1,
            Ext::Fin(f) if f.is_zero() => 0,
            Ext::Fin(f) if f.is_neg() => -1,
            Ext::Fin(_) => 1,
        }
    }

    fn inf_of_sign(s: i8) -> Ext {
        if s < 0 {
            Ext::NegInf
        } else {
            Ext::PosInf
        }
    }

    pub fn neg(&self) -> Ext {
        match self {
            Ext::NegInf => Ext::PosInf,
            Ext::PosInf => Ext::NegInf,
            Ext::Fin(f) => Ext::Fin(f.neg()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Ext::NegInf => f64::NEG_INFINITY,
            Ext::PosInf => f64::INFINITY,
            Ext::Fin(f) => f.to_f64(),
        }
    }

    fn add(&self, o: &Ext, prec: u32, dir: Dir) -> Ext {
        match (self, o) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a.add(b, prec, dir)),
            (Ext::NegInf, Ext::PosInf) | (Ext::PosInf, Ext::NegInf) => {
                if dir == Dir::Down {
                    Ext::NegInf
                } else {
                    Ext::PosInf
                }
            }
            (Ext::NegInf, _) | (_, Ext::NegInf) => Ext::NegInf,
            _ => Ext::PosInf,
        }
    }

    fn mul(&self, o: &Ext, prec: u32, dir: Dir) -> Ext {
        if self.is_zero() || o.is_zero() {
            return Ext::Fin(Float::zero());
        }
        match (self, o) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a.mul(b, prec, dir)),
            _ => Ext::inf_of_sign(self.sign() * o.sign()),
        }
    }

    /// Quotient candidate for set-based division; the divisor never
    /// contains zero, so `∞/∞` stands for the whole open half-line and
    /// resolves to `0` or `∞` depending on the requested bound.
    fn div(&self, o: &Ext, prec: u32, dir: Dir) -> Ext {
        if self.is_zero() {
            return Ext::Fin(Float::zero());
        }
        let s = self.sign() * o.sign();
        match (self, o) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a.div(b, prec, dir)),
            (Ext::Fin(_), _) => Ext::Fin(Float::zero()),
            (_, Ext::Fin(_)) => Ext::inf_of_sign(s),
            _ => match (s > 0, dir) {
                (true, Dir::Down) | (false, Dir::Up) => Ext::Fin(Float::zero()),
                (true, Dir::Up) => Ext::PosInf,
                (false, Dir::Down) => Ext::NegInf,
            },
        }
    }

    fn round(&self, prec: u32, dir: Dir) -> Ext {
        match self {
            Ext::Fin(f) => Ext::Fin(f.round(prec, dir)),
            e => e.clone(),
        }
    }
}

impl Ord for Ext {
    fn cmp(&self, o: &Ext) -> Ordering {
        match (self, o) {
            (Ext::NegInf, Ext::NegInf) | (Ext::PosInf, Ext::PosInf) => Ordering::Equal,
            (Ext::NegInf, _) | (_, Ext::PosInf) => Ordering::Less,
            (_, Ext::NegInf) | (Ext::PosInf, _) => Ordering::Greater,
            (Ext::Fin(a), Ext::Fin(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Ext {
    fn partial_cmp(&self, o: &Ext) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A closed set of reals `[lo, hi]` whose endpoints may be infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Ext,
    hi: Ext,
    prec: u32,
}

impl Interval {
    pub fn new(lo: Ext, hi: Ext, prec: u32) -> Result<Interval> {
        if lo == Ext::PosInf || hi == Ext::NegInf || lo > hi {
            return Err(Error::DomainError("interval endpoints out of order".into()));
        }
        let prec = prec.max(MIN_BITS);
        Ok(Interval { lo: lo.round(prec, Dir::Down), hi: hi.round(prec, Dir::Up), prec })
    }

    pub(crate) fn raw(lo: Ext, hi: Ext, prec: u32) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi, prec }
    }

    pub fn from_floats(lo: Float, hi: Float, prec: u32) -> Result<Interval> {
        Interval::new(Ext::Fin(lo), Ext::Fin(hi), prec)
    }

    pub fn point_float(x: Float, prec: u32) -> Interval {
        let prec = prec.max(MIN_BITS);
        Interval { lo: Ext::Fin(x.round(prec, Dir::Down)), hi: Ext::Fin(x.round(prec, Dir::Up)), prec }
    }

    /// Enclosure of an f64 value (exact when it fits in `prec` bits).
    pub fn from_f64(v: f64, prec: u32) -> Interval {
        Interval::point_float(Float::from_f64(v), prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Interval {
        Interval::point_float(Float::from_i64(v), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Interval {
        Interval::point_float(Float::from_bigint(v), prec)
    }

    /// Enclosure of `num/den`.
    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Interval {
        assert!(den != 0, "zero denominator");
        let (n, d) = if den < 0 { (-(num as i128), -(den as i128)) } else { (num as i128, den as i128) };
        let n = Float::from_bigint(&BigInt::from(n));
        let d = Float::from_bigint(&BigInt::from(d));
        let prec = prec.max(MIN_BITS);
        Interval { lo: Ext::Fin(n.div(&d, prec, Dir::Down)), hi: Ext::Fin(n.div(&d, prec, Dir::Up)), prec }
    }

    /// Enclosure of a decimal literal such as `"70.6995"` or `"1.01e12"`.
    pub fn from_decimal(s: &str, prec: u32) -> Result<Interval> {
        let (m, e) = parse_decimal(s).ok_or_else(|| Error::Parse(format!("not a decimal number: {s:?}")))?;
        let prec = prec.max(MIN_BITS);
        Ok(Interval {
            lo: Ext::Fin(decimal_to_float(&m, e, prec, Dir::Down)),
            hi: Ext::Fin(decimal_to_float(&m, e, prec, Dir::Up)),
            prec,
        })
    }

    /// Decimal literal that is known to be well formed.
    pub fn dec(s: &str, prec: u32) -> Interval {
        Interval::from_decimal(s, prec).expect("malformed decimal constant")
    }

    /// Hull of two decimal literals.
    pub fn dec_range(lo: &str, hi: &str, prec: u32) -> Interval {
        Interval::dec(lo, prec).hull(&Interval::dec(hi, prec))
    }

    pub fn entire(prec: u32) -> Interval {
        Interval { lo: Ext::NegInf, hi: Ext::PosInf, prec: prec.max(MIN_BITS) }
    }

    /// `[x.lo, ∞]`.
    pub fn to_infinity(&self) -> Interval {
        Interval { lo: self.lo.clone(), hi: Ext::PosInf, prec: self.prec }
    }

    /// `[0, x.hi]` for nonnegative x.
    pub fn from_zero(&self) -> Interval {
        let zero = Ext::Fin(Float::zero());
        let lo = if self.lo < zero { self.lo.clone() } else { zero };
        Interval { lo, hi: self.hi.clone(), prec: self.prec }
    }

    pub fn lo(&self) -> &Ext {
        &self.lo
    }

    pub fn hi(&self) -> &Ext {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64()
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64()
    }

    /// Approximate midpoint for display and heuristics.
    pub fn mid_f64(&self) -> f64 {
        match (&self.lo, &self.hi) {
            (Ext::Fin(a), Ext::Fin(b)) => (a.to_f64() + b.to_f64()) / 2.0,
            (Ext::NegInf, Ext::PosInf) => 0.0,
            (Ext::NegInf, h) => h.to_f64(),
            (l, _) => l.to_f64(),
        }
    }

    pub fn width_f64(&self) -> f64 {
        match (&self.lo, &self.hi) {
            (Ext::Fin(a), Ext::Fin(b)) => b.sub(a, 64, Dir::Up).to_f64(),
            _ => f64::INFINITY,
        }
    }

    /// Exact width as a float rounded up; `None` if unbounded.
    pub fn width(&self) -> Option<Float> {
        match (&self.lo, &self.hi) {
            (Ext::Fin(a), Ext::Fin(b)) => Some(b.sub(a, self.prec + 8, Dir::Up)),
            _ => None,
        }
    }

    pub fn with_prec(&self, bits: u32) -> Interval {
        let bits = bits.max(MIN_BITS);
        Interval { lo: self.lo.round(bits, Dir::Down), hi: self.hi.round(bits, Dir::Up), prec: bits }
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_float(&self, x: &Float) -> bool {
        let e = Ext::Fin(x.clone());
        self.lo <= e && e <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains_float(&Float::zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo > Ext::Fin(Float::zero())
    }

    pub fn is_nonneg(&self) -> bool {
        self.lo >= Ext::Fin(Float::zero())
    }

    pub fn is_negative(&self) -> bool {
        self.hi < Ext::Fin(Float::zero())
    }

    /// Every member of self is ≤ every member of o.
    pub fn certainly_le(&self, o: &Interval) -> bool {
        self.hi <= o.lo
    }

    pub fn certainly_lt(&self, o: &Interval) -> bool {
        self.hi < o.lo
    }

    pub fn certainly_ge(&self, o: &Interval) -> bool {
        o.certainly_le(self)
    }

    pub fn certainly_gt(&self, o: &Interval) -> bool {
        o.certainly_lt(self)
    }

    pub fn hull(&self, o: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
            prec: self.prec.max(o.prec),
        }
    }

    pub fn intersect(&self, o: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(o.lo.clone());
        let hi = self.hi.clone().min(o.hi.clone());
        if lo > hi {
            None
        } else {
            Some(Interval { lo, hi, prec: self.prec.max(o.prec) })
        }
    }

    /// Pointwise minimum of two functions with these enclosures.
    pub fn min(&self, o: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().min(o.hi.clone()),
            prec: self.prec.max(o.prec),
        }
    }

    pub fn max(&self, o: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().max(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
            prec: self.prec.max(o.prec),
        }
    }

    /// Lower endpoint as a degenerate interval (must be finite).
    pub fn lower(&self) -> Interval {
        Interval { lo: self.lo.clone(), hi: self.lo.clone(), prec: self.prec }
    }

    pub fn upper(&self) -> Interval {
        Interval { lo: self.hi.clone(), hi: self.hi.clone(), prec: self.prec }
    }

    /// Split at the (approximate) midpoint; unbounded sides split
    /// geometrically.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.split_point();
        (
            Interval { lo: self.lo.clone(), hi: Ext::Fin(m.clone()), prec: self.prec },
            Interval { lo: Ext::Fin(m), hi: self.hi.clone(), prec: self.prec },
        )
    }

    fn split_point(&self) -> Float {
        let p = self.prec;
        match (&self.lo, &self.hi) {
            (Ext::Fin(a), Ext::Fin(b)) => {
                // geometric split for wide positive intervals keeps relative
                // widths balanced across many orders of magnitude
                if a.is_pos() && b.top() - a.top() > 4 {
                    let s = a.mul(b, p, Dir::Down).sqrt(p, Dir::Down);
                    if &s > a && &s < b {
                        return s;
                    }
                }
                a.add(b, p + 2, Dir::Down).mul_pow2(-1).round(p, Dir::Down)
            }
            (Ext::Fin(a), Ext::PosInf) => {
                if a.is_pos() {
                    a.mul_pow2(1)
                } else {
                    Float::one()
                }
            }
            (Ext::NegInf, Ext::Fin(b)) => {
                if b.is_neg() {
                    b.mul_pow2(1)
                } else {
                    Float::one().neg()
                }
            }
            _ => Float::zero(),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        let p = self.prec.max(o.prec);
        Interval { lo: self.lo.add(&o.lo, p, Dir::Down), hi: self.hi.add(&o.hi, p, Dir::Up), prec: p }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = self.prec.max(o.prec);
        if self.is_nonneg() && o.is_nonneg() {
            return Interval { lo: self.lo.mul(&o.lo, p, Dir::Down), hi: self.hi.mul(&o.hi, p, Dir::Up), prec: p };
        }
        let c = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let lo = c.iter().map(|(a, b)| a.mul(b, p, Dir::Down)).min().unwrap();
        let hi = c.iter().map(|(a, b)| a.mul(b, p, Dir::Up)).max().unwrap();
        Interval { lo, hi, prec: p }
    }

    pub fn div(&self, o: &Interval) -> Result<Interval> {
        if o.contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let p = self.prec.max(o.prec);
        if self.is_nonneg() && o.is_positive() {
            return Ok(Interval { lo: self.lo.div(&o.hi, p, Dir::Down), hi: self.hi.div(&o.lo, p, Dir::Up), prec: p });
        }
        let c = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let lo = c.iter().map(|(a, b)| a.div(b, p, Dir::Down)).min().unwrap();
        let hi = c.iter().map(|(a, b)| a.div(b, p, Dir::Up)).max().unwrap();
        Ok(Interval { lo, hi, prec: p })
    }

    pub fn recip(&self) -> Result<Interval> {
        Interval::from_i64(1, self.prec).div(self)
    }

    /// `1/x` for a variable known to be strictly positive whose enclosure
    /// may touch zero at the lower end (treated as an open limit).
    pub fn inv_positive(&self) -> Result<Interval> {
        if !self.is_nonneg() || !(self.hi > Ext::Fin(Float::zero())) {
            return Err(Error::DomainError("inv_positive needs a nonnegative, nonzero enclosure".into()));
        }
        let one = Ext::Fin(Float::one());
        let p = self.prec;
        let lo = one.div(&self.hi, p, Dir::Down);
        let hi = if self.lo.is_zero() { Ext::PosInf } else { one.div(&self.lo, p, Dir::Up) };
        Ok(Interval { lo, hi, prec: p })
    }

    pub fn abs(&self) -> Interval {
        if self.is_nonneg() {
            self.clone()
        } else if self.hi <= Ext::Fin(Float::zero()) {
            self.neg()
        } else {
            let m = self.lo.neg().max(self.hi.clone());
            Interval { lo: Ext::Fin(Float::zero()), hi: m, prec: self.prec }
        }
    }

    pub fn sqr(&self) -> Interval {
        let a = self.abs();
        let p = self.prec;
        Interval { lo: a.lo.mul(&a.lo, p, Dir::Down), hi: a.hi.mul(&a.hi, p, Dir::Up), prec: p }
    }

    /// Integer power with exact sign handling.
    pub fn powi(&self, n: i32) -> Result<Interval> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        let p = self.prec;
        let n = n as u32;
        if n == 0 {
            return Ok(Interval::from_i64(1, p));
        }
        if n % 2 == 0 {
            let a = self.abs();
            Ok(Interval { lo: pow_ext(&a.lo, n, p, Dir::Down), hi: pow_ext(&a.hi, n, p, Dir::Up), prec: p })
        } else {
            Ok(Interval { lo: pow_ext(&self.lo, n, p, Dir::Down), hi: pow_ext(&self.hi, n, p, Dir::Up), prec: p })
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Interval {
        let f = |e: &Ext| match e {
            Ext::Fin(x) => Ext::Fin(x.mul_pow2(k)),
            o => o.clone(),
        };
        Interval { lo: f(&self.lo), hi: f(&self.hi), prec: self.prec }
    }

    /// Shorthand constructors at this interval's precision.
    pub fn c(&self, s: &str) -> Interval {
        Interval::dec(s, self.prec)
    }

    pub fn int(&self, v: i64) -> Interval {
        Interval::from_i64(v, self.prec)
    }

    pub fn ratio(&self, n: i64, d: i64) -> Interval {
        Interval::from_ratio(n, d, self.prec)
    }

    /// Certified decimal rendering `[lo, hi]` with outward rounding.
    pub fn to_decimal_pair(&self, digits: usize) -> (String, String) {
        (ext_to_decimal(&self.lo, Dir::Down, digits), ext_to_decimal(&self.hi, Dir::Up, digits))
    }
}

fn pow_ext(x: &Ext, n: u32, p: u32, dir: Dir) -> Ext {
    match x {
        Ext::Fin(f) => {
            // every partial product is rounded in the direction that keeps
            // the magnitude on the requested side
            let neg_result = f.is_neg() && n % 2 == 1;
            let mag_dir = if neg_result { dir.flip() } else { dir };
            let base = f.abs();
            let mut acc = Float::one();
            for _ in 0..n {
                acc = acc.mul(&base, p + 4, mag_dir);
            }
            let acc = acc.round(p, mag_dir);
            Ext::Fin(if neg_result { acc.neg() } else { acc })
        }
        Ext::PosInf => Ext::PosInf,
        Ext::NegInf => {
            if n % 2 == 0 {
                Ext::PosInf
            } else {
                Ext::NegInf
            }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_pair(12);
        write!(f, "[{lo}, {hi}]")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&Interval> for &Interval {
            type Output = Interval;
            fn $m(self, o: &Interval) -> Interval {
                Interval::$f(self, o)
            }
        }
        impl std::ops::$tr<Interval> for Interval {
            type Output = Interval;
            fn $m(self, o: Interval) -> Interval {
                Interval::$f(&self, &o)
            }
        }
        impl std::ops::$tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, o: &Interval) -> Interval {
                Interval::$f(&self, o)
            }
        }
        impl std::ops::$tr<Interval> for &Interval {
            type Output = Interval;
            fn $m(self, o: Interval) -> Interval {
                Interval::$f(self, &o)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl std::ops::Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::neg(self)
    }
}

impl std::ops::Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::neg(&self)
    }
}
