//! Binary floating point values `±mag · 2^exp` with directed rounding.
//!
//! Magnitudes are arbitrary precision; every rounding operation takes an
//! explicit bit count and a direction. Values are kept canonical (odd
//! mantissa or zero) so equal numbers compare and hash equal.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Rounding direction for a single operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dir {
    Down,
    Up,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Down => Dir::Up,
            Dir::Up => Dir::Down,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Float {
    neg: bool,
    mag: BigUint,
    exp: i64,
}

impl Float {
    pub fn zero() -> Float {
        Float { neg: false, mag: BigUint::zero(), exp: 0 }
    }

    pub fn one() -> Float {
        Float { neg: false, mag: BigUint::one(), exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }

    pub fn is_neg(&self) -> bool {
        self.neg
    }

    pub fn is_pos(&self) -> bool {
        !self.neg && !self.mag.is_zero()
    }

    pub fn mag(&self) -> &BigUint {
        &self.mag
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// Exact value `m · 2^e`.
    pub fn from_parts(neg: bool, mag: BigUint, exp: i64) -> Float {
        Float::canon(neg, mag, exp)
    }

    pub fn from_bigint(v: &BigInt) -> Float {
        let neg = v.sign() == Sign::Minus;
        Float::canon(neg, v.magnitude().clone(), 0)
    }

    pub fn from_i64(v: i64) -> Float {
        Float::from_bigint(&BigInt::from(v))
    }

    /// Exact conversion; panics on NaN or infinity.
    pub fn from_f64(v: f64) -> Float {
        assert!(v.is_finite(), "non-finite f64");
        if v == 0.0 {
            return Float::zero();
        }
        let bits = v.to_bits();
        let neg = bits >> 63 == 1;
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, ex) = if e == 0 { (frac, -1074) } else { (frac | (1u64 << 52), e - 1075) };
        Float::canon(neg, BigUint::from(m), ex)
    }

    fn canon(neg: bool, mag: BigUint, exp: i64) -> Float {
        if mag.is_zero() {
            return Float::zero();
        }
        let tz = mag.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            Float { neg, mag: mag >> tz, exp: exp + tz as i64 }
        } else {
            Float { neg, mag, exp }
        }
    }

    /// Number of significant bits of the magnitude.
    pub fn bits(&self) -> u64 {
        self.mag.bits()
    }

    /// Position of the leading bit: `2^top ≤ |x| < 2^(top+1)`.
    pub fn top(&self) -> i64 {
        self.exp + self.mag.bits() as i64 - 1
    }

    pub fn neg(&self) -> Float {
        if self.is_zero() {
            return Float::zero();
        }
        Float { neg: !self.neg, mag: self.mag.clone(), exp: self.exp }
    }

    pub fn abs(&self) -> Float {
        Float { neg: false, mag: self.mag.clone(), exp: self.exp }
    }

    pub fn mul_pow2(&self, k: i64) -> Float {
        if self.is_zero() {
            return Float::zero();
        }
        Float { neg: self.neg, mag: self.mag.clone(), exp: self.exp + k }
    }

    /// Round a signed magnitude to `prec` bits in direction `dir`.
    pub fn round_parts(neg: bool, mag: BigUint, exp: i64, prec: u32, dir: Dir) -> Float {
        let bits = mag.bits();
        if bits <= prec as u64 {
            return Float::canon(neg, mag, exp);
        }
        let shift = bits - prec as u64;
        let kept = &mag >> shift;
        let exact = mag.trailing_zeros().map_or(true, |tz| tz >= shift);
        let away = !exact && ((dir == Dir::Up) != neg);
        let kept = if away { kept + 1u32 } else { kept };
        Float::canon(neg, kept, exp + shift as i64)
    }

    pub fn round(&self, prec: u32, dir: Dir) -> Float {
        Float::round_parts(self.neg, self.mag.clone(), self.exp, prec, dir)
    }

    fn signed(&self) -> BigInt {
        let s = if self.neg { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(s, self.mag.clone())
    }

    fn from_signed(v: BigInt, exp: i64, prec: u32, dir: Dir) -> Float {
        let neg = v.sign() == Sign::Minus;
        Float::round_parts(neg, v.magnitude().clone(), exp, prec, dir)
    }

    pub fn add(&self, o: &Float, prec: u32, dir: Dir) -> Float {
        if o.is_zero() {
            return self.round(prec, dir);
        }
        if self.is_zero() {
            return o.round(prec, dir);
        }
        let (big, small) = if self.top() >= o.top() { (self, o) } else { (o, self) };
        // When the small operand lies entirely below the rounding grid of the
        // result it only decides the direction of a one-ulp step, so it is
        // replaced by a sticky value of the same sign.
        let grid = big.top() - prec as i64 - 4;
        let lowest = big.exp.min(grid);
        if small.top() < lowest - 2 {
            let sticky_exp = lowest - 2;
            let s = Float { neg: small.neg, mag: BigUint::one(), exp: sticky_exp };
            return Float::add_exact(big, &s, prec, dir);
        }
        Float::add_exact(big, small, prec, dir)
    }

    fn add_exact(a: &Float, b: &Float, prec: u32, dir: Dir) -> Float {
        let e = a.exp.min(b.exp);
        let ma = a.signed() << (a.exp - e) as usize;
        let mb = b.signed() << (b.exp - e) as usize;
        Float::from_signed(ma + mb, e, prec, dir)
    }

    pub fn sub(&self, o: &Float, prec: u32, dir: Dir) -> Float {
        self.add(&o.neg(), prec, dir)
    }

    pub fn mul(&self, o: &Float, prec: u32, dir: Dir) -> Float {
        if self.is_zero() || o.is_zero() {
            return Float::zero();
        }
        Float::round_parts(self.neg != o.neg, &self.mag * &o.mag, self.exp + o.exp, prec, dir)
    }

    /// Exact product without rounding.
    pub fn mul_exact(&self, o: &Float) -> Float {
        if self.is_zero() || o.is_zero() {
            return Float::zero();
        }
        Float::canon(self.neg != o.neg, &self.mag * &o.mag, self.exp + o.exp)
    }

    pub fn div(&self, o: &Float, prec: u32, dir: Dir) -> Float {
        assert!(!o.is_zero(), "division by zero float");
        if self.is_zero() {
            return Float::zero();
        }
        let neg = self.neg != o.neg;
        // quotient with at least prec + 2 bits
        let shift = (prec as i64 + 2 + o.mag.bits() as i64 - self.mag.bits() as i64).max(0);
        let num = &self.mag << shift as usize;
        let (q, r) = num.div_rem(&o.mag);
        let exp = self.exp - o.exp - shift;
        // a nonzero remainder is folded into a sticky low bit
        let (q, exp) = if r.is_zero() { (q, exp) } else { ((q << 1usize) | BigUint::one(), exp - 1) };
        Float::round_parts(neg, q, exp, prec, dir)
    }

    pub fn sqrt(&self, prec: u32, dir: Dir) -> Float {
        assert!(!self.neg, "sqrt of negative float");
        if self.is_zero() {
            return Float::zero();
        }
        let mut shift = 2 * (prec as i64 + 2) - self.mag.bits() as i64;
        shift = shift.max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m = &self.mag << shift as usize;
        let s = m.sqrt();
        let exact = &s * &s == m;
        let exp = (self.exp - shift) / 2;
        let (s, exp) = if exact { (s, exp) } else { ((s << 1usize) | BigUint::one(), exp - 1) };
        Float::round_parts(false, s, exp, prec, dir)
    }

    /// Floor of the value as an integer.
    pub fn floor_int(&self) -> BigInt {
        let v = self.signed();
        if self.exp >= 0 {
            v << self.exp as usize
        } else {
            v.div_floor(&(BigInt::one() << (-self.exp) as usize))
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        -(self.neg().floor_int())
    }

    /// Nearest f64 (rounded toward zero for huge exponents); only for display
    /// and heuristics, never for certification.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mag.bits() as i64;
        let keep = bits.min(60);
        let m = (&self.mag >> (bits - keep) as usize).to_u64().unwrap_or(0) as f64;
        let e = self.exp + bits - keep;
        let v = if e > 2000 {
            f64::INFINITY
        } else if e < -2200 {
            0.0
        } else {
            m * 2f64.powi(e as i32)
        };
        if self.neg {
            -v
        } else {
            v
        }
    }

    /// Integer value if exactly integral and small.
    pub fn to_i64_exact(&self) -> Option<i64> {
        if self.exp < 0 {
            return None;
        }
        (self.signed() << self.exp as usize).to_i64()
    }
}

impl Ord for Float {
    fn cmp(&self, o: &Float) -> Ordering {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return if o.neg { Ordering::Greater } else { Ordering::Less },
            (false, true) => return if self.neg { Ordering::Less } else { Ordering::Greater },
            _ => {}
        }
        if self.neg != o.neg {
            return if self.neg { Ordering::Less } else { Ordering::Greater };
        }
        let mag_ord = if self.top() != o.top() {
            self.top().cmp(&o.top())
        } else {
            let e = self.exp.min(o.exp);
            let a = &self.mag << (self.exp - e) as usize;
            let b = &o.mag << (o.exp - e) as usize;
            a.cmp(&b)
        };
        if self.neg {
            mag_ord.reverse()
        } else {
            mag_ord
        }
    }
}

impl PartialOrd for Float {
    fn partial_cmp(&self, o: &Float) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Parse a decimal literal such as `70.6995`, `-3e12` or `1.01e12` into an
/// exact mantissa and decimal exponent.
pub fn parse_decimal(s: &str) -> Option<(BigInt, i64)> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (body, exp10) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match body.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, body.strip_prefix('+').unwrap_or(body)),
    };
    let (int_part, frac_part) = match body.find('.') {
        Some(i) => (&body[..i], &body[i + 1..]),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{}{}", int_part, frac_part);
    let mut m: BigInt = digits.parse().ok()?;
    if neg {
        m = -m;
    }
    Some((m, exp10 - frac_part.len() as i64))
}

/// Round the exact rational `num / den` (den > 0) to a float.
pub fn ratio_to_float(num: &BigInt, den: &BigInt, prec: u32, dir: Dir) -> Float {
    assert!(den.is_positive());
    let a = Float::from_bigint(num);
    let b = Float::from_bigint(den);
    a.div(&b, prec, dir)
}

/// Round `m · 10^e` to a float in direction `dir`.
pub fn decimal_to_float(m: &BigInt, e: i64, prec: u32, dir: Dir) -> Float {
    if e >= 0 {
        let v = m * num_traits::pow(BigInt::from(10), e as usize);
        Float::from_bigint(&v).round(prec, dir)
    } else {
        let den = num_traits::pow(BigInt::from(10), (-e) as usize);
        ratio_to_float(m, &den, prec, dir)
    }
}
