//! Directed decimal rendering of endpoints, so printed bounds stay valid.

use super::elementary::const_ln10;
use super::float::{Dir, Float};
use super::{Ext, Interval};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Significant digits used by reports.
pub const DEFAULT_DIGITS: usize = 20;

/// Render an endpoint with `digits` significant digits, rounding in `dir`.
pub fn ext_to_decimal(e: &Ext, dir: Dir, digits: usize) -> String {
    match e {
        Ext::NegInf => "-inf".into(),
        Ext::PosInf => "inf".into(),
        Ext::Fin(x) => float_to_decimal(x, dir, digits.max(1)),
    }
}

fn float_to_decimal(x: &Float, dir: Dir, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let neg = x.is_neg();
    let mag_dir = if neg { dir.flip() } else { dir };
    let ax = x.abs();
    // decimal exponent estimate of the leading digit
    let d = (ax.top() as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let s = digits as i64 - 1 - d;
    let (q, s) = if s.abs() <= 20_000 && ax.exponent().abs() <= 200_000 {
        (scaled_exact(&ax, s, mag_dir), s)
    } else {
        scaled_via_log(&ax, digits, mag_dir)
    };
    let body = format_scaled(q, s);
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// round(|x| · 10^s) in the given direction, exactly.
fn scaled_exact(x: &Float, s: i64, dir: Dir) -> BigInt {
    let m = BigInt::from(x.mag().clone());
    let e = x.exponent();
    let ten = BigInt::from(10);
    let mut num = m;
    let mut den = BigInt::from(1);
    if e >= 0 {
        num <<= e as usize;
    } else {
        den <<= (-e) as usize;
    }
    if s >= 0 {
        num *= num_traits::pow(ten, s as usize);
    } else {
        den *= num_traits::pow(ten, (-s) as usize);
    }
    let (q, r) = num.div_rem(&den);
    if dir == Dir::Up && !r.is_zero() {
        q + 1
    } else {
        q
    }
}

/// For astronomically large or small values: locate the decimal exponent
/// through a certified logarithm and round the mantissa from an enclosure.
fn scaled_via_log(x: &Float, digits: usize, dir: Dir) -> (BigInt, i64) {
    let extra = 64 - x.top().unsigned_abs().leading_zeros();
    let wp = 64 + 4 * digits as u32 + extra;
    let y = Interval::point_float(x.clone(), wp.max(x.bits() as u32)).ln().expect("positive");
    let ln10 = const_ln10(wp + 16);
    let t = y.div(&ln10).unwrap();
    let d = t.lo().fin().unwrap().floor_int().to_i64().unwrap();
    let shift = d - (digits as i64 - 1);
    let m = (&y - &(&ln10 * &Interval::from_i64(shift, wp + 16))).exp();
    let q = match dir {
        Dir::Down => m.lo().fin().unwrap().floor_int(),
        Dir::Up => m.hi().fin().unwrap().ceil_int(),
    };
    (q.abs(), -shift)
}

/// Format q · 10^(−s), stripping trailing zeros.
fn format_scaled(mut q: BigInt, mut s: i64) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let ten = BigInt::from(10);
    while (&q % &ten).is_zero() {
        q /= &ten;
        s -= 1;
    }
    let qs = q.to_string();
    let n = qs.len() as i64;
    let e = n - 1 - s;
    if (-5..=16).contains(&e) {
        if s <= 0 {
            format!("{}{}", qs, "0".repeat((-s) as usize))
        } else if s < n {
            let (a, b) = qs.split_at((n - s) as usize);
            format!("{a}.{b}")
        } else {
            format!("0.{}{}", "0".repeat((s - n) as usize), qs)
        }
    } else if n == 1 {
        format!("{qs}e{e}")
    } else {
        format!("{}.{}e{}", &qs[..1], &qs[1..], e)
    }
}
