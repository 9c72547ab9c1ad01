//! Explicit estimates used by the zero-density argument: zero-free regions,
//! the Richert-type bound for |ζ|, the N(T) estimate, the Stirling bound for
//! |Γ| and the summatory bound for d(n)².
//!
//! `log` is the natural logarithm throughout. Every function taking `T` has a
//! `_log` twin taking `ℓ = log T`, which is what callers use once T is far
//! beyond any float exponent.

use crate::error::{Error, Result};
use crate::interval::{const_e, const_pi, Interval};
use std::fmt;

/// The four zero-free regions, in the order they become the widest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZeroFreeRegionId {
    Classical,
    Intermediate,
    Littlewood,
    KorobovVinogradov,
}

impl ZeroFreeRegionId {
    pub const ALL: [ZeroFreeRegionId; 4] = [
        ZeroFreeRegionId::Classical,
        ZeroFreeRegionId::Intermediate,
        ZeroFreeRegionId::Littlewood,
        ZeroFreeRegionId::KorobovVinogradov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ZeroFreeRegionId::Classical => "Classical",
            ZeroFreeRegionId::Intermediate => "Intermediate",
            ZeroFreeRegionId::Littlewood => "Littlewood",
            ZeroFreeRegionId::KorobovVinogradov => "KorobovVinogradov",
        }
    }
}

impl fmt::Display for ZeroFreeRegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Height ranges with their own constants. Boundary points belong to the
/// lower range; R1 is closed at 3·10¹².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TRange {
    R1,
    R2,
    R3,
    R4,
}

impl TRange {
    pub const ALL: [TRange; 4] = [TRange::R1, TRange::R2, TRange::R3, TRange::R4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["R1", "R2", "R3", "R4"][self.index()]
    }

    /// Lower end of the range in log T.
    pub fn log_t_lo(self, prec: u32) -> Interval {
        match self {
            TRange::R1 => Interval::dec("3e12", prec).ln().unwrap(),
            TRange::R2 => Interval::dec("46.2", prec),
            TRange::R3 => Interval::dec("170.2", prec),
            TRange::R4 => Interval::dec("481958", prec),
        }
    }

    /// Upper end in log T; `None` for the unbounded R4.
    pub fn log_t_hi(self, prec: u32) -> Option<Interval> {
        match self {
            TRange::R1 => Some(Interval::dec("46.2", prec)),
            TRange::R2 => Some(Interval::dec("170.2", prec)),
            TRange::R3 => Some(Interval::dec("481958", prec)),
            TRange::R4 => None,
        }
    }

    /// The whole range as a log T interval (R4 extends to +∞).
    pub fn log_t_box(self, prec: u32) -> Interval {
        let lo = self.log_t_lo(prec).lower();
        match self.log_t_hi(prec) {
            Some(h) => lo.hull(&h.upper()),
            None => lo.to_infinity(),
        }
    }

    /// The range that contains every T with log T in `ell`. Values below
    /// log(3·10¹²) are assigned to R1.
    pub fn for_log_t(ell: &Interval) -> Result<TRange> {
        let p = ell.prec();
        let mut found = TRange::R1;
        for r in [TRange::R1, TRange::R2, TRange::R3] {
            let b = r.log_t_hi(p).unwrap();
            // an enclosure of the boundary decimal itself is the boundary
            if ell.certainly_le(&b) || b.contains(ell) {
                return Ok(found);
            }
            if !ell.certainly_gt(&b) {
                return Err(Error::RangeStraddle(b.to_string()));
            }
            found = TRange::ALL[r.index() + 1];
        }
        Ok(found)
    }

    /// The zero-free region the proof uses inside this range.
    pub fn region(self) -> ZeroFreeRegionId {
        ZeroFreeRegionId::ALL[self.index()]
    }
}

impl fmt::Display for TRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn log_of_t(t: &Interval) -> Result<Interval> {
    let three = Interval::from_i64(3, t.prec());
    if !t.certainly_ge(&three) {
        return Err(Error::DomainError("T must be at least 3".into()));
    }
    t.ln()
}

fn check_log_t(ell: &Interval) -> Result<()> {
    let l3 = Interval::from_i64(3, ell.prec()).ln()?;
    if ell.lo() < l3.lo() {
        return Err(Error::DomainError("log T must be at least log 3".into()));
    }
    Ok(())
}

/// J(T) = (1/6) log T + log log T + log 0.618, as a function of ℓ = log T.
pub fn j_function_log(ell: &Interval) -> Result<Interval> {
    let p = ell.prec();
    if !ell.is_positive() {
        return Err(Error::DomainError("J needs log T > 0".into()));
    }
    Ok(&(&ell.div(&Interval::from_i64(6, p))? + &ell.ln()?) + &Interval::dec("0.618", p).ln()?)
}

pub fn j_function(t: &Interval) -> Result<Interval> {
    if !t.certainly_ge(&const_e(t.prec()).lower()) {
        return Err(Error::DomainError("J needs T ≥ e".into()));
    }
    j_function_log(&t.ln()?)
}

/// Certified `J(T) < (1/4) log T + 1.8521`.
pub fn j_comparison_holds_log(ell: &Interval) -> Result<bool> {
    let p = ell.prec();
    let rhs = &ell.div(&Interval::from_i64(4, p))? + &Interval::dec("1.8521", p);
    Ok(j_function_log(ell)?.certainly_lt(&rhs))
}

/// Gap g such that ζ(σ+it) ≠ 0 for σ ≥ 1 − g, |t| ≤ T with log T in `ell`.
pub fn zero_free_gap_log(region: ZeroFreeRegionId, ell: &Interval) -> Result<Interval> {
    check_log_t(ell)?;
    let p = ell.prec();
    let c = |s: &str| Interval::dec(s, p);
    let lam = ell.ln()?;
    match region {
        ZeroFreeRegionId::Classical => (&c("5.558691") * ell).recip(),
        ZeroFreeRegionId::Intermediate => {
            let j = j_function_log(ell)?;
            let num = &c("0.04962") - &c("0.0196").div(&(&j + &c("1.15")))?;
            let den = &(&j + &c("0.685")) + &(&c("0.155") * &lam);
            num.div(&den)
        }
        ZeroFreeRegionId::Littlewood => lam.div(&(&c("21.233") * ell)),
        ZeroFreeRegionId::KorobovVinogradov => {
            let den = &(&c("53.989") * &ell.pow_ratio(2, 3)?) * &lam.pow_ratio(1, 3)?;
            den.recip()
        }
    }
}

pub fn zero_free_gap(region: ZeroFreeRegionId, t: &Interval) -> Result<Interval> {
    zero_free_gap_log(region, &log_of_t(t)?)
}

/// The region whose gap certifiably exceeds the other three over all of
/// `ell`; `Inconclusive` when enclosures overlap.
pub fn widest_region_log(ell: &Interval) -> Result<ZeroFreeRegionId> {
    let gaps: Vec<Interval> = ZeroFreeRegionId::ALL.iter().map(|&r| zero_free_gap_log(r, ell)).collect::<Result<_>>()?;
    for (i, g) in gaps.iter().enumerate() {
        if gaps.iter().enumerate().all(|(j, h)| i == j || g.certainly_gt(h)) {
            return Ok(ZeroFreeRegionId::ALL[i]);
        }
    }
    Err(Error::Inconclusive(format!("zero-free gaps overlap at log T = {ell}")))
}

pub fn widest_region(t: &Interval) -> Result<ZeroFreeRegionId> {
    widest_region_log(&log_of_t(t)?)
}

fn check_alpha(alpha: &Interval) -> Result<()> {
    let p = alpha.prec();
    if !alpha.certainly_ge(&Interval::from_ratio(1, 2, p)) || !alpha.certainly_le(&Interval::from_i64(1, p)) {
        return Err(Error::DomainError("alpha must lie in [1/2, 1]".into()));
    }
    Ok(())
}

/// log 𝓜(α, T) = log 70.6995 + 4.43795 (1−α)^{3/2} ℓ + (2/3) log ℓ.
pub fn richert_log_m(alpha: &Interval, ell: &Interval) -> Result<Interval> {
    check_alpha(alpha)?;
    check_log_t(ell)?;
    let p = alpha.prec().max(ell.prec());
    let one = Interval::from_i64(1, p);
    let d = (&one - alpha).max(&Interval::from_i64(0, p));
    let b = &Interval::dec("4.43795", p) * &d.sqr().mul(&d).sqrt()?;
    Ok(&(&Interval::dec("70.6995", p).ln()? + &(&b * ell)) + &(&Interval::from_ratio(2, 3, p) * &ell.ln()?))
}

/// 𝓜(α, T) = 70.6995 T^{4.43795(1−α)^{3/2}} (log T)^{2/3}.
pub fn richert_m(alpha: &Interval, t: &Interval) -> Result<Interval> {
    Ok(richert_log_m(alpha, &log_of_t(t)?)?.exp())
}

fn nt_parts(t: &Interval) -> Result<(Interval, Interval)> {
    let p = t.prec();
    let e = const_e(p);
    if !t.certainly_ge(&e.lower()) {
        return Err(Error::DomainError("N(T) bound needs T ≥ e".into()));
    }
    let two_pi = const_pi(p).mul_pow2(1);
    let ell = t.ln()?;
    let main = &t.div(&two_pi)? * &t.div(&(&two_pi * &e))?.ln()?;
    let lam = ell.max(&Interval::from_i64(1, p)).ln()?;
    let err = &(&(&Interval::dec("0.1038", p) * &ell) + &(&Interval::dec("0.2573", p) * &lam)) + &Interval::dec("9.3675", p);
    Ok((main, err))
}

/// N(T) ≤ (T/2π) log(T/2πe) + 0.1038 log T + 0.2573 log log T + 9.3675.
pub fn nt_upper(t: &Interval) -> Result<Interval> {
    let (m, e) = nt_parts(t)?;
    Ok(&m + &e)
}

pub fn nt_lower(t: &Interval) -> Result<Interval> {
    let (m, e) = nt_parts(t)?;
    Ok(&m - &e)
}

/// |Γ(σ+it)| ≤ √(2π) |t|^{σ−1/2} exp(−π|t|/2 + 1/(6|z|)).
pub fn stirling_gamma_upper(sigma: &Interval, t: &Interval, z_abs: &Interval) -> Result<Interval> {
    let p = sigma.prec().max(t.prec());
    let at = t.abs();
    if at.contains_zero() {
        return Err(Error::DomainError("Stirling bound needs t ≠ 0".into()));
    }
    if !z_abs.certainly_ge(&at.lower()) || z_abs.lo() < at.lo() {
        return Err(Error::DomainError("|z| must be at least |t|".into()));
    }
    let pi = const_pi(p);
    let root = pi.mul_pow2(1).sqrt()?;
    let pw = at.pow(&(sigma - &Interval::from_ratio(1, 2, p)))?;
    let ex = &(&pi * &at).mul_pow2(-1).neg() + &(&Interval::from_i64(6, p) * &z_abs.lower()).recip()?;
    Ok(&(&root * &pw) * &ex.exp())
}

/// The divisor constants: D1 = 1/π² exactly, the others known to three
/// decimals and carried as intervals.
pub fn divisor_constants(prec: u32) -> [Interval; 4] {
    let pi = const_pi(prec);
    [
        pi.sqr().recip().unwrap(),
        Interval::dec_range("0.745", "0.746", prec),
        Interval::dec_range("0.824", "0.825", prec),
        Interval::dec_range("0.461", "0.462", prec),
    ]
}

/// Two-sided band for Σ_{n≤x} d(n)², plus which simplified bounds
/// K x log³ x apply.
#[derive(Clone, Debug)]
pub struct DivisorSumBound {
    pub upper: Interval,
    pub lower: Interval,
    /// x ≥ 433, so Σ ≤ x log³x / 4
    pub quarter_applies: bool,
    /// x ≥ 7, so Σ ≤ x log³x
    pub unit_applies: bool,
}

pub fn divisor_sum_band(x: &Interval) -> Result<DivisorSumBound> {
    let p = x.prec();
    if !x.certainly_ge(&Interval::from_i64(2, p)) {
        return Err(Error::DomainError("divisor bound needs x ≥ 2".into()));
    }
    let [d1, d2, d3, d4] = divisor_constants(p);
    let l = x.ln()?;
    let main = x * &(&(&(&(&d1 * &l.powi(3)?) + &(&d2 * &l.sqr())) + &(&d3 * &l)) + &d4);
    let theta = &(&(&Interval::dec("9.73", p) * &x.pow_ratio(3, 4)?) * &l) + &(&Interval::dec("0.73", p) * &x.sqrt()?);
    Ok(DivisorSumBound {
        upper: (&main + &theta).upper(),
        lower: (&main - &theta).lower(),
        quarter_applies: x.certainly_ge(&Interval::from_i64(433, p)),
        unit_applies: x.certainly_ge(&Interval::from_i64(7, p)),
    })
}

pub fn divisor_sum_upper(x: &Interval) -> Result<Interval> {
    Ok(divisor_sum_band(x)?.upper)
}

/// The upper band divided by x log³x, evaluated without forming x log³x:
/// D1 + D2/L + D3/L² + D4/L³ + 9.73 x^{−1/4}/L² + 0.73 x^{−1/2}/L³.
pub fn divisor_coefficient(x: &Interval) -> Result<Interval> {
    let p = x.prec();
    if !x.certainly_ge(&Interval::from_i64(2, p)) {
        return Err(Error::DomainError("divisor bound needs x ≥ 2".into()));
    }
    let [d1, d2, d3, d4] = divisor_constants(p);
    let l = x.ln()?;
    let l2 = l.sqr();
    let l3 = &l2 * &l;
    let mut s = &d1 + &d2.div(&l)?;
    s = &s + &d3.div(&l2)?;
    s = &s + &d4.div(&l3)?;
    s = &s + &(&Interval::dec("9.73", p) * &x.pow_ratio(-1, 4)?).div(&l2)?;
    s = &s + &(&Interval::dec("0.73", p) * &x.sqrt()?.recip()?).div(&l3)?;
    Ok(s.upper())
}
