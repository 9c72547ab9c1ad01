//! The zero-density bounds and the comparison with the Ingham-type bound
//! C·T^{(8/3)(1−σ)}·log³T.
//!
//! All evaluators take σ and ℓ = log T as intervals and return certified
//! enclosures of the bound itself.

use crate::bounds::{zero_free_gap_log, TRange, ZeroFreeRegionId};
use crate::error::{Error, Result};
use crate::interval::Interval;
use num_rational::Ratio;

/// Shape of an estimate A·T^{B(1−σ)^{e}}·(log T)^c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundForm {
    /// exponent (1−σ)^{3/2}
    ThreeHalves,
    /// exponent (1−σ)
    Linear,
}

/// A·T^{B(1−σ)^{3/2 or 1}}·(log T)^c with c an exact rational.
#[derive(Clone, Debug)]
pub struct DensityBound {
    pub a: Interval,
    pub b: Interval,
    pub c: Ratio<i64>,
    pub form: BoundForm,
}

impl DensityBound {
    pub fn new(a: Interval, b: Interval, c: Ratio<i64>, form: BoundForm) -> Result<DensityBound> {
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::DomainError("density bound needs A > 0 and B > 0".into()));
        }
        Ok(DensityBound { a, b, c, form })
    }

    /// log of the bound: log A + B(1−σ)^e ℓ + c log ℓ.
    pub fn log_value(&self, sigma: &Interval, ell: &Interval) -> Result<Interval> {
        let p = sigma.prec().max(ell.prec());
        let d = one_minus(sigma)?;
        let de = match self.form {
            BoundForm::ThreeHalves => three_halves(&d)?,
            BoundForm::Linear => d,
        };
        let c = Interval::from_ratio(*self.c.numer(), *self.c.denom(), p);
        Ok(&(&self.a.ln()? + &(&(&self.b * &de) * ell)) + &(&c * &ell.ln()?))
    }

    pub fn value(&self, sigma: &Interval, ell: &Interval) -> Result<Interval> {
        Ok(self.log_value(sigma, ell)?.exp())
    }
}

fn one_minus(sigma: &Interval) -> Result<Interval> {
    let p = sigma.prec();
    let d = &Interval::from_i64(1, p) - sigma;
    if !d.is_nonneg() {
        return Err(Error::DomainError("sigma must not exceed 1".into()));
    }
    Ok(d)
}

/// d^{3/2} for d ≥ 0, with the exact value 0 at d = 0.
fn three_halves(d: &Interval) -> Result<Interval> {
    (&d.sqr() * d).sqrt()
}

/// The printed constants of the two main theorems and of the high-range
/// theorem.
#[derive(Clone, Debug)]
pub struct ConstantTable {
    /// leading constant of the three-term bound, per range
    pub c1: [Interval; 4],
    /// leading constant of the single-term bound, per range
    pub c1_prime: [Interval; 4],
    pub c2: Interval,
    pub third: Interval,
    /// constant valid for log T ≥ 6.7·10¹²
    pub c_high: Interval,
}

impl ConstantTable {
    pub const C1: [&'static str; 4] = ["4.68e23", "4.59e23", "1.45e23", "9.77e21"];
    pub const C1_PRIME: [&'static str; 4] = ["2.15e23", "1.89e23", "4.42e22", "4.72e20"];
    pub const C2: &'static str = "7.65e10";
    pub const THIRD: &'static str = "0.27";
    pub const C_HIGH: &'static str = "4.45e12";
    pub const HIGH_LOG_T: &'static str = "6.7e12";

    pub fn printed(prec: u32) -> ConstantTable {
        let d = |s: &str| Interval::dec(s, prec);
        ConstantTable {
            c1: Self::C1.map(d),
            c1_prime: Self::C1_PRIME.map(d),
            c2: d(Self::C2),
            third: d(Self::THIRD),
            c_high: d(Self::C_HIGH),
        }
    }
}

fn check_sigma(sigma: &Interval) -> Result<()> {
    let p = sigma.prec();
    if !sigma.certainly_ge(&Interval::dec("0.98", p).lower()) || !sigma.certainly_le(&Interval::from_i64(1, p)) {
        return Err(Error::DomainError("sigma must lie in [0.98, 1]".into()));
    }
    Ok(())
}

fn check_log_t(ell: &Interval) -> Result<()> {
    let l3 = Interval::from_i64(3, ell.prec()).ln()?;
    if ell.lo() < l3.lo() {
        return Err(Error::DomainError("T must be at least 3".into()));
    }
    Ok(())
}

/// True when log T lies below log(3·10¹²), where the constants are not
/// tabulated and N(σ, T) = 0 by the verified Riemann Hypothesis range.
pub fn below_tabulated_range(ell: &Interval) -> bool {
    ell.certainly_lt(&TRange::R1.log_t_lo(ell.prec()))
}

/// Range used for constants at this log T (R1 below the tabulated range).
pub fn range_for(ell: &Interval) -> Result<TRange> {
    TRange::for_log_t(ell)
}

/// The three-term bound
/// (𝒞₁T^{57.8875(1−σ)^{3/2}}ℓ^{19703/1800} + 𝒞₂T^{33.08(1−σ)^{3/2}}ℓ^{503/45} + 0.27ℓ^{1.4})·log ℓ.
pub fn theorem1_general_log(sigma: &Interval, ell: &Interval) -> Result<Interval> {
    check_sigma(sigma)?;
    check_log_t(ell)?;
    let p = sigma.prec().max(ell.prec());
    let tab = ConstantTable::printed(p);
    let r = range_for(ell)?;
    let d = Interval::dec;
    let first = DensityBound::new(tab.c1[r.index()].clone(), d("57.8875", p), Ratio::new(19703, 1800), BoundForm::ThreeHalves)?;
    let second = DensityBound::new(tab.c2.clone(), d("33.08", p), Ratio::new(503, 45), BoundForm::ThreeHalves)?;
    let third = &tab.third * &ell.pow_ratio(7, 5)?;
    let sum = &(&first.value(sigma, ell)? + &second.value(sigma, ell)?) + &third;
    Ok(&sum * &ell.ln()?)
}

/// 𝒞′₁ T^{57.8875(1−σ)^{3/2}} (log T)^{10393/900}.
pub fn theorem1_simple_log(sigma: &Interval, ell: &Interval) -> Result<Interval> {
    check_sigma(sigma)?;
    check_log_t(ell)?;
    let p = sigma.prec().max(ell.prec());
    let tab = ConstantTable::printed(p);
    let r = range_for(ell)?;
    DensityBound::new(tab.c1_prime[r.index()].clone(), Interval::dec("57.8875", p), Ratio::new(10393, 900), BoundForm::ThreeHalves)?
        .value(sigma, ell)
}

/// 4.45·10¹² T^{57.8875(1−σ)^{3/2}} (log T)^{10393/900} for log T ≥ 6.7·10¹².
pub fn theorem2_log(sigma: &Interval, ell: &Interval) -> Result<Interval> {
    check_sigma(sigma)?;
    let p = sigma.prec().max(ell.prec());
    if !ell.certainly_ge(&Interval::dec(ConstantTable::HIGH_LOG_T, p).lower()) {
        return Err(Error::DomainError("theorem2 needs log T ≥ 6.7e12".into()));
    }
    DensityBound::new(Interval::dec(ConstantTable::C_HIGH, p), Interval::dec("57.8875", p), Ratio::new(10393, 900), BoundForm::ThreeHalves)?
        .value(sigma, ell)
}

/// C·T^{(8/3)(1−σ)}·log³T.
pub fn ingham_type_log(sigma: &Interval, ell: &Interval, c: &Interval) -> Result<Interval> {
    check_log_t(ell)?;
    let p = sigma.prec().max(ell.prec());
    if !c.certainly_ge(&Interval::from_i64(1, p)) {
        return Err(Error::DomainError("Ingham-type constant C must be at least 1".into()));
    }
    DensityBound::new(c.clone(), Interval::from_ratio(8, 3, p), Ratio::from_integer(3), BoundForm::Linear)?.value(sigma, ell)
}

pub fn theorem1_general(sigma: &Interval, t: &Interval) -> Result<Interval> {
    theorem1_general_log(sigma, &t_to_log(t)?)
}

pub fn theorem1_simple(sigma: &Interval, t: &Interval) -> Result<Interval> {
    theorem1_simple_log(sigma, &t_to_log(t)?)
}

pub fn theorem2(sigma: &Interval, t: &Interval) -> Result<Interval> {
    theorem2_log(sigma, &t_to_log(t)?)
}

pub fn ingham_type(sigma: &Interval, t: &Interval, c: &Interval) -> Result<Interval> {
    ingham_type_log(sigma, &t_to_log(t)?, c)
}

fn t_to_log(t: &Interval) -> Result<Interval> {
    if !t.certainly_ge(&Interval::from_i64(3, t.prec())) {
        return Err(Error::DomainError("T must be at least 3".into()));
    }
    t.ln()
}

/// (3/8)(log(𝒞′₁/C)/ℓ + 7693 log ℓ/(900 ℓ)), the width 1 − σ* below 1.
fn crossover_width(ell: &Interval, c: &Interval, c1prime: &Interval) -> Result<Interval> {
    let p = ell.prec();
    let k = &c1prime.div(c)?.ln()? + &(&Interval::from_ratio(7693, 900, p) * &ell.ln()?);
    Ok(&Interval::from_ratio(3, 8, p) * &k.div(ell)?)
}

/// σ* = 1 − (3/8)(log(𝒞′₁/C)/log T + 7693 log log T/(900 log T)); below σ*
/// the single-term bound beats the Ingham-type one.
pub fn sigma_crossover_log(ell: &Interval, c: &Interval, c1prime: &Interval) -> Result<Interval> {
    check_log_t(ell)?;
    let p = ell.prec();
    if !c.certainly_ge(&Interval::from_i64(1, p)) {
        return Err(Error::DomainError("C must be at least 1".into()));
    }
    let s = &Interval::from_i64(1, p) - &crossover_width(ell, c, c1prime)?;
    if !s.is_positive() {
        return Err(Error::NoCrossover);
    }
    Ok(s)
}

pub fn sigma_crossover(t: &Interval, c: &Interval, c1prime: &Interval) -> Result<Interval> {
    sigma_crossover_log(&t_to_log(t)?, c, c1prime)
}

/// The same threshold without dropping B(1−σ)^{1/2}: the smallest δ = 1 − σ
/// with (8/3 − 57.8875 δ^{1/2}) δ ℓ ≥ log(𝒞′₁/C) + (7693/900) log ℓ, found by
/// certified bisection; returns the enclosure of σ = 1 − δ.
pub fn sigma_crossover_implicit_log(ell: &Interval, c: &Interval, c1prime: &Interval) -> Result<Interval> {
    check_log_t(ell)?;
    let p = ell.prec();
    let b = Interval::dec("57.8875", p);
    let rhs = &c1prime.div(c)?.ln()? + &(&Interval::from_ratio(7693, 900, p) * &ell.ln()?);
    let f = |d: &Interval| -> Result<Interval> {
        let lhs = &(&(&Interval::from_ratio(8, 3, p) - &(&b * &d.sqrt()?)) * d) * ell;
        Ok(&lhs - &rhs)
    };
    // f increases on δ ≤ (16/(9B))², where its maximum sits
    let peak = Interval::from_i64(16, p).div(&(&Interval::from_i64(9, p) * &b))?.sqr().lower();
    if !f(&peak)?.is_positive() {
        return Err(Error::NoCrossover);
    }
    let mut lo = Interval::from_i64(0, p);
    let mut hi = peak;
    for _ in 0..200 {
        let mid = (&lo + &hi).mul_pow2(-1).lower();
        let v = f(&mid)?;
        if v.is_positive() {
            hi = mid;
        } else if v.is_negative() {
            lo = mid;
        } else {
            break;
        }
        if (&hi - &lo).certainly_le(&(&hi * &Interval::dec("1e-30", p))) {
            break;
        }
    }
    let one = Interval::from_i64(1, p);
    Ok((&one - &hi).hull(&(&one - &lo)))
}

/// Log-T bracket of the point where the Korobov–Vinogradov gap reaches the
/// crossover width (3/8)(log(𝒞′₁/C)/ℓ + (7693/900) log ℓ/ℓ), by certified
/// bisection in log scale on ℓ ∈ [10, 10¹⁵].
pub fn t_regime_boundary(c: &Interval, c1prime: &Interval) -> Result<Interval> {
    let p = c.prec().max(c1prime.prec());
    if !c.certainly_ge(&Interval::from_i64(1, p)) {
        return Err(Error::DomainError("C must be at least 1".into()));
    }
    let g = |ell: &Interval| -> Result<Interval> {
        Ok(&zero_free_gap_log(ZeroFreeRegionId::KorobovVinogradov, ell)? - &crossover_width(ell, c, c1prime)?)
    };
    let mut lo = Interval::from_i64(10, p);
    let mut hi = Interval::dec("1e15", p);
    if !g(&lo)?.is_negative() || !g(&hi)?.is_positive() {
        return Err(Error::BracketFailure("window [10, 1e15] in log T".into()));
    }
    for _ in 0..400 {
        let mid = (&lo * &hi).sqrt()?.lower();
        if !mid.certainly_gt(&lo) || !mid.certainly_lt(&hi) {
            break;
        }
        let v = g(&mid)?;
        if v.is_negative() {
            lo = mid;
        } else if v.is_positive() {
            hi = mid;
        } else {
            break;
        }
        if (&hi - &lo).certainly_le(&(&hi * &Interval::dec("1e-15", p))) {
            break;
        }
    }
    Ok(lo.hull(&hi))
}
