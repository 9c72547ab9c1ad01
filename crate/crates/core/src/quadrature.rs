//! Certified upper bounds for the integrals behind the error terms:
//! exponentially decaying tails `∫_{v0}^∞ e^{a v^c − b v} v^p dv`, the
//! Gamma kernel `∫_0^∞ v^q e^{−bv} dv`, and the finite integral of
//! `|Γ(x + iv)|` over `[−L, L]` for `x ∈ (−1, 0)`.

use crate::error::{Error, Result};
use crate::interval::{Interval, Precision};

/// Parameters of `∫_{v0}^∞ e^{a v^c − b v} v^p dv`.
#[derive(Clone, Debug)]
pub struct TailIntegralSpec {
    pub a: Interval,
    pub c: Interval,
    pub b: Interval,
    pub p: Interval,
    pub v0: Interval,
}

impl TailIntegralSpec {
    /// Checks `a ≥ 0`, `0 < c ≤ 1`, `b > 0` and that the integrand is already
    /// decaying at the lower limit (`b v0 > a v0^c`); with `v0 = 0` it only
    /// has to decay eventually.
    pub fn new(a: Interval, c: Interval, b: Interval, p: Interval, v0: Interval) -> Result<TailIntegralSpec> {
        let prec = a.prec().max(b.prec());
        let zero = Interval::from_i64(0, prec);
        let one = Interval::from_i64(1, prec);
        if !a.is_nonneg() || !c.is_positive() || !c.certainly_le(&one) || !v0.is_nonneg() {
            return Err(Error::DomainError("tail spec needs a ≥ 0, 0 < c ≤ 1, v0 ≥ 0".into()));
        }
        if !b.is_positive() {
            return Err(Error::NotDecaying("decay rate b must be positive".into()));
        }
        if !v0.is_finite() {
            return Err(Error::DomainError("lower limit must be finite".into()));
        }
        if v0.hi() == zero.hi() {
            let linear = !c.certainly_lt(&one);
            if linear && !a.certainly_lt(&b) {
                return Err(Error::NotDecaying("growth rate a reaches b with c = 1".into()));
            }
        } else {
            if !v0.is_positive() {
                return Err(Error::DomainError("lower limit must be 0 or strictly positive".into()));
            }
            let grow = &a * &v0.pow(&c)?;
            if !(&b * &v0).certainly_gt(&grow) {
                return Err(Error::NotDecaying(format!("b·v0 = {} does not exceed a·v0^c = {}", &b * &v0, grow)));
            }
        }
        Ok(TailIntegralSpec { a, c, b, p, v0 })
    }
}

/// Upper bound with unit panels. Returns `[0, U]`.
pub fn tail_upper_bound(spec: &TailIntegralSpec, prec: Precision) -> Result<Interval> {
    tail_upper_bound_panels(spec, prec, &Interval::from_i64(1, prec.bits))
}

/// Upper bound with panels of width `h` on the growth region.
///
/// The log-integrand `φ(v) = a v^c − b v + p ln v` is concave when p ≥ 0,
/// so on every panel it lies below its tangent at the left end; this gives
/// `∫_u^{u+h} e^φ ≤ e^{φ(u)} (e^{φ'(u) h} − 1)/φ'(u)`. Once `φ'(u) ≤ −b/2`
/// the rest of the tail is bounded by `e^{φ(u)}/(−φ'(u))`. For p < 0 the
/// factor `v^p` is bounded by its value at the left end instead.
pub fn tail_upper_bound_panels(spec: &TailIntegralSpec, prec: Precision, h: &Interval) -> Result<Interval> {
    let bits = prec.bits;
    let w = bits + 16;
    let zero = Interval::from_i64(0, w);
    let one = Interval::from_i64(1, w);
    if !h.is_positive() {
        return Err(Error::DomainError("panel width must be positive".into()));
    }
    // worst-case parameters: on v ≥ 1 the integrand grows with a, c and p
    // and shrinks with b
    let a = spec.a.upper().with_prec(w);
    let b = spec.b.lower().with_prec(w);
    let v0 = spec.v0.lower().with_prec(w);
    let c_is_one = !spec.c.certainly_lt(&Interval::from_i64(1, bits));

    if v0.certainly_le(&zero) {
        let p_lo = spec.p.lower().with_prec(w);
        if !p_lo.certainly_gt(&Interval::from_i64(-1, w)) {
            return Err(Error::DomainError("tail from 0 needs p > −1".into()));
        }
        if c_is_one || a.certainly_le(&zero) {
            // ∫_0^∞ v^p e^{−(b−a)v} dv = Γ(p+1)/(b−a)^{p+1}, in closed form
            let beta = if c_is_one { &b - &a } else { b.clone() };
            let g = gamma_kernel_integral(&spec.p.with_prec(w), &beta)?;
            return Ok(g.with_prec(bits).from_zero());
        }
        // ∫_0^1 e^{a v^c − b v} v^p ≤ e^a/(p+1), then the tail from 1
        let head = a.exp().div(&(&p_lo + &one))?;
        let rest = TailIntegralSpec::new(spec.a.clone(), spec.c.clone(), spec.b.clone(), spec.p.clone(), one.clone())?;
        let tail = tail_upper_bound_panels(&rest, prec, h)?;
        return Ok((&head + &tail.upper()).with_prec(bits).from_zero());
    }

    let c = if v0.certainly_ge(&one) { spec.c.upper() } else { spec.c.clone() }.with_prec(w);
    let p = if v0.certainly_ge(&one) { spec.p.upper() } else { spec.p.clone() }.with_prec(w);
    let concave = p.is_nonneg();
    let half_b = b.mul_pow2(-1);

    let phi = |u: &Interval, with_p: bool| -> Result<Interval> {
        let mut f = &(&a * &u.pow(&c)?) - &(&b * u);
        if with_p {
            f = &f + &(&p * &u.ln()?);
        }
        Ok(f)
    };
    let dphi = |u: &Interval, with_p: bool| -> Result<Interval> {
        let mut d = &(&(&a * &c) * &u.pow(&(&c - &one))?) - &b;
        if with_p {
            d = &d + &p.div(u)?;
        }
        Ok(d)
    };

    let mut total = Interval::from_i64(0, w);
    let mut u = v0.clone();
    let mut panels: u64 = 0;
    loop {
        let (f, d) = if concave { (phi(&u, true)?, dphi(&u, true)?) } else { (phi(&u, false)?, dphi(&u, false)?) };
        let vp = if concave { one.clone() } else { u.pow(&p)? };
        let dh = d.upper();
        if dh.certainly_le(&half_b.neg()) {
            let t = &(&f.upper().exp() * &vp.upper()) * &dh.neg().recip()?;
            total = &total + &t.upper();
            break;
        }
        if panels >= prec.max_subdivisions {
            return Err(Error::DepthExhausted(panels));
        }
        // (e^{s h} − 1)/s is increasing in s, so the upper slope is safe
        let piece = if dh.contains_zero() {
            // |s| tiny: bound by h·e^{max(0, s) h}
            h * &(&dh.max(&zero) * h).exp()
        } else {
            (&(&dh * h).exp() - &one).div(&dh)?
        };
        let t = &(&f.upper().exp() * &vp.upper()) * &piece.upper();
        total = &total + &t.upper();
        u = &u + h;
        u = u.lower();
        panels += 1;
    }
    Ok(total.upper().with_prec(bits).from_zero())
}

/// `∫_0^∞ v^q e^{−bv} dv = Γ(q+1)/b^{q+1}` for `q > −1`, `b > 0`.
/// The enclosure uses a certified real Gamma function, which is never
/// larger than the bounds Γ(q+1) ≤ 1 and Γ(q+1) < 1/(q+1).
pub fn gamma_kernel_integral(q: &Interval, b: &Interval) -> Result<Interval> {
    let p = q.prec().max(b.prec());
    let one = Interval::from_i64(1, p);
    if !q.certainly_gt(&one.neg()) || !q.is_finite() || !b.is_positive() {
        return Err(Error::DomainError("gamma kernel needs q > −1 and b > 0".into()));
    }
    let s = q + &one;
    s.gamma()?.div(&b.pow(&s)?)
}

/// Bounds for the two pieces of `∫_{−L}^{L} |Γ(x + iv)| dv`, x ∈ (−1, 0):
/// `|v| ≤ A` and `A < |v| ≤ L`.
#[derive(Clone, Debug)]
pub struct FiniteGammaBound {
    pub part1: Interval,
    pub part2: Interval,
    pub total: Interval,
}

/// Uses `|Γ(x+iv)| = |Γ(x+1+iv)|/|x+iv| ≤ Γ(x+1)/|x+iv|` and integrates
/// `1/|x+iv|` exactly: `∫_0^V dv/√(x²+v²) = asinh(V/|x|)`.
pub fn finite_gamma_bound_parts(x: &Interval, l: &Interval, a_split: &Interval) -> Result<FiniteGammaBound> {
    let p = x.prec().max(l.prec()).max(a_split.prec());
    let one = Interval::from_i64(1, p);
    if !x.certainly_gt(&one.neg()) || !x.is_negative() {
        return Err(Error::DomainError("alpha − beta must lie in (−1, 0)".into()));
    }
    if !a_split.is_positive() || !l.certainly_ge(a_split) {
        return Err(Error::DomainError("need L ≥ A > 0".into()));
    }
    let ax = x.neg();
    let g = (x + &one).gamma()?;
    let two_g = g.mul_pow2(1);
    let s_a = a_split.div(&ax)?.asinh()?;
    let s_l = l.div(&ax)?.asinh()?;
    let part1 = &two_g * &s_a;
    let part2 = &two_g * &(&s_l - &s_a).max(&Interval::from_i64(0, p));
    let total = &two_g * &s_l;
    Ok(FiniteGammaBound { part1, part2, total })
}

pub fn finite_gamma_bound_integral(alpha_minus_beta: &Interval, l: &Interval, a_split: &Interval) -> Result<Interval> {
    Ok(finite_gamma_bound_parts(alpha_minus_beta, l, a_split)?.total)
}

/// Certified enclosure of `|Γ(s + iv)|` for s > 0 from the product
/// `|Γ(s+iv)|² = Γ(s)² ∏_{n≥0} (1 + v²/(s+n)²)^{−1}`, truncated after
/// `n_terms` factors; the omitted factors lie in `[1, e^{v²/(s+N−1)}]`.
pub fn abs_gamma(s: &Interval, v: &Interval, n_terms: u32) -> Result<Interval> {
    if !s.is_positive() {
        return Err(Error::DomainError("abs_gamma needs s > 0".into()));
    }
    let p = s.prec().max(v.prec());
    let one = Interval::from_i64(1, p);
    let v2 = v.sqr();
    let n_terms = n_terms.max(1);
    let mut prod = one.clone();
    for n in 0..n_terms {
        let t = s + &Interval::from_i64(n as i64, p);
        prod = &prod * &(&one + &v2.div(&t.sqr())?);
    }
    let last = s + &Interval::from_i64(n_terms as i64 - 1, p);
    let tail = v2.div(&last)?.exp();
    let g2 = s.gamma()?.sqr();
    let hi = g2.div(&prod)?;
    let lo = g2.div(&(&prod * &tail))?;
    lo.hull(&hi).sqrt()
}

/// Certified lower bound for `2∫_{a}^{b} |Γ(x + iv)| dv` with x ∈ (−1, 0)
/// and 0 < a < b, as a lower Riemann sum on geometric panels: the
/// integrand decreases in |v|, so each panel takes its right end value.
pub fn abs_gamma_integral_lower(x: &Interval, a: &Interval, b: &Interval, panels: u32) -> Result<Interval> {
    let p = x.prec();
    if !a.is_positive() || !a.certainly_lt(b) {
        return Err(Error::DomainError("need 0 < a < b".into()));
    }
    let s = x + &Interval::from_i64(1, p);
    let start = a.upper();
    let end = b.lower();
    let (a0, b0) = (start.hi_f64(), end.lo_f64());
    let ratio = (b0 / a0).ln() / panels as f64;
    let mut prev = start.clone();
    let mut sum = Interval::from_i64(0, p);
    for k in 1..=panels {
        let v = if k == panels { end.clone() } else { Interval::from_f64(a0 * (ratio * k as f64).exp(), p) };
        if !v.certainly_gt(&prev) {
            continue;
        }
        let n = 256 + (64.0 * v.hi_f64() * v.hi_f64()).ceil() as u32;
        let g = abs_gamma(&s, &v, n)?;
        let r = (&x.sqr() + &v.sqr()).sqrt()?;
        let f = g.div(&r)?;
        sum = &sum + &(&(&v - &prev).lower() * &f.lower());
        prev = v;
    }
    Ok(sum.lower().mul_pow2(1))
}
