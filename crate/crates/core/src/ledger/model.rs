//! The quantities of the zero-density proof as interval functions of
//! ℓ = log T and δ = 1 − σ, with α = 5σ − 4 = 1 − 5δ substituted.
//!
//! Anything that is unbounded in ℓ is written so that it stays finite on
//! boxes reaching ℓ = ∞: exponents go through [`LogExpr`], and the ratio
//! log Y / log T uses the zero-free gap δ ≥ g(ℓ) instead of 1/δ.

use crate::bounds::{j_function_log, ZeroFreeRegionId};
use crate::error::{Error, Result};
use crate::interval::{const_ln2, const_pi, Ext, Interval};

/// Numeric constants of the argument at one precision.
#[derive(Clone, Debug)]
pub struct Model {
    pub p: u32,
    /// A = 70.6995 in the Richert bound
    pub a: Interval,
    pub ln_a: Interval,
    pub d1: Interval,
    pub d2: Interval,
    pub ln_d1: Interval,
    pub ln_d2: Interval,
    pub ln2: Interval,
    pub ln3: Interval,
    pub ln5: Interval,
    pub ln10: Interval,
    pub pi: Interval,
    pub sqrt_2pi: Interval,
    /// 4.43795·5^{3/2}, so that 4.43795(1−α)^{3/2} = c_a δ^{3/2}
    pub c_a: Interval,
    /// (7/12)·c_a ≈ 28.9437
    pub c_y: Interval,
    /// log D2 + log A
    pub k1: Interval,
    /// c0 = (1 − 1/Y + 1/(2Y²) − D)/2 over Y ≥ 10^85, D ∈ [0, 10^−5]
    pub c0: Interval,
}

impl Model {
    pub fn new(p: u32) -> Model {
        let d = |s: &str| Interval::dec(s, p);
        let a = d("70.6995");
        let d1 = d("1.01e12");
        let d2 = d("7.26e6");
        let ln_a = a.ln().unwrap();
        let ln_d2 = d2.ln().unwrap();
        let pi = const_pi(p);
        let c_a = &(&d("4.43795") * &Interval::from_i64(5, p)) * &Interval::from_i64(5, p).sqrt().unwrap();
        let zero = Interval::from_i64(0, p);
        let eps = zero.hull(&d("1e-85"));
        let dd = zero.hull(&d("1e-5"));
        let c0 = (&(&Interval::from_i64(1, p) - &eps) - &dd).mul_pow2(-1);
        Model {
            p,
            k1: &ln_d2 + &ln_a,
            ln_d1: d1.ln().unwrap(),
            ln2: const_ln2(p),
            ln3: Interval::from_i64(3, p).ln().unwrap(),
            ln5: Interval::from_i64(5, p).ln().unwrap(),
            ln10: Interval::from_i64(10, p).ln().unwrap(),
            sqrt_2pi: pi.mul_pow2(1).sqrt().unwrap(),
            c_y: &Interval::from_ratio(7, 12, p) * &c_a,
            a,
            ln_a,
            d1,
            d2,
            ln_d2,
            pi,
            c_a,
            c0,
        }
    }

    pub fn c(&self, s: &str) -> Interval {
        Interval::dec(s, self.p)
    }

    pub fn r(&self, n: i64, d: i64) -> Interval {
        Interval::from_ratio(n, d, self.p)
    }

    pub fn int(&self, v: i64) -> Interval {
        Interval::from_i64(v, self.p)
    }

    /// Exponent coefficient a(δ) = 4.43795(5δ)^{3/2}.
    pub fn a_of(&self, delta: &Interval) -> Result<Interval> {
        Ok(&self.c_a * &(&delta.sqr() * delta).sqrt()?)
    }

    pub fn alpha(&self, delta: &Interval) -> Interval {
        &self.int(1) - &(&self.int(5) * delta)
    }

    /// log(1 + log 3/ℓ), bounded for every ℓ ≥ 1.
    pub fn ln1p3(&self, ell: &Interval) -> Result<Interval> {
        (&self.int(1) + &self.ln3.div(ell)?).ln()
    }

    /// log log(3T) = log ℓ + log(1 + log 3/ℓ).
    pub fn ln_l3(&self, ell: &Interval) -> Result<Interval> {
        Ok(&ell.ln()? + &self.ln1p3(ell)?)
    }

    /// log 𝓜(α, 3T).
    pub fn ln_m3(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        let a = self.a_of(delta)?;
        Ok(&(&self.ln_a + &(&a * &(ell + &self.ln3))) + &(&self.r(2, 3) * &self.ln_l3(ell)?))
    }

    /// 2δ log Y = (7/6)(log D2 + log 𝓜(α,3T)) + (1661/600) log ℓ.
    pub fn two_delta_ly(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        Ok(&(&self.r(7, 6) * &(&self.ln_d2 + &self.ln_m3(ell, delta)?)) + &(&self.r(1661, 600) * &ell.ln()?))
    }

    /// δ log X = (log D1 + log 𝓜(α,3T) + 5 log ℓ)/3.
    pub fn delta_lx(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        Ok(&(&(&self.ln_d1 + &self.ln_m3(ell, delta)?) + &(&self.int(5) * &ell.ln()?)) * &self.r(1, 3))
    }

    /// F(ℓ) with log Y = F/δ + c_Y δ^{1/2}(ℓ + log 3).
    fn f_y(&self, ell: &Interval) -> Result<Interval> {
        Ok(&(&(&self.r(7, 12) * &self.k1) + &(&self.r(7, 18) * &self.ln_l3(ell)?)) + &(&self.r(1661, 1200) * &ell.ln()?))
    }

    /// F(ℓ)/ℓ, finite on unbounded ℓ.
    fn f_y_over_l(&self, ell: &Interval) -> Result<Interval> {
        let psi = ell.log_decay(&self.int(1), &self.int(1))?;
        let inv = ell.recip()?;
        let s = &(&(&self.r(7, 12) * &self.k1) * &inv) + &(&self.r(7, 18) * &(&psi + &(&self.ln1p3(ell)? * &inv)));
        Ok(&s + &(&self.r(1661, 1200) * &psi))
    }

    /// log Y, natural evaluation (upper end infinite when δ may vanish).
    pub fn ly(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        let f = self.f_y(ell)?;
        Ok(&(&f * &delta.inv_positive()?) + &(&(&self.c_y * &delta.sqrt()?) * &(ell + &self.ln3)))
    }

    /// log X, natural evaluation.
    pub fn lx(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        let g = &(&(&(&self.ln_d1 + &self.ln_a) + &(&self.r(2, 3) * &self.ln_l3(ell)?)) + &(&self.int(5) * &ell.ln()?)) * &self.r(1, 3);
        let k = &self.c_a * &self.r(1, 3);
        Ok(&(&g * &delta.inv_positive()?) + &(&(&k * &delta.sqrt()?) * &(ell + &self.ln3)))
    }

    /// Upper bound for 1/(g(ℓ) ℓ), so that 1/(δℓ) ≤ this whenever δ ≥ g(ℓ).
    /// Only for finite ℓ.
    fn inv_gap_l(&self, region: ZeroFreeRegionId, ell: &Interval) -> Result<Interval> {
        let lam = ell.ln()?;
        match region {
            ZeroFreeRegionId::Classical => Ok(self.c("5.558691")),
            ZeroFreeRegionId::Intermediate => {
                let j = j_function_log(ell)?;
                let num = &(&j + &self.c("0.685")) + &(&self.c("0.155") * &lam);
                let den = &(&self.c("0.04962") - &self.c("0.0196").div(&(&j + &self.c("1.15")))?) * ell;
                num.div(&den)
            }
            ZeroFreeRegionId::Littlewood => self.c("21.233").div(&lam),
            ZeroFreeRegionId::KorobovVinogradov => Ok(&self.c("53.989") * &ell.log_decay(&self.r(1, 3), &self.r(1, 3))?),
        }
    }

    /// Enclosure of log Y / log T over a box where δ ≥ g_region(ℓ) holds
    /// pointwise; the upper end stays finite as ℓ → ∞ for the
    /// Korobov–Vinogradov region.
    pub fn ratio(&self, ell: &Interval, delta: &Interval, region: Option<ZeroFreeRegionId>) -> Result<Interval> {
        let tail = &(&self.c_y * &delta.sqrt()?) * &(&self.int(1) + &self.ln3.div(ell)?);
        let nat = &(&self.f_y_over_l(ell)? * &delta.inv_positive()?) + &tail;
        let alt = match region {
            None => None,
            Some(ZeroFreeRegionId::KorobovVinogradov) if !ell.is_finite() => {
                // F·ℓ^{-1/3}(log ℓ)^{1/3}, term by term
                let q1 = ell.log_decay(&self.r(1, 3), &self.r(1, 3))?;
                let q4 = ell.log_decay(&self.r(1, 3), &self.r(4, 3))?;
                let fq = &(&(&self.r(7, 12) * &self.k1) * &q1)
                    + &(&(&self.r(7, 18) * &(&q4 + &(&self.ln1p3(ell)? * &q1))) + &(&self.r(1661, 1200) * &q4));
                Some(&(&self.c("53.989") * &fq) + &tail)
            }
            Some(r) if ell.is_finite() => Some(&(&self.f_y(ell)? * &self.inv_gap_l(r, ell)?) + &tail),
            _ => None,
        };
        Ok(match alt {
            Some(a) if a.hi() < nat.hi() => Interval::new(nat.lo().clone(), a.hi().clone(), self.p)?,
            _ => nat,
        })
    }

    /// (log Y + log log Y)/log T from the ratio r = log Y/log T, which
    /// bounds log M/log T for M ≤ Y log Y. Only the upper end is sharp: the
    /// term log log Y/log T = log(r)/ℓ + log(ℓ)/ℓ is taken in [0, ·] since
    /// log Y ≥ 1, which keeps boxes with r near 0 usable.
    pub fn ratio_logm(&self, r: &Interval, ell: &Interval) -> Result<Interval> {
        let u = &r.upper().ln()?.div(ell)? + &ell.log_decay(&self.int(1), &self.int(1))?;
        let zero = self.int(0);
        Ok(r + &zero.hull(&u.upper().max(&zero)))
    }

    /// (1 + log y/y)/log 2 − 1/y, decreasing for y ≥ 2e, evaluated at the
    /// ends of the log Y enclosure.
    pub fn den_of_ly(&self, ly: &Interval) -> Result<Interval> {
        let two_e = Interval::dec("5.437", self.p);
        if !ly.certainly_ge(&two_e) {
            return Err(Error::DomainError("log Y below the monotone range".into()));
        }
        let one = self.int(1);
        let h = |e: &Ext| -> Result<Interval> {
            match e {
                Ext::PosInf => one.div(&self.ln2),
                _ => {
                    let y = Interval::new(e.clone(), e.clone(), self.p)?;
                    Ok(&(&one + &y.ln()?.div(&y)?).div(&self.ln2)? - &y.recip()?)
                }
            }
        };
        let at_hi = h(ly.hi())?;
        let at_lo = h(ly.lo())?;
        Interval::new(at_hi.lo().clone(), at_lo.hi().clone(), self.p)
    }

    /// C1 = c0/den.
    pub fn c1(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        self.c0.div(&self.den_of_ly(&self.ly(ell, delta)?)?)
    }

    /// C3 = 0.109/C1².
    pub fn c3(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        self.c("0.109").div(&self.c1(ell, delta)?.sqr())
    }

    /// C2 = 1 − 10^−4 − 2.427·10^11·C3·e^{1/(6α)}/D1 − 10^−70.
    pub fn c2(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        let e = (&self.int(6) * &self.alpha(delta)).recip()?.exp();
        let t = (&(&self.c("2.427e11") * &self.c3(ell, delta)?) * &e).div(&self.d1)?;
        Ok(&(&(&self.int(1) - &self.c("1e-4")) - &t) - &self.c("1e-70"))
    }

    /// C4 = C3·c0/(C2·C1) = C3·den/C2.
    pub fn c4(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        let den = self.den_of_ly(&self.ly(ell, delta)?)?;
        (&self.c3(ell, delta)? * &den).div(&self.c2(ell, delta)?)
    }

    /// C5 = C4·δ^{2δ}e^{−2δ}·(log M/log T)^5·(log Y/log T), with
    /// M^{2δ}e^{−2M/Y} maximal at M = Yδ.
    pub fn c5(&self, ell: &Interval, delta: &Interval, region: Option<ZeroFreeRegionId>) -> Result<Interval> {
        let r = self.ratio(ell, delta, region)?;
        let rm = self.ratio_logm(&r, ell)?;
        let w = (&xlnx(delta)?.mul_pow2(1) - &delta.mul_pow2(1)).exp();
        Ok(&(&(&self.c4(ell, delta)? * &w) * &rm.powi(5)?) * &r)
    }

    /// 𝒞 = C5·(D2 A)^{7/6}·3^{(7/6)a}·(1 + log 3/ℓ)^{7/9}.
    pub fn cal_c(&self, ell: &Interval, delta: &Interval, region: Option<ZeroFreeRegionId>) -> Result<Interval> {
        let a = self.a_of(delta)?;
        let l = &(&(&self.r(7, 6) * &self.k1) + &(&(&self.r(7, 6) * &a) * &self.ln3)) + &(&self.r(7, 9) * &self.ln1p3(ell)?);
        Ok(&self.c5(ell, delta, region)? * &l.exp())
    }

    /// d = 1/log 2 − 1/log X.
    pub fn d_of(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        Ok(&self.ln2.recip()? - &self.lx(ell, delta)?.recip()?)
    }

    /// C6 = c0/(2.7 d), using the lower end of c0.
    pub fn c6(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        self.c0.lower().div(&(&self.c("2.7") * &self.d_of(ell, delta)?))
    }

    pub fn c7(&self) -> Interval {
        &(&(&self.int(1) - &self.c("1e-30")) - &self.c("1e-10")) - &self.c("1e-80")
    }

    /// C8 = 1/(C7 C6²).
    pub fn c8(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        (&self.c7() * &self.c6(ell, delta)?.sqr()).recip()
    }

    /// C9 = A^{2/3} 3^{(2/3)a} (1 + log 3/ℓ)^{4/9} D2^{−14/3} D1^{10/3}.
    pub fn c9(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        let a = self.a_of(delta)?;
        let mut l = &(&self.r(2, 3) * &self.ln_a) + &(&(&self.r(2, 3) * &a) * &self.ln3);
        l = &l + &(&self.r(4, 9) * &self.ln1p3(ell)?);
        l = &l - &(&self.r(14, 3) * &self.ln_d2);
        l = &l + &(&self.r(10, 3) * &self.ln_d1);
        Ok(l.exp())
    }

    /// C10 = d·C8·C9.
    pub fn c10(&self, ell: &Interval, delta: &Interval) -> Result<Interval> {
        Ok(&(&self.d_of(ell, delta)? * &self.c8(ell, delta)?) * &self.c9(ell, delta)?)
    }

    /// Tangent bound for log ∫_{v0}^∞ e^{a v^c − b v} v^p dv with v0 = ℓ^k:
    /// a v0^c − b v0 + p log v0 − log(b − a c v0^{c−1} − p⁺/v0).
    /// The log-integrand is concave for p ≥ 0, and for p < 0 the factor v^p
    /// is at most v0^p, so in both cases it lies below its tangent at v0.
    pub fn tail_log(&self, a: &Interval, c: (i64, i64), b: &Interval, p: &Interval, k: (i64, i64), ell: &Interval) -> Result<LogExpr> {
        let v0 = ell.pow_ratio(k.0, k.1)?;
        let cm1 = (c.0 - c.1, c.1);
        let slope = &(&(a * &self.r(c.0, c.1)) * &v0.pow(&self.r(cm1.0, cm1.1))?) + &p.max(&self.int(0)).div(&v0)?;
        let rate = b - &slope;
        if !rate.is_positive() {
            return Err(Error::NotDecaying("tail integrand not yet decaying at the lower limit".into()));
        }
        let mut e = LogExpr::new(self.p);
        e.add_pow((k.0 * c.0, k.1 * c.1), a.clone());
        e.add_pow(k, b.neg());
        e.add_lam(&self.r(k.0, k.1) * p);
        e.add_c(rate.ln()?.neg());
        Ok(e)
    }
}

/// δ log δ for δ ∈ [0, 1/e], where it decreases; 0 at δ = 0.
pub fn xlnx(delta: &Interval) -> Result<Interval> {
    let p = delta.prec();
    if !delta.is_nonneg() || !delta.certainly_le(&Interval::dec("0.36", p)) {
        return Err(Error::DomainError("x log x needs 0 ≤ x ≤ 1/e".into()));
    }
    let at = |e: &Ext| -> Result<Interval> {
        let x = Interval::new(e.clone(), e.clone(), p)?;
        if x.is_positive() {
            Ok(&x * &x.ln()?)
        } else {
            Ok(Interval::from_i64(0, p))
        }
    };
    let hi = at(delta.lo())?;
    let lo = at(delta.hi())?;
    Interval::new(lo.lo().clone(), hi.hi().clone(), p)
}

/// `c + Σ coeff·ℓ^κ + lam·log ℓ + lnlam·log log ℓ`, the logarithm of a
/// product of powers of ℓ, log ℓ and exponentials of powers of ℓ.
///
/// On a finite ℓ box it is evaluated term by term. When ℓ reaches ∞ it is
/// factored as ℓ^K·(Σ coeff·ℓ^{κ−K} + ...) with K the largest power, so
/// that a negative leading coefficient gives a finite upper bound.
#[derive(Clone, Debug)]
pub struct LogExpr {
    p: u32,
    pows: Vec<((i64, i64), Interval)>,
    lam: Interval,
    lnlam: Interval,
    c: Interval,
}

impl LogExpr {
    pub fn new(p: u32) -> LogExpr {
        let z = Interval::from_i64(0, p);
        LogExpr { p, pows: Vec::new(), lam: z.clone(), lnlam: z.clone(), c: z }
    }

    pub fn add_pow(&mut self, k: (i64, i64), coeff: Interval) -> &mut Self {
        if let Some(slot) = self.pows.iter_mut().find(|(q, _)| q.0 * k.1 == k.0 * q.1) {
            slot.1 = &slot.1 + &coeff;
        } else {
            self.pows.push((k, coeff));
        }
        self
    }

    pub fn add_lam(&mut self, coeff: Interval) -> &mut Self {
        self.lam = &self.lam + &coeff;
        self
    }

    pub fn add_lnlam(&mut self, coeff: Interval) -> &mut Self {
        self.lnlam = &self.lnlam + &coeff;
        self
    }

    pub fn add_c(&mut self, v: Interval) -> &mut Self {
        self.c = &self.c + &v;
        self
    }

    pub fn scale(&mut self, k: &Interval) -> &mut Self {
        for (_, v) in self.pows.iter_mut() {
            *v = &*v * k;
        }
        self.lam = &self.lam * k;
        self.lnlam = &self.lnlam * k;
        self.c = &self.c * k;
        self
    }

    pub fn add(&mut self, o: &LogExpr) -> &mut Self {
        for (k, v) in &o.pows {
            self.add_pow(*k, v.clone());
        }
        self.add_lam(o.lam.clone());
        self.add_lnlam(o.lnlam.clone());
        self.add_c(o.c.clone())
    }

    /// Enclosure of the expression over ℓ (ℓ > e).
    pub fn eval(&self, ell: &Interval) -> Result<Interval> {
        let lam = ell.ln()?;
        if ell.is_finite() {
            let mut s = &(&self.c + &(&self.lam * &lam)) + &(&self.lnlam * &lam.ln()?);
            for (k, v) in &self.pows {
                s = &s + &(v * &ell.pow_ratio(k.0, k.1)?);
            }
            return Ok(s);
        }
        let top = self.pows.iter().map(|(k, _)| *k).fold((1, 1), |a, b| if b.0 * a.1 > a.0 * b.1 { b } else { a });
        let one = Interval::from_i64(1, self.p);
        let kk = Interval::from_ratio(top.0, top.1, self.p);
        let psi = ell.log_decay(&kk, &one)?;
        let mut s = &(&self.c * &ell.pow_ratio(-top.0, top.1)?) + &(&self.lam * &psi);
        s = &s + &(&(&self.lnlam * &psi) * &lam.log_decay(&one, &one)?);
        for (k, v) in &self.pows {
            let (n, d) = (k.0 * top.1 - top.0 * k.1, k.1 * top.1);
            let f = if n == 0 { one.clone() } else { ell.pow_ratio(n, d)? };
            s = &s + &(v * &f);
        }
        Ok(&ell.pow_ratio(top.0, top.1)? * &s)
    }

    pub fn exp(&self, ell: &Interval) -> Result<Interval> {
        Ok(self.eval(ell)?.exp())
    }
}
