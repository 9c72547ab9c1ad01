//! The check registry. Each check returns a list of items: either a claim
//! over parameter boxes, settled by branch-and-bound, or an already decided
//! scalar or exact comparison.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bnb::{Direction, ParamBox, Verdict};
use super::model::{xlnx, LogExpr, Model};
use super::SubResult;
use crate::bounds::{
    divisor_coefficient, j_function_log, nt_upper, stirling_gamma_upper, widest_region_log, zero_free_gap_log, TRange,
    ZeroFreeRegionId,
};
use crate::density::{t_regime_boundary, ConstantTable};
use crate::error::{Error, Result};
use crate::interval::{Interval, Precision};
use crate::oracle::gamma_reference;
use crate::quadrature::{abs_gamma_integral_lower, gamma_kernel_integral, tail_upper_bound, TailIntegralSpec};

pub type BoxFn = Arc<dyn Fn(&Model, &ParamBox) -> Result<Interval> + Send + Sync>;

/// A claim quantified over boxes.
#[derive(Clone)]
pub struct BoxClaim {
    pub label: String,
    pub boxes: Vec<ParamBox>,
    pub eval: BoxFn,
    pub witness: Option<BoxFn>,
    pub dir: Direction,
    pub claim: Interval,
}

pub enum Item {
    Boxed(BoxClaim),
    Done(SubResult),
}

pub struct CheckDef {
    pub id: &'static str,
    pub anchor: &'static str,
    pub notes: &'static str,
    pub build: fn(&Model) -> Vec<Item>,
}

fn boxed(label: impl Into<String>, boxes: Vec<ParamBox>, dir: Direction, claim: Interval, eval: BoxFn) -> Item {
    Item::Boxed(BoxClaim { label: label.into(), boxes, eval, witness: None, dir, claim })
}

/// Compare a single enclosure with the claim.
pub fn direct(label: impl Into<String>, v: Result<Interval>, dir: Direction, claim: Interval) -> Item {
    let label = label.into();
    let p = claim.prec();
    let (verdict, computed) = match v {
        Err(_) => (Verdict::Inconclusive, Interval::entire(p)),
        Ok(v) => {
            let (ok, bad) = match dir {
                Direction::Le => (v.hi() <= claim.lo(), v.lo() > claim.hi()),
                Direction::Ge => (v.lo() >= claim.hi(), v.hi() < claim.lo()),
            };
            let verdict = if ok {
                Verdict::Pass
            } else if bad {
                Verdict::Fail
            } else {
                Verdict::Inconclusive
            };
            (verdict, v)
        }
    };
    Item::Done(SubResult { label, verdict, computed, claimed: claim, dir, subdivisions: 0, witness: None })
}

fn exact(label: impl Into<String>, ok: bool, computed: Interval, claim: Interval, dir: Direction) -> Item {
    let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    Item::Done(SubResult { label: label.into(), verdict, computed, claimed: claim, dir, subdivisions: 0, witness: None })
}

fn range_boxes(m: &Model) -> Vec<ParamBox> {
    TRange::ALL.iter().map(|&r| ParamBox::range_box(r, m.p)).collect()
}

fn per_range(m: &Model, claims: [&str; 4], dir: Direction, f: fn(&Model, &ParamBox) -> Result<Interval>) -> Vec<Item> {
    TRange::ALL
        .iter()
        .map(|&r| boxed(r.name(), vec![ParamBox::range_box(r, m.p)], dir, m.c(claims[r.index()]), Arc::new(f)))
        .collect()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_interval(q: &BigRational, p: u32) -> Interval {
    Interval::from_bigint(q.numer(), p).div(&Interval::from_bigint(q.denom(), p)).unwrap()
}

/// Exact value of a decimal literal such as "1.04e24".
fn dec_rat(s: &str) -> BigRational {
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((a, e)) => (a, e.parse::<i32>().expect("decimal exponent")),
        None => (s, 0),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
    let e = exp - frac.len() as i32;
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize));
    let d = BigRational::from_integer(digits);
    if e >= 0 {
        d * scale
    } else {
        d / scale
    }
}

fn exact_le(label: impl Into<String>, lhs: BigRational, rhs: BigRational, p: u32) -> Item {
    exact(label, lhs <= rhs, rat_interval(&lhs, p), rat_interval(&rhs, p), Direction::Le)
}

fn exact_eq(label: &str, lhs: BigRational, rhs: BigRational, p: u32) -> Item {
    exact(label, lhs == rhs, rat_interval(&lhs, p), rat_interval(&rhs, p), Direction::Le)
}

fn ln_m3(m: &Model, b: &ParamBox) -> Result<LogExpr> {
    let (ell, delta) = (b.ell(), b.delta());
    let a = m.a_of(delta)?;
    let mut e = LogExpr::new(m.p);
    e.add_pow((1, 1), a.clone());
    e.add_lam(m.r(2, 3));
    e.add_c(&(&m.ln_a + &(&a * &m.ln3)) + &(&m.r(2, 3) * &m.ln1p3(ell)?));
    Ok(e)
}

fn scaled(e: &LogExpr, k: &Interval) -> LogExpr {
    let mut s = e.clone();
    s.scale(k);
    s
}

/// 2δ log Y as a [`LogExpr`].
fn two_delta_ly_expr(m: &Model, b: &ParamBox) -> Result<LogExpr> {
    let mut e = scaled(&ln_m3(m, b)?, &m.r(7, 6));
    e.add_c(&m.r(7, 6) * &m.ln_d2);
    e.add_lam(m.r(1661, 600));
    Ok(e)
}

/// δ log X as a [`LogExpr`].
fn delta_lx_expr(m: &Model, b: &ParamBox) -> Result<LogExpr> {
    let mut e = ln_m3(m, b)?;
    e.add_c(m.ln_d1.clone());
    e.add_lam(m.int(5));
    Ok(scaled(&e, &m.r(1, 3)))
}

/// Upper bound for −log(5δ) on a box, through the zero-free gap when δ
/// may vanish.
fn neg_ln_5delta(m: &Model, b: &ParamBox, e: &mut LogExpr) -> Result<()> {
    let d = b.delta();
    if d.is_positive() {
        e.add_c((&m.int(5) * d).ln()?.neg());
        return Ok(());
    }
    match b.region {
        Some(ZeroFreeRegionId::KorobovVinogradov) => {
            // 1/(5g) = (53.989/5) ℓ^{2/3} (log ℓ)^{1/3}
            e.add_c(m.c("53.989").div(&m.int(5))?.ln()?);
            e.add_lam(m.r(2, 3));
            e.add_lnlam(m.r(1, 3));
            Ok(())
        }
        _ => Err(Error::DomainError("δ reaches 0 outside the Korobov–Vinogradov range".into())),
    }
}

fn ratio_m(m: &Model, b: &ParamBox) -> Result<Interval> {
    let r = m.ratio(b.ell(), b.delta(), b.region)?;
    m.ratio_logm(&r, b.ell())
}

fn c1(m: &Model, b: &ParamBox) -> Result<Interval> {
    m.c1(b.ell(), b.delta())
}
fn c2(m: &Model, b: &ParamBox) -> Result<Interval> {
    m.c2(b.ell(), b.delta())
}
fn c3(m: &Model, b: &ParamBox) -> Result<Interval> {
    m.c3(b.ell(), b.delta())
}
fn c4(m: &Model, b: &ParamBox) -> Result<Interval> {
    m.c4(b.ell(), b.delta())
}
fn c5(m: &Model, b: &ParamBox) -> Result<Interval> {
    m.c5(b.ell(), b.delta(), b.region)
}
fn cal_c(m: &Model, b: &ParamBox) -> Result<Interval> {
    m.cal_c(b.ell(), b.delta(), b.region)
}
fn ratio(m: &Model, b: &ParamBox) -> Result<Interval> {
    m.ratio(b.ell(), b.delta(), b.region)
}

// ---------------------------------------------------------------------------

fn l01(m: &Model) -> Vec<Item> {
    per_range(m, ["85", "89", "100", "165"], Direction::Ge, |m, b| m.lx(b.ell(), b.delta())?.div(&m.ln10))
}

fn l02(m: &Model) -> Vec<Item> {
    vec![
        direct("c0 >= 0.49999", Ok(m.c0.clone()), Direction::Ge, m.c("0.49999")),
        direct("c0 <= 1/2", Ok(m.c0.clone()), Direction::Le, m.r(1, 2)),
    ]
}

fn l03(m: &Model) -> Vec<Item> {
    per_range(m, ["0.3386", "0.3389", "0.3395", "0.3418"], Direction::Ge, c1)
}

fn l04(m: &Model) -> Vec<Item> {
    per_range(m, ["0.9503", "0.9488", "0.9453", "0.9327"], Direction::Le, c3)
}

fn err2(m: &Model, b: &ParamBox) -> Result<Interval> {
    let (ell, delta) = (b.ell(), b.delta());
    let a = m.a_of(delta)?;
    let pre = (&(&m.a * &m.int(2).pow(&a)?) * &m.int(2)).div(&m.sqrt_2pi)?;
    let corr = &(&m.int(6) * ell).recip()?.exp() * &(&m.int(1) + &m.ln2.div(ell)?).pow_ratio(2, 3)?;
    let yfac = (&m.two_delta_ly(ell, delta)?.mul_pow2(1)).neg().exp();
    let spec = TailIntegralSpec::new(a, m.int(1), m.pi.mul_pow2(-1), &m.r(1, 6) - &(&m.int(4) * delta), ell.lower())?;
    let tail = tail_upper_bound(&spec, Precision { bits: m.p, max_subdivisions: 1_000_000 })?;
    Ok(&(&(&pre * &corr) * &yfac) * &tail)
}

/// err2 with the trivial bound |M_X| ≤ X^{1−α}/(1−α) restored, in log form.
fn err2_mx_log(m: &Model, b: &ParamBox) -> Result<LogExpr> {
    let (ell, delta) = (b.ell(), b.delta());
    let a = m.a_of(delta)?;
    let mut e = scaled(&two_delta_ly_expr(m, b)?, &m.int(-2));
    e.add(&scaled(&delta_lx_expr(m, b)?, &m.int(5)));
    neg_ln_5delta(m, b, &mut e)?;
    let pre = (&(&m.a * &m.int(2).pow(&a)?) * &m.int(2)).div(&m.sqrt_2pi)?;
    e.add_c(pre.ln()?);
    e.add_c((&m.int(6) * ell).recip()?);
    e.add_c(&m.r(2, 3) * &(&m.int(1) + &m.ln2.div(ell)?).ln()?);
    e.add(&m.tail_log(&a, (1, 1), &m.pi.mul_pow2(-1), &(&m.r(1, 6) - &(&m.int(4) * delta)), (1, 1), ell)?);
    Ok(e)
}

/// Normalised divisor band (U(2M) − L(M))/(M log³M) as a function of
/// m = log M.
fn divisor_step(m: &Model, b: &ParamBox) -> Result<Interval> {
    let mm = &b.vars[0];
    let [d1, d2, d3, d4] = crate::bounds::divisor_constants(m.p);
    let one = m.int(1);
    let r1 = &one + &m.ln2.div(mm)?;
    let two = m.int(2);
    let mut s = &d1 * &(&(&two * &r1.powi(3)?) - &one);
    s = &s + &(&d2 * &(&(&two * &r1.sqr()) - &one)).div(mm)?;
    s = &s + &(&d3 * &(&(&two * &r1) - &one)).div(&mm.sqr())?;
    s = &s + &d4.div(&mm.powi(3)?)?;
    let m3 = mm.powi(3)?;
    let q = (mm.mul_pow2(-2)).neg().exp();
    let h = (mm.mul_pow2(-1)).neg().exp();
    // θ(2M)/(M m³) and θ(M)/(M m³), θ(x) = 9.73 x^{3/4} log x + 0.73 x^{1/2}
    let t2 = &(&(&(&m.c("9.73") * &two.pow_ratio(3, 4)?) * &q) * &(&one + &m.ln2.div(mm)?)).div(&mm.sqr())? + &(&(&m.c("0.73") * &two.sqrt()?) * &h).div(&m3)?;
    let t1 = &(&m.c("9.73") * &q).div(&mm.sqr())? + &(&m.c("0.73") * &h).div(&m3)?;
    Ok(&(&s + &t2) + &t1)
}

fn l05(m: &Model) -> Vec<Item> {
    let p = m.p;
    let mbox = ParamBox::new(vec![(&m.c("85") * &m.ln10).lower().to_infinity()], None);
    let d = Interval::from_i64(0, p).hull(&m.c("0.02"));
    let mbox2 = mbox.clone();
    vec![
        boxed("err2 <= 1e-12", range_boxes(m), Direction::Le, m.c("1e-12"), Arc::new(err2)),
        direct(
            "A 2^a/sqrt(2 pi) <= 31.09",
            m.a_of(&d).and_then(|a| (&m.a * &m.int(2).pow(&a)?).div(&m.sqrt_2pi)),
            Direction::Le,
            m.c("31.09"),
        ),
        boxed("divisor band on (M, 2M] <= 0.109 M log^3 M", vec![mbox], Direction::Le, m.c("0.109"), Arc::new(divisor_step)),
        boxed(
            "0.106 (2(1 + log 2/log M)^3 - 1) <= 0.109",
            vec![mbox2],
            Direction::Le,
            m.c("0.109"),
            Arc::new(|m: &Model, b: &ParamBox| {
                let r = &m.int(1) + &m.ln2.div(&b.vars[0])?;
                Ok(&m.c("0.106") * &(&(&m.int(2) * &r.powi(3)?) - &m.int(1)))
            }),
        ),
    ]
}

fn err1_log(m: &Model, b: &ParamBox) -> Result<LogExpr> {
    let (ell, delta) = (b.ell(), b.delta());
    let mut e = scaled(&two_delta_ly_expr(m, b)?, &m.r(1, 2));
    e.add_pow((1, 1), m.pi.neg());
    // (2ℓ)^{δ − 1/2}
    let ex = delta - &m.r(1, 2);
    e.add_lam(ex.clone());
    e.add_c(&ex * &m.ln2);
    e.add_c(m.sqrt_2pi.ln()?);
    e.add_c((&m.int(12) * ell).recip()?);
    Ok(e)
}

fn l06(m: &Model) -> Vec<Item> {
    vec![boxed("err1 <= 1e-10", range_boxes(m), Direction::Le, m.c("1e-10"), Arc::new(|m, b| err1_log(m, b)?.exp(b.ell())))]
}

fn err3(m: &Model, b: &ParamBox) -> Result<Interval> {
    let ly = m.ly(b.ell(), b.delta())?.lower();
    let s = &b.sigma() - &m.c("0.001");
    Ok((&s * &(&ly + &ly.ln()?)).neg().exp())
}

fn l07(m: &Model) -> Vec<Item> {
    vec![
        boxed("err3 <= 1e-10", range_boxes(m), Direction::Le, m.c("1e-10"), Arc::new(err3)),
        boxed(
            "D = err2 |M_X| + err1 + err3 <= 1e-5",
            range_boxes(m),
            Direction::Le,
            m.c("1e-5"),
            Arc::new(|m, b| {
                let ell = b.ell();
                Ok(&(&err2_mx_log(m, b)?.exp(ell)? + &err1_log(m, b)?.exp(ell)?) + &err3(m, b)?)
            }),
        ),
    ]
}

fn l08(m: &Model) -> Vec<Item> {
    let b = ParamBox::new(vec![TRange::R1.log_t_lo(m.p).lower().to_infinity()], None);
    vec![boxed(
        "2 N(2 log T) <= 0.45 log T log log T",
        vec![b],
        Direction::Le,
        m.c("0.45"),
        Arc::new(|m, b| {
            let ell = &b.vars[0];
            (&m.int(2) * &nt_upper(&ell.mul_pow2(1))?).div(&(ell * &ell.ln()?))
        }),
    )]
}

fn l09(m: &Model) -> Vec<Item> {
    per_range(m, ["98.99", "98.864", "81.93", "52.51"], Direction::Le, ratio)
}

fn l10(m: &Model) -> Vec<Item> {
    let ab = ParamBox::new(vec![m.c("0.9").hull(&m.int(1))], None);
    vec![
        boxed(
            "2 Gamma(alpha + 1/2)/(pi/2)^(alpha + 1/2) <= 1",
            vec![ab],
            Direction::Le,
            m.int(1),
            Arc::new(|m, b| Ok(gamma_kernel_integral(&(&b.vars[0] - &m.r(1, 2)), &m.pi.mul_pow2(-1))?.mul_pow2(1))),
        ),
        boxed(
            "sqrt(2/pi) (log M/log T)^5 <= 2.427e11",
            range_boxes(m),
            Direction::Le,
            m.c("2.427e11"),
            Arc::new(|m, b| Ok(&m.int(2).div(&m.pi)?.sqrt()? * &ratio_m(m, b)?.powi(5)?)),
        ),
    ]
}

fn l11(m: &Model) -> Vec<Item> {
    vec![boxed(
        "(2 log Y)^5 exp(-0.01 pi log^1.5 T) <= 1e18",
        range_boxes(m),
        Direction::Le,
        m.c("1e18"),
        Arc::new(|m, b| {
            let mut e = LogExpr::new(m.p);
            e.add_pow((3, 2), (&m.c("0.01") * &m.pi).neg());
            e.add_lam(m.int(5));
            e.add_c(&m.int(5) * &(&m.ln2 + &ratio(m, b)?.upper().ln()?));
            e.exp(b.ell())
        }),
    )]
}

fn third_term(m: &Model, b: &ParamBox, rate: &Interval, with_prefactor: bool) -> Result<Interval> {
    let (ell, delta) = (b.ell(), b.delta());
    let a = m.a_of(delta)?;
    let mut e = m.tail_log(&a, (2, 3), rate, &(&m.alpha(delta) - &m.r(1, 18)), (3, 2), ell)?;
    if with_prefactor {
        let l15 = ell.pow_ratio(3, 2)?;
        let k = &(&(&m.r(2, 1).div(&m.pi)? * &m.a) * &m.int(3).pow(&a)?) * &m.sqrt_2pi;
        e.add_c(&m.c3(ell, delta)?.ln()? + &k.ln()?);
        e.add_c(&(&m.int(6) * &l15).recip()? + &(&m.r(2, 3) * &m.ln1p3(ell)?));
        e.add_lam(m.int(5));
        e.add_c(&m.int(5) * &ratio_m(m, b)?.upper().ln()?);
    }
    e.exp(ell)
}

fn l12(m: &Model) -> Vec<Item> {
    vec![
        boxed(
            "third term coefficient <= 1e-70",
            range_boxes(m),
            Direction::Le,
            m.c("1e-70"),
            Arc::new(|m, b| third_term(m, b, &m.pi.mul_pow2(-1), true)),
        ),
        boxed(
            "tail integral at rate 0.49 pi <= 1e-99",
            range_boxes(m),
            Direction::Le,
            m.c("1e-99"),
            Arc::new(|m, b| third_term(m, b, &(&m.c("0.49") * &m.pi), false)),
        ),
    ]
}

fn l13(m: &Model) -> Vec<Item> {
    vec![boxed(
        "off-diagonal Gamma term <= 1e-4",
        range_boxes(m),
        Direction::Le,
        m.c("1e-4"),
        Arc::new(|m, b| {
            let (ell, delta) = (b.ell(), b.delta());
            let mut e = two_delta_ly_expr(m, b)?;
            e.add_pow((7, 5), m.pi.mul_pow2(-1).neg());
            e.add_lam(&m.int(5) + &m.r(7, 10));
            let k = &(&m.c3(ell, delta)? * &m.sqrt_2pi).mul_pow2(1);
            e.add_c(&k.ln()? + &m.r(1, 6));
            e.add_c(&xlnx(delta)?.mul_pow2(1) - &delta.mul_pow2(1));
            e.add_c(&m.int(5) * &ratio_m(m, b)?.upper().ln()?);
            e.exp(ell)
        }),
    )]
}

fn l14(m: &Model) -> Vec<Item> {
    per_range(m, ["0.7301", "0.7305", "0.7315", "0.7351"], Direction::Ge, c2)
}

fn l15(m: &Model) -> Vec<Item> {
    let mut items = per_range(m, ["1.9213", "1.9157", "1.9024", "1.8557"], Direction::Le, c4);
    // M^{2−2σ} e^{−2M/Y} at σ = 0.98, Y = 10^90, in the variable u = M/Y
    let ub = ParamBox::new(vec![m.c("1e-4").hull(&m.int(1))], None);
    let d = m.c("0.02");
    let ly = &m.int(90) * &m.ln10;
    let f = move |b: &ParamBox| -> Result<Interval> {
        let u = &b.vars[0];
        Ok(&(&d.mul_pow2(1) * &(&u.ln()? + &ly)) - &u.mul_pow2(1))
    };
    let target = m.c("0.02");
    let item = match super::bnb::extremum(vec![ub], &f, true, 1e-4, 100_000) {
        Ok((_, hull)) => {
            let h = hull.vars[0].clone();
            exact("maximiser M/Y of M^(2-2 sigma) exp(-2M/Y) contains 1 - sigma", h.contains(&target), h, target, Direction::Le)
        }
        Err(_) => direct("maximiser M/Y", Err(Error::DepthExhausted(100_000)), Direction::Le, target),
    };
    items.push(item);
    items
}

fn l16(m: &Model) -> Vec<Item> {
    per_range(m, ["5.785e13", "5.724e13", "1.842e13", "1.245e12"], Direction::Le, c5)
}

/// Polynomials in δ with rational coefficients, low degree first.
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn lin(c0: BigRational, c1: BigRational) -> Poly {
        Poly(vec![c0, c1]).trim()
    }
    fn trim(mut self) -> Poly {
        while self.0.last().is_some_and(|c| *c == rat(0, 1)) {
            self.0.pop();
        }
        self
    }
    fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = rat(0, 1);
        Poly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trim()
    }
    fn scale(&self, k: &BigRational) -> Poly {
        Poly(self.0.iter().map(|c| c * k).collect()).trim()
    }
    fn mul(&self, o: &Poly) -> Poly {
        if self.0.is_empty() || o.0.is_empty() {
            return Poly(vec![]);
        }
        let mut v = vec![rat(0, 1); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] = &v[i + j] + a * b;
            }
        }
        Poly(v).trim()
    }
}

fn l17(m: &Model) -> Vec<Item> {
    let p = m.p;
    let one = Poly::lin(rat(1, 1), rat(0, 1));
    let d = Poly::lin(rat(0, 1), rat(1, 1));
    let sigma = Poly::lin(rat(1, 1), rat(-1, 1));
    let alpha = Poly::lin(rat(1, 1), rat(-5, 1));
    let num = sigma.scale(&rat(3, 1)).add(&alpha.scale(&rat(-2, 1))).add(&one.scale(&rat(-1, 1)));
    let sa = sigma.add(&alpha.scale(&rat(-1, 1)));
    let tsa = sigma.scale(&rat(2, 1)).add(&one.scale(&rat(-1, 1))).add(&alpha.scale(&rat(-1, 1)));
    let logpow = sigma.scale(&rat(-1661, 300)).add(&alpha.scale(&rat(-1661, 300))).add(&one.scale(&rat(1661, 150)));
    let poly = |label: &str, ok: bool| exact(label, ok, Interval::from_i64(ok as i64, p), Interval::from_i64(1, p), Direction::Ge);
    let ca = &m.r(7, 6) * &m.c_a;
    vec![
        poly("3 sigma - 2 alpha - 1 = 7 delta", num == d.scale(&rat(7, 1))),
        poly("sigma - alpha = 4 delta", sa == d.scale(&rat(4, 1))),
        poly("2 sigma - 1 - alpha = 3 delta", tsa == d.scale(&rat(3, 1))),
        poly("Y exponent on M(alpha, 3T) is 7/(12 delta)", num.mul(&d.scale(&rat(12, 1))) == sa.mul(&tsa).scale(&rat(7, 1))),
        poly(
            "Y log-power exponent is 1661/(1200 delta)",
            logpow.mul(&d.scale(&rat(1200, 1))) == sa.mul(&tsa).scale(&rat(2 * 1661, 1)),
        ),
        exact_eq("2 delta * 7/(12 delta) = 7/6", &rat(2, 1) * rat(7, 12), rat(7, 6), p),
        exact_eq("2 delta * (2/3) * 7/(12 delta) = 7/9", &(&rat(2, 1) * rat(2, 3)) * rat(7, 12), rat(7, 9), p),
        exact_eq("2 delta * 1661/(1200 delta) = 1661/600", &rat(2, 1) * rat(1661, 1200), rat(1661, 600), p),
        exact(
            "2 * 28.9437 <= 57.8875",
            &rat(2, 1) * rat(289437, 10000) <= rat(578875, 10000),
            m.c("57.8874"),
            m.c("57.8875"),
            Direction::Le,
        ),
        direct("(7/6) 4.43795 5^(3/2) <= 57.8875", Ok(ca), Direction::Le, m.c("57.8875")),
    ]
}

fn l18(m: &Model) -> Vec<Item> {
    per_range(m, ["1.04e24", "1.02e24", "3.22e23", "2.17e22"], Direction::Le, cal_c)
}

/// Box for the Gamma integral: ℓ ≥ log(3·10¹²), δ' = (β − α)/4 ≥ g_KV(ℓ).
fn gamma_box(m: &Model) -> ParamBox {
    let d = Interval::from_i64(0, m.p).hull(&m.c("0.025"));
    ParamBox::new(vec![TRange::R1.log_t_lo(m.p).lower().to_infinity(), d], Some(ZeroFreeRegionId::KorobovVinogradov))
}

fn gamma_parts(m: &Model, b: &ParamBox) -> Result<(Interval, Interval, Interval)> {
    let ell = b.ell();
    let x = &m.int(4) * b.delta();
    let cal_a = &m.int(4) * &zero_free_gap_log(ZeroFreeRegionId::KorobovVinogradov, ell)?;
    let two_g = (&m.int(1) - &x).gamma()?.mul_pow2(1);
    // 𝒜 ≤ x pointwise, so asinh(𝒜/x) ≤ asinh 1
    let asinh1 = m.int(1).asinh()?;
    let s_a = match cal_a.div(&x) {
        Ok(q) => q.asinh()?.min(&asinh1),
        // x reaches 0 only as log T → ∞, where 𝒜 → 0 as well
        Err(_) => Interval::from_i64(0, m.p).hull(&asinh1),
    };
    let s_l = match ell.div(&x) {
        Ok(q) => q.asinh()?,
        Err(_) => ell.lower().div(&x.upper())?.asinh()?.lower().to_infinity(),
    };
    let lam = ell.ln()?;
    let part1 = &two_g * &s_a;
    let part2 = &two_g * &(&s_l - &s_a).max(&m.int(0));
    let total = &two_g * &s_l;
    Ok((part1, part2.div(&lam)?, total.div(&lam)?))
}

/// Lower bound for 2∫_𝒜^{min(ℓ,8)} |Γ(−x + iv)| dv / log ℓ at a point.
fn gamma_witness(m: &Model, b: &ParamBox) -> Result<Interval> {
    let ell = b.ell();
    let x = &m.int(4) * b.delta();
    let cal_a = &m.int(4) * &zero_free_gap_log(ZeroFreeRegionId::KorobovVinogradov, ell)?;
    let top = ell.min(&m.int(8));
    abs_gamma_integral_lower(&x.neg(), &cal_a, &top, 64)?.div(&ell.ln()?)
}

fn l19(m: &Model) -> Vec<Item> {
    let g = gamma_box(m);
    let mk = |label: &str, claim: &str, k: usize, wit: bool| {
        let eval: BoxFn = Arc::new(move |m: &Model, b: &ParamBox| {
            let (a, b2, c) = gamma_parts(m, b)?;
            Ok([a, b2, c][k].clone())
        });
        Item::Boxed(BoxClaim {
            label: label.into(),
            boxes: vec![g.clone()],
            eval,
            witness: if wit { Some(Arc::new(gamma_witness)) } else { None },
            dir: Direction::Le,
            claim: m.c(claim),
        })
    };
    vec![
        mk("2 int_0^A |Gamma| <= 2.06", "2.06", 0, false),
        mk("2 int_A^logT |Gamma| <= 2.06 log log T", "2.06", 1, true),
        mk("int_{|v|<=log T} |Gamma| <= 2.7 log log T", "2.7", 2, true),
    ]
}

fn l20(m: &Model) -> Vec<Item> {
    vec![
        boxed("C6 >= 0.128", range_boxes(m), Direction::Ge, m.c("0.128"), Arc::new(|m, b| m.c6(b.ell(), b.delta()))),
        boxed("d <= 1.45", range_boxes(m), Direction::Le, m.c("1.45"), Arc::new(|m, b| m.d_of(b.ell(), b.delta()))),
    ]
}

fn p1(m: &Model, b: &ParamBox) -> Result<Interval> {
    let (ell, delta) = (b.ell(), b.delta());
    let a = m.a_of(delta)?;
    let mut e = m.tail_log(&a, (1, 2), &m.pi.mul_pow2(-1), &(&m.alpha(delta) - &m.r(1, 6)), (2, 1), ell)?;
    e.add_lam(m.c("-0.74"));
    e.add_lnlam(m.int(2));
    let k = (&(&m.int(5).pow(&a)? * &m.sqrt_2pi).mul_pow2(1)).div(&m.pi)?;
    e.add_c(k.ln()?);
    e.add_c((&m.int(6) * &ell.sqr()).recip()?);
    e.add_c(&m.r(2, 3) * &(&m.int(1) + &m.ln5.div(ell)?).ln()?);
    e.add_c(&(&m.r(5, 3) * &m.ln_d1) - &(&m.r(14, 3) * &m.ln_d2));
    e.add_c(m.c6(ell, delta)?.ln()?.mul_pow2(1).neg());
    e.exp(ell)
}

fn l21(m: &Model) -> Vec<Item> {
    vec![
        boxed("p1 <= 1e-80", range_boxes(m), Direction::Le, m.c("1e-80"), Arc::new(p1)),
        boxed("C9 <= 1.92e9", range_boxes(m), Direction::Le, m.c("1.92e9"), Arc::new(|m, b| m.c9(b.ell(), b.delta()))),
    ]
}

fn l22(m: &Model) -> Vec<Item> {
    vec![boxed(
        "p2 <= 1e-30",
        range_boxes(m),
        Direction::Le,
        m.c("1e-30"),
        Arc::new(|m, b| {
            let (ell, delta) = (b.ell(), b.delta());
            let a = m.a_of(delta)?;
            let mut e = LogExpr::new(m.p);
            e.add_pow((1, 1), &m.r(2, 3) * &a);
            e.add_pow((7, 5), m.pi.mul_pow2(-1).neg());
            e.add_lam(&m.r(2717, 450) + &m.r(27, 10));
            e.add_lnlam(m.int(2));
            let k = (&(&m.c9(ell, delta)? * &m.sqrt_2pi).mul_pow2(1)).div(&m.c6(ell, delta)?.sqr())?;
            e.add_c(&k.ln()? + &m.r(1, 6));
            e.exp(ell)
        }),
    )]
}

fn l23(m: &Model) -> Vec<Item> {
    let lb = ParamBox::new(vec![TRange::R1.log_t_lo(m.p).lower().to_infinity()], None);
    vec![
        boxed(
            "p3 <= 1e-10",
            range_boxes(m),
            Direction::Le,
            m.c("1e-10"),
            Arc::new(|m, b| {
                let (ell, delta) = (b.ell(), b.delta());
                let k = &(&m.int(2).div(&m.pi)?.sqrt()? * &(&m.int(6) * &m.alpha(delta)).recip()?.exp())
                    * &(&(&m.r(5, 3) * &m.ln_d1) - &(&m.r(14, 3) * &m.ln_d2)).exp();
                (&k * &ell.log_decay(&m.c("0.74"), &m.int(2))?).div(&m.c6(ell, delta)?.sqr())
            }),
        ),
        boxed(
            "log log T <= (log T)^0.37",
            vec![lb],
            Direction::Le,
            m.int(1),
            Arc::new(|m, b| b.vars[0].log_decay(&m.c("0.37"), &m.int(1))),
        ),
        direct("C7 >= 0.9999", Ok(m.c7()), Direction::Ge, m.c("0.9999")),
        boxed("C8 <= 61.05", range_boxes(m), Direction::Le, m.c("61.05"), Arc::new(|m, b| m.c8(b.ell(), b.delta()))),
    ]
}

fn l24(m: &Model) -> Vec<Item> {
    vec![boxed("C10 <= 1.7e11", range_boxes(m), Direction::Le, m.c("1.7e11"), Arc::new(|m, b| m.c10(b.ell(), b.delta())))]
}

fn l25(m: &Model) -> Vec<Item> {
    let cal = ["1.04e24", "1.02e24", "3.22e23", "2.17e22"];
    let k45 = dec_rat("0.45");
    let mut v: Vec<Item> = TRange::ALL
        .iter()
        .map(|&r| {
            let k = r.index();
            exact_le(format!("{} 0.45 * C <= C1 table", r.name()), &k45 * dec_rat(cal[k]), dec_rat(ConstantTable::C1[k]), m.p)
        })
        .collect();
    v.push(exact_le("0.45 * C10 <= C2 table", &k45 * dec_rat("1.7e11"), dec_rat(ConstantTable::C2), m.p));
    v.push(exact_le("third term 0.45 * 1 <= 0.27", k45, dec_rat(ConstantTable::THIRD), m.p));
    v
}

fn l26(m: &Model) -> Vec<Item> {
    let p = m.p;
    let ca = m.c_a.clone();
    let c_y = &m.r(7, 12) * &ca;
    let dev = (&c_y - &m.c("28.9437")).abs();
    vec![
        exact_eq("17183/1800 + 7/5 = 19703/1800", rat(17183, 1800) + rat(7, 5), rat(19703, 1800), p),
        exact_eq("88/9 + 7/5 = 503/45", rat(88, 9) + rat(7, 5), rat(503, 45), p),
        exact_eq("503/45 + 37/100 = 10393/900", rat(503, 45) + rat(37, 100), rat(10393, 900), p),
        exact_eq("4067/450 + 37/50 = 88/9", rat(4067, 450) + rat(37, 50), rat(88, 9), p),
        exact_eq("6 + 7/9 + 1661/600 = 17183/1800", rat(6, 1) + rat(7, 9) + rat(1661, 600), rat(17183, 1800), p),
        exact_eq("1289/150 + 4/9 = 4067/450", rat(1289, 150) + rat(4, 9), rat(4067, 450), p),
        exact_eq("25/3 - 1661/150 = -2.74", rat(25, 3) - rat(1661, 150), rat(-274, 100), p),
        exact_eq("5/3 - 14/3 + 3 = 0", rat(5, 3) - rat(14, 3) + rat(3, 1), rat(0, 1), p),
        exact_eq("503/45 - 19703/1800 = 417/1800", rat(503, 45) - rat(19703, 1800), rat(417, 1800), p),
        exact_eq("10393/900 - 3 = 7693/900", rat(10393, 900) - rat(3, 1), rat(7693, 900), p),
        direct("(2/3) 4.43795 5^(3/2) <= 33.08", Ok(&m.r(2, 3) * &ca), Direction::Le, m.c("33.08")),
        direct("(7/6) 4.43795 5^(3/2) <= 57.8875", Ok(&m.r(7, 6) * &ca), Direction::Le, m.c("57.8875")),
        exact("2 * 28.9437 <= 57.8875", &rat(2, 1) * rat(289437, 10000) <= rat(578875, 10000), m.c("57.8874"), m.c("57.8875"), Direction::Le),
        direct("|(7/12) 4.43795 5^(3/2) - 28.9437| <= 5e-5", Ok(dev), Direction::Le, m.c("5e-5")),
        exact_eq("10393/900 = 11.5477...", rat(10393, 900), rat(10393, 900), p),
    ]
}

fn l27(m: &Model) -> Vec<Item> {
    let v = t_regime_boundary(&m.int(1), &m.c(ConstantTable::C1_PRIME[3]));
    vec![direct("crossing log T <= 6.7e12", v, Direction::Le, m.c(ConstantTable::HIGH_LOG_T))]
}

fn l28(m: &Model) -> Vec<Item> {
    let d = Interval::from_i64(0, m.p).hull(&m.c("0.02"));
    let b = ParamBox::new(vec![m.c(ConstantTable::HIGH_LOG_T).lower().to_infinity(), d], Some(ZeroFreeRegionId::KorobovVinogradov));
    vec![boxed(
        "high-range density constant <= 4.45e12 for log T >= 6.7e12",
        vec![b],
        Direction::Le,
        m.c(ConstantTable::C_HIGH),
        Arc::new(|m, b| {
            let (ell, delta) = (b.ell(), b.delta());
            let t1 = &m.cal_c(ell, delta, b.region)? * &ell.pow_ratio(-417, 1800)?;
            let t3 = ell.pow(&(&m.r(503, 45) - &m.r(7, 5)).neg())?;
            Ok(&m.c("0.45") * &(&(&t1 + &m.c10(ell, delta)?) + &t3))
        }),
    )]
}

fn l29(m: &Model) -> Vec<Item> {
    [("40", ZeroFreeRegionId::Classical), ("100", ZeroFreeRegionId::Intermediate), ("1e4", ZeroFreeRegionId::Littlewood), ("1e6", ZeroFreeRegionId::KorobovVinogradov)]
        .iter()
        .map(|(l, want)| {
            let got = widest_region_log(&m.c(l));
            let ok = got.as_ref().is_ok_and(|g| g == want);
            let idx = |r: ZeroFreeRegionId| Interval::from_i64(r as i64, m.p);
            let computed = got.map(idx).unwrap_or_else(|_| Interval::entire(m.p));
            exact(format!("widest region at log T = {l} is {}", want.name()), ok, computed, idx(*want), Direction::Ge)
        })
        .collect()
}

fn l30(m: &Model) -> Vec<Item> {
    vec![direct("divisor coefficient at x = 1e85 <= 0.106", divisor_coefficient(&m.c("1e85")), Direction::Le, m.c("0.106"))]
}

fn l31(m: &Model) -> Vec<Item> {
    let p = m.p;
    let prec = Precision { bits: p, max_subdivisions: 1_000_000 };
    let mut worst: Option<Interval> = None;
    let mut err = false;
    for k in 0..=10 {
        let s = k as f64 / 10.0;
        for t in 1..=100 {
            let t = t as f64;
            let sg = Interval::from_f64(s, p);
            let tv = Interval::from_f64(t, p);
            let z = (&sg.sqr() + &tv.sqr()).sqrt().unwrap();
            match (stirling_gamma_upper(&sg, &tv, &z), gamma_reference(s, t, prec)) {
                (Ok(b), Ok(r)) => {
                    let q = b.lower().div(&r.upper()).unwrap();
                    worst = Some(match worst {
                        None => q,
                        Some(w) => w.min(&q),
                    });
                }
                _ => err = true,
            }
        }
    }
    let v = if err { Err(Error::Inconclusive("grid point failed".into())) } else { Ok(worst.unwrap()) };
    vec![direct("min over grid of Stirling bound / |Gamma| >= 1", v, Direction::Ge, m.int(1))]
}

fn l32(m: &Model) -> Vec<Item> {
    let b = ParamBox::new(vec![m.ln3.lower().hull(&m.int(200))], None);
    vec![boxed(
        "log T/4 + 1.8521 - J(T) >= 0",
        vec![b],
        Direction::Ge,
        m.int(0),
        Arc::new(|m, b| {
            let ell = &b.vars[0];
            Ok(&(&ell.mul_pow2(-2) + &m.c("1.8521")) - &j_function_log(ell)?)
        }),
    )]
}

pub const REGISTRY: &[CheckDef] = &[
    CheckDef { id: "L01", anchor: "X >= 10^85, 10^89, 10^100, 10^165 on the four ranges", notes: "", build: l01 },
    CheckDef { id: "L02", anchor: "0.49999 <= c0 <= 1/2 for Y >= 10^85, |D| <= 10^-5", notes: "", build: l02 },
    CheckDef { id: "L03", anchor: "C1 >= 0.3386, 0.3389, 0.3395, 0.3418", notes: "", build: l03 },
    CheckDef { id: "L04", anchor: "C3 = 0.109/C1^2 <= 0.9503, 0.9488, 0.9453, 0.9327", notes: "", build: l04 },
    CheckDef { id: "L05", anchor: "err2 <= 10^-12 and the 0.109 divisor step", notes: NOTES_L05, build: l05 },
    CheckDef { id: "L06", anchor: "err1 <= 10^-10", notes: "", build: l06 },
    CheckDef { id: "L07", anchor: "err3 <= 10^-10 and D <= 10^-5", notes: NOTES_L07, build: l07 },
    CheckDef { id: "L08", anchor: "2 N(2 log T) <= 0.45 log T log log T for T > 3*10^12", notes: NOTES_L08, build: l08 },
    CheckDef { id: "L09", anchor: "log Y <= 98.99, 98.864, 81.93, 52.51 times log T", notes: NOTES_L09, build: l09 },
    CheckDef { id: "L10", anchor: "first approximation coefficient <= 2.427*10^11", notes: NOTES_L10, build: l10 },
    CheckDef { id: "L11", anchor: "(2 log Y)^5 / exp(0.01 pi log^1.5 T) <= 10^18", notes: "", build: l11 },
    CheckDef { id: "L12", anchor: "third term <= R^2 10^-70", notes: NOTES_L12, build: l12 },
    CheckDef { id: "L13", anchor: "off-diagonal Gamma term <= 10^-4", notes: "", build: l13 },
    CheckDef { id: "L14", anchor: "C2 >= 0.7301, 0.7305, 0.7315, 0.7351", notes: "", build: l14 },
    CheckDef { id: "L15", anchor: "C4 <= 1.9213, 1.9157, 1.9024, 1.8557; maximum at M = Y(1 - sigma)", notes: "", build: l15 },
    CheckDef { id: "L16", anchor: "C5 <= 5.785e13, 5.724e13, 1.842e13, 1.245e12", notes: NOTES_L16, build: l16 },
    CheckDef { id: "L17", anchor: "exponent identities behind Y^(2-2 sigma) <= D2^(7/6) 70.6995^(7/6) (3T)^(57.8875 (1-sigma)^1.5)", notes: "", build: l17 },
    CheckDef { id: "L18", anchor: "calligraphic C <= 1.04e24, 1.02e24, 3.22e23, 2.17e22", notes: "", build: l18 },
    CheckDef { id: "L19", anchor: "Gamma integral <= 2.7 log log T with parts <= 2.06 and <= 2.06 log log T", notes: NOTES_L19, build: l19 },
    CheckDef { id: "L20", anchor: "C6 >= 0.128 and d <= 1.45", notes: "", build: l20 },
    CheckDef { id: "L21", anchor: "p1 <= R0^2 10^-80 and C9 <= 1.92*10^9", notes: NOTES_L21, build: l21 },
    CheckDef { id: "L22", anchor: "p2 <= R0^2 10^-30", notes: "", build: l22 },
    CheckDef { id: "L23", anchor: "p3 <= R0^2 10^-10, C7 >= 0.9999, C8 <= 61.05", notes: "", build: l23 },
    CheckDef { id: "L24", anchor: "C10 = d C8 C9 <= 1.7*10^11", notes: "", build: l24 },
    CheckDef { id: "L25", anchor: "final assembly of the density constants", notes: NOTES_L25, build: l25 },
    CheckDef { id: "L26", anchor: "exponent arithmetic 19703/1800, 503/45, 10393/900", notes: "", build: l26 },
    CheckDef { id: "L27", anchor: "true for T >= exp(6.7*10^12) with C = 1", notes: "", build: l27 },
    CheckDef { id: "L28", anchor: "constant 4.45*10^12 for log T >= 6.7*10^12", notes: "", build: l28 },
    CheckDef { id: "L29", anchor: "widest zero-free region per range", notes: "", build: l29 },
    CheckDef { id: "L30", anchor: "divisor-square coefficient 0.106 at x = 10^85", notes: "", build: l30 },
    CheckDef { id: "L31", anchor: "Stirling upper bound for |Gamma(sigma + it)|", notes: "", build: l31 },
    CheckDef { id: "L32", anchor: "J(T) < log T/4 + 1.8521 for T >= 3", notes: "", build: l32 },
];

const NOTES_L05: &str = "The majorant omits |M_X|, as printed; L07 restores it in the aggregate. \
The printed ratio 1.021 rounds 2(1 + log 2/log M)^3 - 1 = 1.021325 at M = 10^85 downward. \
Subtracting 0.106 M log^3 M is not a valid lower bound for the sum up to M; the honest band U(2M) - L(M) is used instead.";
const NOTES_L07: &str = "err3 uses epsilon = 10^-3 for the divisor bound. The aggregate includes |M_X| <= X^(1-alpha)/(1-alpha).";
const NOTES_L08: &str = "N(2 log T) grows like log T log log T / pi; the ratio exceeds 0.45 once log T is above about 1385.";
const NOTES_L09: &str = "The printed budgets drop the (7/(18 delta)) log log 3T / log T term of log Y. \
Reproduced pieces: 29.673 at log T = 46.2 and 4.251; 65.066 comes out near 65.03.";
const NOTES_L10: &str = "Uses log M <= log Y + log log Y from M <= Y log Y. The 2 log Y route gives about 3.26e11.";
const NOTES_L12: &str = "26.26 = 70.6995 * 3^a / pi is reproduced; 157.8 is not.";
const NOTES_L16: &str = "The printed values follow 2^5 C4 (log Y/log T)^6 with the L09 budgets.";
const NOTES_L19: &str = "The majorant Gamma(1-x)/sqrt(x^2 + v^2) gives part 1; parts 2 and total are contradicted by a \
certified lower Riemann sum of |Gamma(-x + iv)| at log T = log(3*10^12), beta - alpha = A.";
const NOTES_L21: &str = "82.48, 164.96 and 11663 are not reproduced; the bound is recomputed from the majorant.";
const NOTES_L25: &str = "The +1 term times 0.45 gives 0.45 (log T)^1.4 log log T; the printed third-term constant is 0.27.";
