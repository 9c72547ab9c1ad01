//! Interval branch-and-bound over parameter boxes.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::bounds::{zero_free_gap_log, TRange, ZeroFreeRegionId};
use crate::error::{Error, Result};
use crate::interval::{Ext, Interval};

/// A box in (log T, 1 − σ, auxiliary variables...).
///
/// `vars[0]` is ℓ = log T and `vars[1]` is δ = 1 − σ. When `region` is set
/// the box only stands for points with δ ≥ g(ℓ), the zero-free gap of that
/// region, since smaller δ means σ lies inside the zero-free region.
#[derive(Clone, Debug)]
pub struct ParamBox {
    pub vars: Vec<Interval>,
    pub region: Option<ZeroFreeRegionId>,
    pub range: Option<TRange>,
}

impl ParamBox {
    pub fn new(vars: Vec<Interval>, region: Option<ZeroFreeRegionId>) -> ParamBox {
        ParamBox { vars, region, range: None }
    }

    /// The standard box of a T range: σ ∈ [0.98, 1 − g(T)].
    pub fn range_box(r: TRange, prec: u32) -> ParamBox {
        let delta = Interval::from_i64(0, prec).hull(&Interval::dec("0.02", prec).upper());
        let b = ParamBox { vars: vec![r.log_t_box(prec), delta], region: Some(r.region()), range: Some(r) };
        b.couple().expect("range boxes are feasible")
    }

    pub fn ell(&self) -> &Interval {
        &self.vars[0]
    }

    pub fn delta(&self) -> &Interval {
        &self.vars[1]
    }

    pub fn sigma(&self) -> Interval {
        &Interval::from_i64(1, self.delta().prec()) - self.delta()
    }

    /// Tighten δ from below with the zero-free gap; `None` if the box holds
    /// no feasible point.
    pub fn couple(mut self) -> Option<ParamBox> {
        let Some(region) = self.region else { return Some(self) };
        if self.vars.len() < 2 {
            return Some(self);
        }
        let g = zero_free_gap_log(region, &self.vars[0]).ok()?;
        let d = &self.vars[1];
        if g.lo() > d.hi() {
            return None;
        }
        if g.lo() > d.lo() {
            self.vars[1] = Interval::new(g.lo().clone(), d.hi().clone(), d.prec()).ok()?;
        }
        Some(self)
    }

    /// A sample point: the lower corner, or the split point of every
    /// variable, with δ raised to the gap if needed.
    fn point(&self, mid: bool) -> Option<ParamBox> {
        let vars = self
            .vars
            .iter()
            .map(|v| {
                let e = if mid { v.bisect().0.hi().clone() } else { v.lo().clone() };
                Interval::new(e.clone(), e, v.prec()).unwrap()
            })
            .collect::<Vec<_>>();
        let mut b = ParamBox { vars, region: self.region, range: self.range };
        if let (Some(region), true) = (self.region, b.vars.len() >= 2) {
            let g = zero_free_gap_log(region, &b.vars[0]).ok()?;
            if g.hi() > b.vars[1].hi() {
                if g.hi() > self.vars[1].hi() {
                    return None;
                }
                b.vars[1] = Interval::new(g.hi().clone(), g.hi().clone(), g.prec()).ok()?;
            }
        }
        Some(b)
    }

    pub fn describe(&self) -> String {
        let names = ["logT", "delta"];
        let mut s = Vec::new();
        for (i, v) in self.vars.iter().enumerate() {
            let n = names.get(i).map(|s| s.to_string()).unwrap_or(format!("x{i}"));
            let (lo, hi) = v.to_decimal_pair(8);
            s.push(format!("{n}∈[{lo}, {hi}]"));
        }
        if let Some(r) = self.region {
            s.push(format!("region={}", r.name()));
        }
        s.join(" ")
    }

    fn split(&self, depth: u32) -> (ParamBox, ParamBox) {
        let score = |v: &Interval| -> f64 {
            if !v.is_finite() {
                return 1.0;
            }
            let w = v.width_f64();
            let m = v.lo_f64().abs().max(v.hi_f64().abs());
            if m == 0.0 {
                0.0
            } else {
                (w / m).min(1.0)
            }
        };
        let scores: Vec<f64> = self.vars.iter().map(score).collect();
        let best = scores.iter().cloned().fold(0.0, f64::max);
        let ties: Vec<usize> = (0..scores.len()).filter(|&i| scores[i] >= best * (1.0 - 1e-9)).collect();
        let k = ties[depth as usize % ties.len()];
        let (a, b) = self.vars[k].bisect();
        let mut l = self.clone();
        let mut r = self.clone();
        l.vars[k] = a;
        r.vars[k] = b;
        (l, r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// the quantity must stay at or below the claim
    Le,
    /// the quantity must stay at or above the claim
    Ge,
}

impl Direction {
    pub fn symbol(self) -> &'static str {
        match self {
            Direction::Le => "<=",
            Direction::Ge => ">=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub verdict: Verdict,
    /// hull of what was certified (upper/lower end) and what was observed
    /// at sample points
    pub computed: Interval,
    pub subdivisions: u64,
    pub witness: Option<ParamBox>,
}

struct Node {
    key: Ext,
    seq: Reverse<u64>,
    depth: u32,
    b: ParamBox,
    enc: Option<Interval>,
}

impl PartialEq for Node {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Node {
    fn cmp(&self, o: &Self) -> Ordering {
        (&self.key, self.seq).cmp(&(&o.key, o.seq))
    }
}

pub type Eval<'a> = &'a (dyn Fn(&ParamBox) -> Result<Interval> + Sync);

/// Certify `eval ≤ claim` (or `≥`) on the union of `boxes`.
///
/// Boxes with the largest upper bound are refined first. Sample points are
/// evaluated with `witness` (defaults to `eval`) and a sample that
/// certifiably violates the claim ends the search with FAIL.
pub fn certify(boxes: Vec<ParamBox>, eval: Eval, witness: Option<Eval>, dir: Direction, claim: &Interval, budget: u64) -> Outcome {
    let sgn = |v: Interval| if dir == Direction::Le { v } else { v.neg() };
    let claim_s = sgn(claim.clone());
    let wit = witness.unwrap_or(eval);
    let prec = claim.prec();
    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    let mut push = |heap: &mut BinaryHeap<Node>, b: ParamBox, depth: u32| {
        let enc = eval(&b).ok().map(sgn);
        let key = enc.as_ref().map(|e| e.hi().clone()).unwrap_or(Ext::PosInf);
        seq += 1;
        heap.push(Node { key, seq: Reverse(seq), depth, b, enc });
    };
    for b in boxes {
        if let Some(b) = b.couple() {
            push(&mut heap, b, 0);
        }
    }
    let mut best_lo = Ext::NegInf;
    let mut env_lo = Ext::PosInf;
    let mut subdivisions = 0u64;
    let finish = |verdict, best_lo: Ext, top: Ext, env_lo: Ext, subdivisions, witness| {
        let lo = if best_lo == Ext::NegInf { env_lo.min(top.clone()) } else { best_lo };
        let c = Interval::new(lo.clone().min(top.clone()), top, prec).unwrap();
        let computed = if dir == Direction::Le { c } else { c.neg() };
        Outcome { verdict, computed, subdivisions, witness }
    };
    while let Some(node) = heap.pop() {
        if let Some(e) = &node.enc {
            env_lo = env_lo.min(e.lo().clone());
        }
        for mid in [false, true] {
            let Some(pt) = node.b.point(mid) else { continue };
            if let Ok(v) = wit(&pt).map(sgn) {
                if v.lo() > &best_lo {
                    best_lo = v.lo().clone();
                }
                if v.lo() > claim_s.hi() {
                    let top = node.key.clone().max(v.hi().clone());
                    return finish(Verdict::Fail, best_lo, top, env_lo, subdivisions, Some(pt));
                }
            }
        }
        if node.key <= *claim_s.lo() {
            return finish(Verdict::Pass, best_lo, node.key, env_lo, subdivisions, None);
        }
        if subdivisions >= budget {
            return finish(Verdict::Inconclusive, best_lo, node.key, env_lo, subdivisions, Some(node.b));
        }
        subdivisions += 1;
        let (l, r) = node.b.split(node.depth);
        for c in [l, r] {
            if let Some(c) = c.couple() {
                push(&mut heap, c, node.depth + 1);
            }
        }
    }
    // every box was infeasible
    let z = Interval::from_i64(0, prec);
    Outcome { verdict: Verdict::Pass, computed: z, subdivisions, witness: None }
}

/// Enclosure of the maximum (or minimum) of `eval` over `boxes` together
/// with the hull of the boxes that may still contain a maximizer, refined
/// until every candidate box is narrower than `rel_tol` in each variable.
pub fn extremum(boxes: Vec<ParamBox>, eval: Eval, maximize: bool, rel_tol: f64, budget: u64) -> Result<(Interval, ParamBox)> {
    let sgn = |v: Interval| if maximize { v } else { v.neg() };
    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    let mut best_lo = Ext::NegInf;
    let mut done: Vec<(Ext, ParamBox)> = Vec::new();
    let narrow = |b: &ParamBox| {
        b.vars.iter().all(|v| v.is_finite() && v.width_f64() <= rel_tol * v.lo_f64().abs().max(v.hi_f64().abs()).max(1e-300))
    };
    let mut push = |heap: &mut BinaryHeap<Node>, b: ParamBox, depth: u32| -> Result<()> {
        let enc = sgn(eval(&b)?);
        seq += 1;
        heap.push(Node { key: enc.hi().clone(), seq: Reverse(seq), depth, b, enc: Some(enc) });
        Ok(())
    };
    let prec = boxes.first().map(|b| b.vars[0].prec()).unwrap_or(128);
    for b in boxes {
        if let Some(b) = b.couple() {
            push(&mut heap, b, 0)?;
        }
    }
    let mut steps = 0u64;
    while let Some(node) = heap.pop() {
        if node.key < best_lo {
            break;
        }
        for mid in [false, true] {
            if let Some(pt) = node.b.point(mid) {
                if let Ok(v) = eval(&pt).map(sgn) {
                    if v.lo() > &best_lo {
                        best_lo = v.lo().clone();
                    }
                }
            }
        }
        if narrow(&node.b) {
            done.push((node.key, node.b));
            continue;
        }
        steps += 1;
        if steps > budget {
            return Err(Error::DepthExhausted(budget));
        }
        let (l, r) = node.b.split(node.depth);
        for c in [l, r] {
            if let Some(c) = c.couple() {
                push(&mut heap, c, node.depth + 1)?;
            }
        }
    }
    let cands: Vec<&(Ext, ParamBox)> = done.iter().filter(|(k, _)| *k >= best_lo).collect();
    let Some(first) = cands.first() else {
        return Err(Error::Inconclusive("no candidate box left".into()));
    };
    let mut hull = first.1.clone();
    let mut top = first.0.clone();
    for (k, b) in &cands[1..] {
        for (h, v) in hull.vars.iter_mut().zip(&b.vars) {
            *h = h.hull(v);
        }
        top = top.max(k.clone());
    }
    let v = Interval::new(best_lo.min(top.clone()), top, prec)?;
    Ok((if maximize { v } else { v.neg() }, hull))
}
