//! The two Halász–Montgomery inequalities on explicit complex vectors.

use crate::error::{Error, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// ξ and φ_1..φ_R in C^dim. `seed` is 0 for hand-built instances.
#[derive(Clone, Debug)]
pub struct HMInstance {
    pub xi: Vec<Complex64>,
    pub phis: Vec<Vec<Complex64>>,
    pub seed: u64,
}

impl HMInstance {
    pub fn new(xi: Vec<Complex64>, phis: Vec<Vec<Complex64>>) -> Result<HMInstance> {
        let dim = xi.len();
        if dim == 0 || phis.is_empty() {
            return Err(Error::DomainError("need dim ≥ 1 and R ≥ 1".into()));
        }
        let finite = |v: &[Complex64]| v.iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite(&xi) || phis.iter().any(|p| p.len() != dim || !finite(p)) {
            return Err(Error::DomainError("vectors must be finite and of equal length".into()));
        }
        Ok(HMInstance { xi, phis, seed: 0 })
    }

    /// Components uniform on the square [−1, 1]², reproducible from `seed`.
    pub fn random(seed: u64, r: usize, dim: usize) -> Result<HMInstance> {
        if r == 0 || dim == 0 {
            return Err(Error::DomainError("need dim ≥ 1 and R ≥ 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |n: usize| -> Vec<Complex64> {
            (0..n).map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))).collect()
        };
        let xi = draw(dim);
        let phis = (0..r).map(|_| draw(dim)).collect();
        Ok(HMInstance { xi, phis, seed })
    }

    pub fn r(&self) -> usize {
        self.phis.len()
    }

    pub fn dim(&self) -> usize {
        self.xi.len()
    }

    /// The same instance with ξ multiplied by `lambda`.
    pub fn scaled(&self, lambda: f64) -> HMInstance {
        HMInstance { xi: self.xi.iter().map(|z| z * lambda).collect(), phis: self.phis.clone(), seed: self.seed }
    }
}

/// All sides of both inequalities:
/// 1. Σ|(ξ,φ_r)| ≤ ‖ξ‖ (Σ_{r,s} |(φ_r,φ_s)|)^{1/2}
/// 2. Σ|(ξ,φ_r)|² ≤ ‖ξ‖² max_r Σ_s |(φ_r,φ_s)|, plus the unsquared
///    left side `lhs2` compared with the same right side as printed.
#[derive(Clone, Debug, PartialEq)]
pub struct HmReport {
    pub lhs1: f64,
    pub rhs1: f64,
    pub holds1: bool,
    pub lhs2: f64,
    pub lhs2_squared: f64,
    pub rhs2: f64,
    pub holds2: bool,
    pub holds2_printed: bool,
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

/// `a ≤ b` up to a relative 1e-12 allowance for float rounding.
fn le(a: f64, b: f64) -> bool {
    a <= b + 1e-12 * b.abs().max(a.abs()) + 1e-300
}

pub fn hm_test(inst: &HMInstance) -> HmReport {
    let dots: Vec<f64> = inst.phis.iter().map(|p| inner(&inst.xi, p).norm()).collect();
    let norm2 = inner(&inst.xi, &inst.xi).re.max(0.0);
    let gram: Vec<Vec<f64>> = inst.phis.iter().map(|p| inst.phis.iter().map(|q| inner(p, q).norm()).collect()).collect();

    let lhs1: f64 = dots.iter().sum();
    let rhs1 = norm2.sqrt() * gram.iter().flatten().sum::<f64>().sqrt();
    let lhs2_squared: f64 = dots.iter().map(|d| d * d).sum();
    let row_max = gram.iter().map(|row| row.iter().sum::<f64>()).fold(0.0, f64::max);
    let rhs2 = norm2 * row_max;
    HmReport {
        lhs1,
        rhs1,
        holds1: le(lhs1, rhs1),
        lhs2: lhs1,
        lhs2_squared,
        rhs2,
        holds2: le(lhs2_squared, rhs2),
        holds2_printed: le(lhs1, rhs2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_case() {
        let v = vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
        let inst = HMInstance::new(v.clone(), vec![v]).unwrap();
        let r = hm_test(&inst);
        assert!((r.lhs1 - 1.0).abs() < 1e-15 && (r.rhs1 - 1.0).abs() < 1e-15);
        assert!(r.holds1 && r.holds2);
    }

    #[test]
    fn zero_vector() {
        let z = vec![Complex64::new(0.0, 0.0); 3];
        let inst = HMInstance::new(z, vec![vec![Complex64::new(1.0, 2.0); 3]]).unwrap();
        let r = hm_test(&inst);
        assert_eq!((r.lhs1, r.rhs1, r.lhs2_squared, r.rhs2), (0.0, 0.0, 0.0, 0.0));
        assert!(r.holds1 && r.holds2 && r.holds2_printed);
    }

    #[test]
    fn reproducible_from_seed() {
        let a = HMInstance::random(7, 3, 4).unwrap();
        let b = HMInstance::random(7, 3, 4).unwrap();
        assert_eq!(a.xi, b.xi);
        assert_eq!(a.phis, b.phis);
        assert!(a.xi.iter().all(|z| z.re.abs() <= 1.0 && z.im.abs() <= 1.0));
    }

    #[test]
    fn printed_form_breaks_under_scaling() {
        let inst = HMInstance::random(1, 2, 3).unwrap();
        assert!(hm_test(&inst.scaled(1e-3)).holds2);
        assert!(!hm_test(&inst.scaled(1e-3)).holds2_printed);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(HMInstance::random(0, 0, 3).is_err());
        let v = vec![Complex64::new(f64::NAN, 0.0)];
        assert!(HMInstance::new(v.clone(), vec![v]).is_err());
    }
}
