//! Certified upper bounds for ∫_{v0}^∞ e^{a v^c − b v} v^p dv.

use zdb::interval::{const_pi, Interval, Precision};
use zdb::quadrature::{gamma_kernel_integral, tail_upper_bound, TailIntegralSpec};

fn main() -> zdb::Result<()> {
    let p = 128;
    let d = |s: &str| Interval::dec(s, p);

    // the Gamma-tail behind the err2 estimate, at α = 0.9, β = 0.98
    let a = &d("4.43795") * &d("0.1").pow_ratio(3, 2)?;
    let q = &(&(&Interval::from_ratio(2, 3, p) + &d("0.9")) - &d("0.98")) - &d("0.5");
    let spec = TailIntegralSpec::new(a, Interval::from_i64(1, p), const_pi(p).mul_pow2(-1), q, d("3e12").ln()?)?;
    println!("err2 tail  <= {}", tail_upper_bound(&spec, Precision::default())?.upper());

    // closed form over the whole half line
    println!("Γ(1.5)/(π/2)^1.5 = {}", gamma_kernel_integral(&d("0.5"), &const_pi(p).mul_pow2(-1))?);

    // integrands that do not decay are refused
    let grows = TailIntegralSpec::new(d("2"), d("1"), d("1"), d("0"), d("1"));
    println!("a > b: {}", grows.unwrap_err());
    Ok(())
}
