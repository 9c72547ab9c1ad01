//! |Γ| on vertical lines: the Stirling majorant, the reference value and the
//! integral bound over [−L, L].

use zdb::bounds::stirling_gamma_upper;
use zdb::interval::{Interval, Precision};
use zdb::oracle::gamma_reference;
use zdb::quadrature::finite_gamma_bound_parts;

fn main() -> zdb::Result<()> {
    let p = 128;
    for (sigma, t) in [(0.5, 10.0), (0.0, 1.0), (1.0, 50.0)] {
        let (s, ti) = (Interval::from_f64(sigma, p), Interval::from_f64(t, p));
        let z = (&s.sqr() + &ti.sqr()).sqrt()?;
        println!(
            "sigma = {sigma}, t = {t}: Stirling {:.6e} >= |Gamma| {:.6e}",
            stirling_gamma_upper(&s, &ti, &z)?.hi_f64(),
            gamma_reference(sigma, t, Precision::default())?.hi_f64()
        );
    }
    let ell = Interval::dec("3e12", p).ln()?;
    let parts = finite_gamma_bound_parts(&Interval::dec("-0.05", p), &ell, &Interval::dec("1", p))?;
    println!("x = -0.05, L = log 3e12: part1 {} part2 {} total {}", parts.part1, parts.part2, parts.total);
    Ok(())
}
