//! Where the single-term bound starts to beat the Ingham-type bound inside
//! the Korobov–Vinogradov region.

use zdb::bounds::{zero_free_gap_log, ZeroFreeRegionId};
use zdb::density::{sigma_crossover_implicit_log, sigma_crossover_log, t_regime_boundary};
use zdb::interval::Interval;

fn main() -> zdb::Result<()> {
    let d = |s: &str| Interval::dec(s, 128);
    let c1p = d("4.72e20");
    for c in ["1", "1000"] {
        println!("C = {c}: KV gap reaches 1 - sigma* at log T in {}", t_regime_boundary(&d(c), &c1p)?);
    }
    let ell = d("6.7e12");
    let s = sigma_crossover_log(&ell, &d("1"), &c1p)?;
    let gap = zero_free_gap_log(ZeroFreeRegionId::KorobovVinogradov, &ell)?;
    println!("log T = 6.7e12: 1 - sigma* = {}, KV gap = {}", &d("1") - &s, gap);
    println!("  keeping the (1-sigma)^(3/2) term: sigma in {}", sigma_crossover_implicit_log(&ell, &d("1"), &c1p)?);
    // at moderate heights the neglected term dominates and nothing crosses
    println!("log T = 1e4: {:?}", sigma_crossover_implicit_log(&d("1e4"), &d("1"), &d("4.42e22")).err());
    Ok(())
}
