//! Outward-rounded enclosures at a chosen working precision.

use zdb::interval::{const_pi, Interval};

fn main() -> zdb::Result<()> {
    let p = 128;
    let third = Interval::from_i64(1, p).div(&Interval::from_i64(3, p))?;
    println!("1/3       = {third}  width {:e}", third.width_f64());

    let t = Interval::dec("3e12", p);
    let ell = t.ln()?;
    println!("log 3e12  = {ell}");
    println!("exp(log)  contains 3e12: {}", ell.exp().contains(&t));

    // D1 = 1/π² of the divisor-square asymptotic
    let d1 = const_pi(p).sqr().recip()?;
    println!("1/pi^2    = {d1}");

    // a box, not a point: every result contains the image of the box
    let x = Interval::dec_range("0.9", "1.1", p);
    println!("x^(3/2) on [0.9, 1.1] = {}", x.pow_ratio(3, 2)?);
    Ok(())
}
