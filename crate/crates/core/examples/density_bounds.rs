//! Evaluate the zero-density bounds and the Ingham-type comparator.

use zdb::density::{ingham_type_log, range_for, theorem1_general_log, theorem1_simple_log, theorem2_log};
use zdb::interval::Interval;

fn main() -> zdb::Result<()> {
    let d = |s: &str| Interval::dec(s, 128);
    let one = d("1");
    for (sigma, ell) in [("0.98", "28.73"), ("0.99", "200"), ("0.995", "1e6")] {
        let (s, l) = (d(sigma), d(ell));
        println!("sigma = {sigma}, log T = {ell} ({})", range_for(&l)?);
        println!("  three-term   {}", theorem1_general_log(&s, &l)?);
        println!("  single-term  {}", theorem1_simple_log(&s, &l)?);
        println!("  Ingham C=1   {}", ingham_type_log(&s, &l, &one)?);
    }
    // beyond exp(6.7e12) the constant drops to 4.45e12; log of the bound
    let v = theorem2_log(&d("0.999"), &d("1e13"))?;
    println!("high range, log of bound: {}", v.ln()?);
    Ok(())
}
