//! Exact Σ d(n)² against the explicit two-sided band.

use zdb::bounds::{divisor_coefficient, divisor_sum_band};
use zdb::interval::Interval;
use zdb::oracle::{divisor_sum_bruteforce, divisor_sum_pairs};

fn main() -> zdb::Result<()> {
    for x in [7u64, 433, 10_000, 1_000_000] {
        let exact = divisor_sum_bruteforce(x)?;
        let band = divisor_sum_band(&Interval::from_i64(x as i64, 128))?;
        println!("x = {x:>8}: sum = {exact:>10}  band [{:.6e}, {:.6e}]", band.lower.lo_f64(), band.upper.hi_f64());
    }
    assert_eq!(divisor_sum_bruteforce(10_000)?, divisor_sum_pairs(10_000)?);
    println!("coefficient at 1e85: {}", divisor_coefficient(&Interval::dec("1e85", 128))?);
    Ok(())
}
