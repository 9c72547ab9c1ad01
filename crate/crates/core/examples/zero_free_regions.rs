//! The four zero-free regions and which is widest at a given height.

use zdb::bounds::{widest_region_log, zero_free_gap_log, ZeroFreeRegionId};
use zdb::interval::Interval;

fn main() -> zdb::Result<()> {
    for ell in ["40", "100", "1000", "481958", "1e6", "6.7e12"] {
        let l = Interval::dec(ell, 128);
        print!("log T = {ell:>8}");
        for r in ZeroFreeRegionId::ALL {
            print!("  {}={:.4e}", r.name(), zero_free_gap_log(r, &l)?.mid_f64());
        }
        match widest_region_log(&l) {
            Ok(r) => println!("  widest: {r}"),
            Err(e) => println!("  widest: {e}"),
        }
    }
    Ok(())
}
