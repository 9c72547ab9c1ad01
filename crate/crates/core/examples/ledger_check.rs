//! Run ledger checks and print their reports. Pass ids as arguments, e.g.
//! `cargo run --example ledger_check -- L03 L25 L26a`.

use zdb::interval::Precision;
use zdb::ledger::{spot_audit, verify};

fn main() -> zdb::Result<()> {
    let mut ids: Vec<String> = std::env::args().skip(1).collect();
    if ids.is_empty() {
        ids = vec!["L03".into(), "L25".into()];
    }
    let prec = Precision::default();
    for id in &ids {
        let r = verify(id, prec)?;
        println!("{} {} computed {} {} claimed {}", r.id, r.verdict.name(), r.computed, r.dir.symbol(), r.claimed);
        for l in r.detail_lines() {
            println!("{l}");
        }
        let a = spot_audit(id, 100, 1, prec)?;
        println!("  audit: {} samples, {} violations, {} undecided", a.samples, a.violations.len(), a.undecided);
    }
    Ok(())
}
