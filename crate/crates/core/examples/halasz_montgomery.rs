//! Both Halász–Montgomery inequalities on random complex vectors, and the
//! unsquared form failing under scaling.

use zdb::oracle::{hm_test, HMInstance};

fn main() -> zdb::Result<()> {
    let inst = HMInstance::random(3, 4, 5)?;
    for lambda in [1.0, 1e-3] {
        let r = hm_test(&inst.scaled(lambda));
        println!("lambda = {lambda}:");
        println!("  sum |(xi,phi)|   {:.4e} <= {:.4e}  {}", r.lhs1, r.rhs1, r.holds1);
        println!("  sum |(xi,phi)|^2 {:.4e} <= {:.4e}  {}", r.lhs2_squared, r.rhs2, r.holds2);
        println!("  unsquared        {:.4e} <= {:.4e}  {}", r.lhs2, r.rhs2, r.holds2_printed);
    }
    Ok(())
}
