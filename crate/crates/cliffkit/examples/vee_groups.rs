//! Finite groups of signed basis blades: multiplication tables, Salingaros
//! families and centers.
//!
//! ```bash
//! cargo run -p cliffkit --example vee_groups
//! ```

use cliffkit::vee::{build_vee_group, salingaros_type, vee_center, vee_center_bruteforce, vee_group_id};
use cliffkit::{Result, Signature};

fn main() -> Result<()> {
    for (p, q) in [(2, 0), (0, 2)] {
        let v = build_vee_group(Signature::real(p, q))?;
        println!("G({p},{q}) ≅ {}", vee_group_id(&v)?);
        println!("{}", v.table_text());
    }
    println!("{:<8} {:>5} {:<10} {:<6}", "algebra", "order", "family", "center");
    for (p, q) in [(1, 1), (3, 0), (1, 3), (3, 1), (2, 3), (4, 1)] {
        let sig = Signature::real(p, q);
        let v = build_vee_group(sig)?;
        let center = vee_center_bruteforce(&v)?;
        assert_eq!(center, vee_center(sig));
        println!("{:<8} {:>5} {:<10} {:<6}", sig.to_string(), v.order(), salingaros_type(sig).to_string(), center.to_string());
    }
    Ok(())
}
