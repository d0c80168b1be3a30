//! Primitive idempotents, minimal left ideals and spinor representations.
//!
//! ```bash
//! cargo run -p cliffkit --example spinor_rep
//! ```

use cliffkit::spinor::{find_primitive_idempotent, idempotent_k, k_field, minimal_left_ideal, spinor_k_repr, Idempotent};
use cliffkit::{Blade, Result, Signature};

fn main() -> Result<()> {
    for (p, q) in [(1, 3), (3, 1), (4, 1), (0, 8)] {
        let sig = Signature::real(p, q);
        let f = find_primitive_idempotent(sig)?;
        println!("{sig}: k = {}, f = {}", idempotent_k(sig), f.describe());
    }

    // an explicitly chosen idempotent of Cl(1,3) with a quaternionic division ring
    let sig = Signature::real(1, 3);
    let f = Idempotent::from_blades(sig, &[(1, Blade::parse("e234")?)])?;
    let k: Vec<String> = k_field(&f)?.iter().map(ToString::to_string).collect();
    println!("\nf = {}; K = span{{{}}}", f.describe(), k.join(", "));
    println!("minimal left ideal has {} basis elements over R", minimal_left_ideal(&f)?.len());
    let rep = spinor_k_repr(sig, &f, None)?;
    rep.check_clifford_relations()?;
    println!("representation over {} of size {}", rep.domain(), rep.dim());
    for (i, m) in rep.generator_strings().iter().enumerate() {
        println!("  e{} ↦ {:?}", i + 1, m);
    }
    Ok(())
}
