//! Matrices of the discrete automorphisms (space inversion, time reversal
//! and their product) and the Pin double covers they determine.
//!
//! ```bash
//! cargo run -p cliffkit --example reflections
//! ```

use cliffkit::field::dirac_basis;
use cliffkit::reflect::{build_wec, compare_pin, complex_aut_type, real_aut_type, RealAut};
use cliffkit::spinor::{enumerate_primitive_idempotents, spinor_k_repr};
use cliffkit::{Result, Signature};

fn main() -> Result<()> {
    let d = build_wec(&dirac_basis().generators)?;
    println!("Dirac basis: W = {:?}", d.w.to_strings());
    println!("             E = {:?}", d.e.to_strings());
    println!("             C = {:?}", d.c.to_strings());
    print!("{}", d.table_text());
    println!("group {} with signature {}, cover {}\n", d.group, d.signature, d.cover.cover);

    for n in [2, 4, 6] {
        let a = complex_aut_type(n)?;
        println!("C_{n}: {} {} → {}", a.group, a.signature, a.cover().label());
    }
    for (p, q) in [(3, 1), (1, 3), (2, 2), (0, 4)] {
        if let RealAut::Single(a) = real_aut_type(Signature::real(p, q))? {
            println!("Cl({p},{q}): {} {} cover {}", a.group, a.signature, a.cover().cover);
        }
    }

    // every primitive idempotent of Cl(1,3): the cover depends on the choice
    let sig = Signature::real(1, 3);
    for f in enumerate_primitive_idempotents(sig)? {
        let a = cliffkit::reflect::reflection_of(&spinor_k_repr(sig, &f, None)?)?;
        println!("  {sig} with {}: {} {}", f.describe(), a.group, a.signature);
    }
    let cmp = compare_pin(Signature::real(3, 1))?;
    println!("Pin(3,1) ≅ Pin(1,3): {}", cmp.isomorphic);
    Ok(())
}
