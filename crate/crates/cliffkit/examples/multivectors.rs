//! Multivector arithmetic in `Cl(1,3)`: products, the three fundamental
//! automorphisms and the volume element.
//!
//! ```bash
//! cargo run -p cliffkit --example multivectors
//! ```

use cliffkit::algebra::{center_basis, volume_element, volume_square_sign};
use cliffkit::{Blade, Cq, Multivector, Result, Signature};

fn main() -> Result<()> {
    let sig = Signature::real(1, 3);
    let e = |i| Multivector::generator(sig, i);
    let (e1, e2, e3) = (e(1)?, e(2)?, e(3)?);

    println!("in {sig}:");
    println!("  e1·e1 = {}", e1.mul(&e1));
    println!("  e2·e2 = {}", e2.mul(&e2));
    println!("  e1·e2 = {}   e2·e1 = {}", e1.mul(&e2), e2.mul(&e1));

    let a = Multivector::from_terms(
        sig,
        [(Blade::ONE, Cq::int(2)), (Blade::parse("e1")?, Cq::int(1)), (Blade::parse("e23")?, Cq::int(-3)), (Blade::parse("e123")?, Cq::int(5))],
    )?;
    println!("\nA      = {a}");
    println!("A*     = {}  (grade involution)", a.grade_involution());
    println!("Ã      = {}  (reversion)", a.reversion());
    println!("Ã*     = {}  (conjugation)", a.conjugation());
    println!("A·e3   = {}", a.mul(&e3));

    let w = volume_element(sig);
    println!("\nω = {w}, ω² = {} (rule: {:+})", w.mul(&w), volume_square_sign(sig));
    for s in [Signature::real(3, 0), Signature::real(2, 1), Signature::complex(3)] {
        let center: Vec<String> = center_basis(s).iter().map(ToString::to_string).collect();
        println!("center of {s}: span{{{}}}", center.join(", "));
    }
    Ok(())
}
