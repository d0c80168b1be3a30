//! Odd-dimensional algebras: the ε-homomorphism onto the quotient, the
//! central idempotents λ±, surviving symmetries, and the charge-conjugation
//! matrix Π.
//!
//! ```bash
//! cargo run -p cliffkit --example quotients
//! ```

use cliffkit::quotient::{build_pi, central_idempotents, epsilon_map, quotient_report, real_form_basis};
use cliffkit::spinor::tensor_pauli_rep;
use cliffkit::{Blade, Cq, GroundField, Multivector, Result, Signature};

fn main() -> Result<()> {
    let sig = Signature::complex(3);
    let a = Multivector::from_terms(sig, [(Blade::ONE, Cq::int(1)), (Blade::parse("e3")?, Cq::int(2)), (Blade::parse("e12")?, Cq::i())])?;
    println!("ε({a}) = {}", epsilon_map(&a)?);
    let (lp, lm) = central_idempotents(sig)?;
    println!("λ+ = {lp}\nλ- = {lm}");

    let report = quotient_report(3, 0, GroundField::Complex)?;
    println!("\nC_3 with real form Cl(3,0) → {}: class {}", report.target, report.class);
    for t in &report.transfers {
        println!("  {:<4} {:<20} {}", t.transform.to_string(), t.map, if t.transferred { "transfers" } else { "-" });
    }

    // a documented conflict between the class table and the direct evaluation
    match quotient_report(2, 1, GroundField::Real) {
        Ok(r) => println!("Cl(2,1): class {}", r.class),
        Err(e) => println!("Cl(2,1): {e}"),
    }

    let gens = tensor_pauli_rep(2, false)?.generators;
    for p in 0..=4 {
        let pi = build_pi(&real_form_basis(&gens, p))?;
        println!("Cl({p},{}): Π = product of {:?}, ΠΠ̇ = {:+}·I (a = {}, b = {})", 4 - p, pi.factors, pi.pi_pidot_sign, pi.a, pi.b);
    }
    Ok(())
}
