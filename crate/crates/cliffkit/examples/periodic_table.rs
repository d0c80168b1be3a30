//! The 8×8 table of real Clifford algebras, Brauer–Wall arithmetic and
//! mod-8 periodicity.
//!
//! ```bash
//! cargo run -p cliffkit --example periodic_table
//! ```

use cliffkit::classify::{abs_shift_check, algebra_class, bw_compose, karoubi_factorize, periodic_table_text};
use cliffkit::{Result, Signature};

fn main() -> Result<()> {
    print!("{}", periodic_table_text(7, 7));

    for sig in [Signature::real(3, 1), Signature::real(1, 3), Signature::real(4, 1), Signature::complex(5)] {
        let c = algebra_class(sig);
        println!("{sig}: {} (ring {}, simple {}, class {})", c.matrix_form, c.ring, c.simple, c.bw_class);
    }

    let (a, b) = (algebra_class(Signature::real(1, 0)), algebra_class(Signature::real(0, 3)));
    println!("\nBW class of Cl(1,0) ⊗ Cl(0,3): {} = class of Cl(1,3): {}", bw_compose(&a, &b)?, algebra_class(Signature::real(1, 3)).bw_class);

    let parts: Vec<String> = karoubi_factorize(Signature::real(5, 3))?.iter().map(ToString::to_string).collect();
    println!("Cl(5,3) ≅ {}", parts.join(" ⊗ "));
    let all = (0..=6).flat_map(|n| (0..=n).map(move |p| Signature::real(p, n - p))).all(abs_shift_check);
    println!("Cl(p+8,q) ≅ Cl(p,q) ⊗ R(16) for all p+q ≤ 6: {all}");
    Ok(())
}
