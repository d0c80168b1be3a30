//! Dirac–Hestenes spinors, helicity projectors and the multivector form of
//! Maxwell's equations.
//!
//! ```bash
//! cargo run -p cliffkit --example field
//! ```

use cliffkit::field::{field_bivector, helicity_split, ideal_projection, nabla_a, nabla_f, DHSpinor, FieldDerivatives};
use cliffkit::num::q;
use cliffkit::{Result, Q};

fn qs<const N: usize>(v: [i64; N]) -> [Q; N] {
    v.map(q)
}

fn main() -> Result<()> {
    let s = DHSpinor::from_coeffs(&qs([1, 2, 0, -1, 3, 0, 1, 2]))?;
    println!("φ = {:?}", s.matrix().to_strings());
    let p = ideal_projection(&s);
    println!("φ·f keeps one column: {:?}", p.column.iter().map(ToString::to_string).collect::<Vec<_>>());
    let h = helicity_split(&s);
    println!("φ+ = {:?}\nφ- = {:?}", h.plus.to_strings(), h.minus.to_strings());

    // ∇A for A = (0, x0, 0, 0) gives E = (1, 0, 0)
    let f = nabla_a(&qs([1, 0, 0, 0]), &qs([0, 1, 0, 0]));
    println!("\n∇A: scalar {}, E {:?}, H {:?}", f.scalar, f.e.map(|x| x.to_string()), f.h.map(|x| x.to_string()));

    // ∇F residuals for ∂1 E1 = 1: the divergence of E is picked up
    let mut d: FieldDerivatives = std::array::from_fn(|_| qs([0; 6]));
    d[1][0] = q(1);
    let r = nabla_f(&d);
    println!("∇F: div E = {}, div H = {}", r.div_e, r.div_h);

    let fb = field_bivector(&qs([1, 0, 0]), &qs([0, 1, 0]));
    println!("\nF = E + iH = {:?}", fb.f.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("reversed: {:?}", fb.reversed().f.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
