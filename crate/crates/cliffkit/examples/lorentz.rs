//! Gel'fand–Naimark infinitesimal operators of the Lorentz group and their
//! commutation relations with the discrete symmetries.
//!
//! ```bash
//! cargo run -p cliffkit --example lorentz
//! ```

use cliffkit::lorentz::{bcommut_checks, build_block_ops, symmetry_permutation_audit, RepLabel, OPERATOR_NAMES};
use cliffkit::num::qr;
use cliffkit::Result;

fn main() -> Result<()> {
    let label = RepLabel::new(qr(1, 2), qr(3, 2))?;
    let ops = build_block_ops(&label)?;
    println!("fundamental representation {label} (dim {}):", label.dim());
    for (name, m) in OPERATOR_NAMES.iter().zip(ops.all()).take(6) {
        println!("  {name:<3} = {:?}", m.to_strings());
    }
    let held = bcommut_checks(&ops).iter().filter(|r| r.holds).count();
    println!("bracket relations holding: {held}/{}", bcommut_checks(&ops).len());

    let labels = RepLabel::enumerate(6);
    println!("\nlabels with dim ≤ 6: {}", labels.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));

    for n in [2, 4, 6] {
        let a = symmetry_permutation_audit(n)?;
        println!("\nC_{n} ({}): consistent {}, anomaly {}", a.group, a.consistent, a.anomaly);
        for p in a.patterns.iter().filter(|p| p.triples > 0) {
            println!("  membership {:?}: {:?} (predicted {:?})", p.membership, p.observed, p.predicted);
        }
    }
    Ok(())
}
