//! Run the consolidated self-check and print one line per check.
//!
//! ```bash
//! cargo run -p cliffkit --release --example audit
//! ```

use cliffkit::audit::{run_audit, AuditOptions};
use cliffkit::Result;

fn main() -> Result<()> {
    let report = run_audit(&AuditOptions::default())?;
    for c in &report.checks {
        println!("{} {:<18} {:>6} cases", if c.passed { "PASS" } else { "FAIL" }, c.name, c.cases);
        for d in &c.details {
            println!("     {d}");
        }
    }
    println!("overall: {}", if report.passed { "passed" } else { "failed" });
    Ok(())
}
