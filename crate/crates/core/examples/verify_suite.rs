//! Runs the built-in verification suite and prints one line per claim.

use flagtop::verify::VerifySuite;

fn main() -> flagtop::Result<()> {
    let suite = VerifySuite::builtin("paper-core")?;
    let report = suite.run();
    for c in &report.checks {
        println!(
            "{} {:<22} {:>8.3}s  {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.wall_time.as_secs_f64(),
            c.claim
        );
    }
    println!("all passed: {}", report.passed);
    Ok(())
}
