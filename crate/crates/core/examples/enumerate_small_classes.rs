//! Exhaustive enumeration of flag 3-dimensional classes on few vertices.
//!
//! Usage: `cargo run --release --example enumerate_small_classes [max_n]` (default 10).

use flagtop::enumerate::{enumerate_class, maximizers, ComplexClass};

fn main() -> flagtop::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for n in 8..=max_n {
        for class in ComplexClass::ALL {
            let r = enumerate_class(n, class, None)?;
            let f1s: Vec<u64> = r.representatives.iter().map(|r| r.f_vector.get(1)).collect();
            println!(
                "n={n:2} {:<16} classes={:3} candidates={:7} max_f1={:?} f1s={f1s:?} ({:.2?})",
                class.name(),
                r.count,
                r.candidates,
                r.max_f1(),
                r.wall_time
            );
        }
        let m = maximizers(n, ComplexClass::FlagEulerian3)?;
        println!(
            "n={n:2} Eulerian maximizers: {} (matches union-of-joins family: {})",
            m.result.count, m.matches_expected
        );
    }
    Ok(())
}
