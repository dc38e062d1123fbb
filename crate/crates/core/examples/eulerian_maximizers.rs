//! Every union of joins of cycles in GJ(n) matches the f-vector of J2(n).
//! Isomorphism with J2(n) is decided for n ≤ 16 (the canonical-form limit).

use flagtop::constructions::{balanced_join, gj, gj_enumerate_specs};
use flagtop::enumerate::{are_isomorphic, MAX_CANONICAL_VERTICES};
use flagtop::validators::{is_eulerian, is_flag, is_normal_pseudomanifold};

fn main() -> flagtop::Result<()> {
    for n in 8..=20 {
        let target = balanced_join(2, n)?;
        for spec in gj_enumerate_specs(n) {
            let k = gj(&spec)?;
            let iso = if n <= MAX_CANONICAL_VERTICES { are_isomorphic(&k, &target)?.to_string() } else { "-".into() };
            println!(
                "n={n:2} a={:<7} b={:<7} flag={} eulerian={} normal={} same f-vector={} ≅ J2(n): {}",
                format!("{:?}", spec.a),
                format!("{:?}", spec.b),
                is_flag(&k).holds,
                is_eulerian(&k).holds,
                is_normal_pseudomanifold(&k).holds,
                k.f_vector() == target.f_vector(),
                iso
            );
        }
    }
    Ok(())
}
