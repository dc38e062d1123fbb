//! Runs every validator on a few complexes, printing verdicts and witnesses.

use flagtop::constructions::{balanced_join, grid_torus, remark_complex};
use flagtop::validators::classify;
use flagtop::SimplicialComplex;

fn main() -> flagtop::Result<()> {
    let hollow_triangle = SimplicialComplex::from_facet_lists(3, &[[0, 1], [1, 2], [0, 2]])?;
    let cases = [
        ("hollow triangle", hollow_triangle),
        ("torus 4x4", grid_torus(4, 4)?),
        ("susp(torus 4x4)", grid_torus(4, 4)?.suspension()?),
        ("J2(9)", balanced_join(2, 9)?),
        ("remark(4,4,4,4)", remark_complex(4, 4, 4, 4)?),
    ];
    for (name, k) in &cases {
        let r = classify(k);
        let v = &r.verdicts;
        println!(
            "{name:<18} flag={} weak_pm={} normal_pm={} eulerian={} 3-manifold={} surface={}",
            v.flag, v.weak_pm, v.normal_pm, v.eulerian, v.flag_3_manifold, v.closed_surface
        );
        for (verdict, witness) in &r.witnesses {
            println!("    {verdict}: {}", serde_json::to_string(witness).unwrap());
        }
    }
    println!("\nJSON report for J2(9):\n{}", serde_json::to_string_pretty(&classify(&cases[3].1)).unwrap());
    Ok(())
}
