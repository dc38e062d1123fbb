//! Builds the named families and prints their f-vectors.

use flagtop::constructions::{
    balanced_join, cross_polytope_boundary, cycle, gj, gj_enumerate_specs, remark_complex, suspended_join,
};
use flagtop::io::write_facets;

fn main() -> flagtop::Result<()> {
    let named = [
        ("C5", cycle(5)?),
        ("cross(3) (octahedron)", cross_polytope_boundary(3)?),
        ("J2(10) = C5*C5", balanced_join(2, 10)?),
        ("J3(14) = C5*C5*C4", balanced_join(3, 14)?),
        ("J2*(12) = S0*C5*C5", suspended_join(2, 12)?),
        ("remark(4,4,4,4)", remark_complex(4, 4, 4, 4)?),
    ];
    for (name, k) in &named {
        println!("{name:<24} n={:<3} dim={} f={}", k.vertex_count(), k.dim(), k.f_vector());
    }

    println!("\nunion-of-joins family on 18 vertices:");
    for spec in gj_enumerate_specs(18) {
        let k = gj(&spec)?;
        println!("  a={:?} b={:?} f={}", spec.a, spec.b, k.f_vector());
    }

    println!("\nfacet file of C5:\n{}", write_facets(&named[0].1, Some("a pentagon")));
    Ok(())
}
