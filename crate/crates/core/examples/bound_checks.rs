//! The edge bounds and facet-level inequalities evaluated on joins and other complexes.

use flagtop::bounds::{
    check_dual_edge, check_facet_edge_sum, check_facet_vertex_sum, check_generic_bound, check_join_criterion,
    check_lemma_c_bound, check_upper_bound_3dim, f1_j, f1_jstar,
};
use flagtop::constructions::{balanced_join, grid_torus};
use flagtop::Face;

fn main() -> flagtop::Result<()> {
    println!("f1(J_m(n)) and f1(J_m*(n)) for n = 20:");
    for m in 1..=4 {
        println!("  m={m}: {} and {}", f1_j(m, 20)?, f1_jstar(m, 20)?);
    }

    let j11 = balanced_join(2, 11)?;
    let r = check_upper_bound_3dim(&j11)?;
    println!("\nJ2(11): f1 = {} ≤ {} (tight: {}), max-degree vertex {:?}", r.lhs, r.rhs, r.tight, r.witness);

    let torus_susp = grid_torus(4, 4)?.suspension()?;
    let c = check_lemma_c_bound(&torus_susp)?;
    println!("susp(torus): f1 = {} ≤ f1(J2(18)) + c = {} with c = {:?}", c.lhs, c.rhs, c.constant);

    let facet = j11.facets()[0];
    let e = check_facet_edge_sum(&j11, facet)?;
    let v = check_facet_vertex_sum(&j11, facet)?;
    println!("\nfacet {facet} of J2(11): edge-link sum {} ≤ {}, vertex-link sum {} ≤ {}", e.lhs, e.rhs, v.lhs, v.rhs);

    let dual = check_dual_edge(&j11, facet)?;
    println!("dual-edge identities hold: {} ({} splits)", dual.holds, dual.bipartitions.len());

    let tau1 = Face::of(&facet.to_vec()[..2]);
    let jc = check_join_criterion(&j11, tau1, facet.difference(tau1))?;
    println!("J2(11) = lk{} * lk{}: {:?}", jc.tau1, jc.tau2, jc.equal);

    println!("\nJ3(13) against itself, per dimension:");
    for r in check_generic_bound(&balanced_join(3, 13)?, 3)? {
        println!("  {:<12} {} ≤ {}", r.bound, r.lhs, r.rhs);
    }
    Ok(())
}
