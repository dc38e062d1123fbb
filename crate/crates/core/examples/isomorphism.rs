//! Canonical forms of graphs and isomorphism of flag complexes.

use flagtop::constructions::{balanced_join, cross_polytope_boundary, gj, GjSpec};
use flagtop::enumerate::{are_isomorphic, canonical_form};
use flagtop::Graph;

fn main() -> flagtop::Result<()> {
    let g = Graph::complete_multipartite(&[2, 2, 2])?;
    let relabeled = g.permuted(&[3, 5, 0, 1, 4, 2]);
    let (a, b) = (canonical_form(&g)?, canonical_form(&relabeled)?);
    println!("K_{{2,2,2}} canonical code {:#x}; relabeled copy agrees: {}", a.code(), a == b);

    let j8 = balanced_join(2, 8)?;
    println!("J2(8) ≅ cross(4): {}", are_isomorphic(&j8, &cross_polytope_boundary(4)?)?);
    let gj16 = gj(&GjSpec::new(16, vec![4, 4], vec![8])?)?;
    println!("GJ((4,4),(8)) ≅ J2(16): {}", are_isomorphic(&gj16, &balanced_join(2, 16)?)?);
    Ok(())
}
