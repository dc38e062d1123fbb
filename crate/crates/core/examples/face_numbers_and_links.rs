//! Faces, links, restrictions, joins, and reduced Euler characteristics.

use flagtop::constructions::{cross_polytope_boundary, cycle};
use flagtop::validators::minimal_nonfaces;
use flagtop::Face;

fn main() -> flagtop::Result<()> {
    let oct = cross_polytope_boundary(3)?;
    println!("octahedron f = {}, reduced χ = {}", oct.f_vector(), oct.reduced_euler_char());
    println!("triangles: {:?}", oct.faces(2).iter().map(|f| f.to_string()).collect::<Vec<_>>());
    println!("minimal non-faces: {:?}", minimal_nonfaces(&oct).iter().map(|f| f.to_string()).collect::<Vec<_>>());

    let link = oct.link(Face::singleton(0))?;
    println!(
        "link of vertex 0: {} vertices {:?} (parent ids {})",
        link.complex.vertex_count(),
        link.complex.facet_lists(),
        link.parent_vertices()
    );
    let edge_link = oct.link(Face::of(&[0, 2]))?;
    println!("link of edge {{0,2}}: parent vertices {}", edge_link.parent_vertices());

    let restricted = oct.restriction(Face::of(&[0, 1, 2, 3]))?;
    println!("restriction to {{0,1,2,3}}: {:?}", restricted.complex.facet_lists());

    let join = cycle(4)?.join(&cycle(5)?)?;
    println!(
        "C4*C5: f = {}, reduced χ = {} = -χ(C4)·χ(C5) = {}",
        join.f_vector(),
        join.reduced_euler_char(),
        -cycle(4)?.reduced_euler_char() * cycle(5)?.reduced_euler_char()
    );
    Ok(())
}
