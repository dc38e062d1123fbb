//! A named collection of standard complexes, and seeded random complexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, Graph, SimplicialComplex};
use crate::constructions::{
    balanced_join, barycentric_subdivision, cross_polytope_boundary, cycle, disjoint_union, gj, gj_enumerate_specs,
    grid_torus, join_all, remark_complex, suspended_join,
};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub complex: SimplicialComplex,
}

fn entry(name: impl Into<String>, complex: SimplicialComplex) -> Entry {
    Entry { name: name.into(), complex }
}

/// Cycles, cross-polytope boundaries, balanced and suspended joins, the
/// union-of-joins family, the weak-not-normal example, a torus and its
/// suspension, a subdivided sphere, and a disconnected complex. Covers
/// dimensions 1 through 5.
pub fn standard() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for k in 4..=8 {
        out.push(entry(format!("C{k}"), cycle(k)?));
    }
    for d in 3..=6 {
        out.push(entry(format!("cross({d})"), cross_polytope_boundary(d)?));
    }
    for n in 8..=20 {
        out.push(entry(format!("J2({n})"), balanced_join(2, n)?));
    }
    for n in 6..=9 {
        out.push(entry(format!("J1*({n})"), suspended_join(1, n)?));
    }
    for n in 10..=14 {
        out.push(entry(format!("J2*({n})"), suspended_join(2, n)?));
    }
    for n in 12..=18 {
        out.push(entry(format!("J3({n})"), balanced_join(3, n)?));
    }
    for n in 14..=16 {
        out.push(entry(format!("J3*({n})"), suspended_join(3, n)?));
    }
    for n in 16..=20 {
        for spec in gj_enumerate_specs(n) {
            if spec.a.len() > 1 || spec.b.len() > 1 {
                out.push(entry(format!("GJ({n};{:?},{:?})", spec.a, spec.b), gj(&spec)?));
            }
        }
    }
    out.push(entry("remark(4,4,4,4)", remark_complex(4, 4, 4, 4)?));
    out.push(entry("remark(4,5,4,6)", remark_complex(4, 5, 4, 6)?));
    let torus = grid_torus(4, 4)?;
    out.push(entry("susp(torus 4x4)", torus.suspension()?));
    out.push(entry("torus 4x4", torus));
    let tetra_boundary = SimplicialComplex::simplex(4)?.facets()[0].boundary().collect();
    let sd = barycentric_subdivision(&SimplicialComplex::new(4, tetra_boundary)?)?;
    out.push(entry("susp(sd(tetrahedron))", sd.suspension()?));
    out.push(entry("sd(tetrahedron)*cross(3)", sd.join(&cross_polytope_boundary(3)?)?));
    out.push(entry("sd(tetrahedron)", sd));
    out.push(entry("C4*C5*C6", join_all(&[cycle(4)?, cycle(5)?, cycle(6)?])?));
    out.push(entry("cross(3)*J2(8)", cross_polytope_boundary(3)?.join(&balanced_join(2, 8)?)?));
    out.push(entry("cross(4)+cross(4)", disjoint_union(&cross_polytope_boundary(4)?, &cross_polytope_boundary(4)?)?));
    Ok(out)
}

/// Erdős–Rényi graph `G(n, p)` from a seeded generator.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).expect("n ≤ 64");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Complex generated by `facets` random subsets of `0..n` of size 1..=max_size;
/// uncovered vertices become singleton facets.
pub fn random_complex(rng: &mut impl Rng, n: usize, facets: usize, max_size: usize) -> SimplicialComplex {
    assert!(n >= 1 && max_size >= 1);
    let mut gens: Vec<Face> = (0..facets)
        .map(|_| {
            let size = rng.random_range(1..=max_size.min(n));
            let mut f = Face::EMPTY;
            while f.len() < size {
                f = f.with(rng.random_range(0..n));
            }
            f
        })
        .collect();
    let covered = gens.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
    gens.extend(Face::full(n).difference(covered).vertices().map(Face::singleton));
    SimplicialComplex::generated_by(n, gens)
}

/// Clique complex of a random graph.
pub fn random_flag_complex(rng: &mut impl Rng, n: usize, p: f64) -> SimplicialComplex {
    SimplicialComplex::clique_complex(&random_graph(rng, n, p))
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_corpus_builds_with_unique_names() {
        let c = standard().unwrap();
        let mut names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        assert!(c.iter().any(|e| e.complex.dim() == 5));
    }

    #[test]
    fn random_generation_is_reproducible() {
        let a = random_complex(&mut seeded(5), 7, 5, 4);
        let b = random_complex(&mut seeded(5), 7, 5, 4);
        assert_eq!(a, b);
        assert_eq!(a.vertex_count(), 7);
        let g = random_flag_complex(&mut seeded(9), 9, 0.5);
        assert_eq!(g.vertex_count(), 9);
    }
}
