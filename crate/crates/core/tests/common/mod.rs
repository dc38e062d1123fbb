//! Naive reference implementations used as oracles. They work on plain
//! vertex lists and share no code with the library's bitset routines.
#![allow(dead_code)]

use std::collections::BTreeSet;

use flagtop::SimplicialComplex;

pub type Set = BTreeSet<Vec<usize>>;

fn subsets(v: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &x in v {
        let more: Vec<Vec<usize>> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(x);
                t
            })
            .collect();
        out.extend(more);
    }
    out
}

pub fn faces(k: &SimplicialComplex) -> Set {
    k.facet_lists().iter().flat_map(|f| subsets(f)).collect()
}

pub fn f_vector(k: &SimplicialComplex) -> Vec<u64> {
    let all = faces(k);
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    (0..=top).map(|s| all.iter().filter(|f| f.len() == s).count() as u64).collect()
}

pub fn reduced_euler_char(k: &SimplicialComplex) -> i64 {
    faces(k).iter().map(|f| if f.len() % 2 == 0 { -1 } else { 1 }).sum()
}

pub fn edge_count(k: &SimplicialComplex) -> usize {
    faces(k).iter().filter(|f| f.len() == 2).count()
}

pub fn degree(k: &SimplicialComplex, v: usize) -> usize {
    faces(k).iter().filter(|f| f.len() == 2 && f.contains(&v)).count()
}

/// `{τ∖σ : σ ⊆ τ ∈ K}` in original vertex ids.
pub fn link(k: &SimplicialComplex, sigma: &[usize]) -> Set {
    faces(k)
        .into_iter()
        .filter(|t| sigma.iter().all(|v| t.contains(v)))
        .map(|t| t.into_iter().filter(|v| !sigma.contains(v)).collect())
        .collect()
}

pub fn restriction(k: &SimplicialComplex, w: &[usize]) -> Set {
    faces(k).into_iter().filter(|t| t.iter().all(|v| w.contains(v))).collect()
}

/// Every clique of the 1-skeleton is a face.
pub fn is_flag(k: &SimplicialComplex) -> bool {
    let all = faces(k);
    let verts: Vec<usize> = (0..k.vertex_count()).collect();
    subsets(&verts).into_iter().all(|s| {
        let clique = s.iter().all(|&a| s.iter().all(|&b| a >= b || all.contains(&vec![a, b])));
        !clique || all.contains(&s)
    })
}

/// Faces of a sub-complex lifted back to parent ids.
pub fn lift(sub: &flagtop::Subcomplex) -> Set {
    faces(&sub.complex).into_iter().map(|f| f.into_iter().map(|v| sub.vertices[v]).collect()).collect()
}

pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    p
}
