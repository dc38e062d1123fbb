//! Isomorph-free generation of graphs with bounded maximum degree by canonical
//! edge augmentation.
//!
//! A graph `H + e` is accepted as a child of `H` only if `e` lies in the same
//! automorphism orbit of `H + e` as its canonical last edge (the edge whose
//! canonical endpoint labels are largest). Every isomorphism class then has
//! exactly one accepted parent class; isomorphic children of one parent are
//! merged by canonical code.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_form, canonical_form_colored, CanonicalGraph, MAX_CANONICAL_VERTICES};
use crate::complex::Graph;
use crate::error::{Error, Result};

/// The edge of `h` with the lexicographically largest (larger label, smaller label) pair.
fn canonical_last_edge(h: &Graph, form: &CanonicalGraph) -> (usize, usize) {
    let lab = form.labeling();
    h.edges().into_iter().max_by_key(|&(u, v)| (lab[u].max(lab[v]), lab[u].min(lab[v]))).expect("child has an edge")
}

fn degree_pair(h: &Graph, (u, v): (usize, usize)) -> (usize, usize) {
    let (a, b) = (h.degree(u), h.degree(v));
    (a.min(b), a.max(b))
}

/// Accepted children of `g`, each relabeled canonically, in generation order.
fn children(g: &Graph, max_degree: usize) -> Vec<Graph> {
    let n = g.vertex_count();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in 0..n {
        if g.degree(u) >= max_degree {
            continue;
        }
        for v in u + 1..n {
            if g.has_edge(u, v) || g.degree(v) >= max_degree {
                continue;
            }
            let mut h = g.clone();
            h.add_edge(u, v).expect("in range");
            let form = canonical_form(&h).expect("size checked");
            if seen.contains(&form.code()) {
                continue;
            }
            let last = canonical_last_edge(&h, &form);
            let accept = last == (u, v)
                || (degree_pair(&h, last) == degree_pair(&h, (u, v))
                    && canonical_form_colored(&h, &[1 << u | 1 << v]).expect("size checked")
                        == canonical_form_colored(&h, &[1 << last.0 | 1 << last.1]).expect("size checked"));
            if accept {
                seen.insert(form.code());
                out.push(form.graph());
            }
        }
    }
    out
}

/// One canonical representative of every isomorphism class of `n`-vertex
/// graphs with maximum degree at most `max_degree`, ordered by edge count and
/// then by generation order (deterministic regardless of thread count).
pub fn graphs_with_max_degree(n: usize, max_degree: usize) -> Result<Vec<Graph>> {
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_CANONICAL_VERTICES });
    }
    let mut all = Vec::new();
    let mut level = vec![Graph::new(n)?];
    while !level.is_empty() {
        let next: Vec<Graph> = level.par_iter().flat_map_iter(|g| children(g, max_degree)).collect();
        all.append(&mut level);
        level = next;
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_all_small_graphs() {
        // Number of unlabeled graphs on n vertices.
        for (n, count) in [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            assert_eq!(graphs_with_max_degree(n, n.saturating_sub(1)).unwrap().len(), count, "n={n}");
        }
    }

    #[test]
    fn bounded_degree_counts() {
        // Matchings on 8 vertices: 0..=4 edges.
        assert_eq!(graphs_with_max_degree(8, 1).unwrap().len(), 5);
        // Max degree 2 on 6 vertices: disjoint unions of paths and cycles.
        assert_eq!(graphs_with_max_degree(6, 2).unwrap().len(), 19);
        assert_eq!(graphs_with_max_degree(7, 3).unwrap().len(), 150);
    }

    #[test]
    fn representatives_are_distinct() {
        let gs = graphs_with_max_degree(7, 3).unwrap();
        let codes: HashSet<u128> = gs.iter().map(|g| canonical_form(g).unwrap().code()).collect();
        assert_eq!(codes.len(), gs.len());
        assert!(gs.iter().all(|g| (0..7).all(|v| g.degree(v) <= 3)));
    }
}
