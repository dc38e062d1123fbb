//! Named complexes.
//!
//! Vertex numbering: join factors are laid out consecutively, so the first
//! circle occupies `0..k₁`, the next `k₁..k₁+k₂`, and so on. In balanced joins
//! the longer circles come first; in suspensions the two suspension points are
//! vertices 0 and 1.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// The cycle `0-1-…-(k−1)-0` as a 1-dimensional complex. Requires `k ≥ 4`.
pub fn cycle(k: usize) -> Result<SimplicialComplex> {
    if k < 4 {
        return Err(Error::NonFlagCycle(k));
    }
    let facets = (0..k).map(|i| Face::of(&[i, (i + 1) % k])).collect();
    SimplicialComplex::new(k, facets)
}

/// The two-point complex `S⁰`.
pub fn two_points() -> SimplicialComplex {
    SimplicialComplex::from_facet_lists(2, &[[0], [1]]).expect("valid")
}

/// Join of the given complexes, left to right.
pub fn join_all(parts: &[SimplicialComplex]) -> Result<SimplicialComplex> {
    let mut iter = parts.iter();
    let first = iter.next().ok_or_else(|| Error::InvalidParameters("empty join".into()))?.clone();
    iter.try_fold(first, |acc, k| acc.join(k))
}

/// Circle lengths of `J_m(n)`: `n mod m` circles of length `⌈n/m⌉` followed
/// by circles of length `⌊n/m⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedJoinSpec {
    pub m: usize,
    pub n: usize,
}

impl BalancedJoinSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n < 4 * m {
            return Err(Error::InvalidParameters(format!("J_m(n) needs m ≥ 1 and n ≥ 4m, got m={m}, n={n}")));
        }
        Ok(BalancedJoinSpec { m, n })
    }

    pub fn lengths(&self) -> Vec<usize> {
        let (base, extra) = (self.n / self.m, self.n % self.m);
        (0..self.m).map(|i| if i < extra { base + 1 } else { base }).collect()
    }
}

/// `J_m(n)`: the join of `m` circles with balanced lengths summing to `n`.
pub fn balanced_join(m: usize, n: usize) -> Result<SimplicialComplex> {
    let spec = BalancedJoinSpec::new(m, n)?;
    let circles = spec.lengths().into_iter().map(cycle).collect::<Result<Vec<_>>>()?;
    join_all(&circles)
}

/// `J_m*(n)`: the suspension of `J_m(n−2)`.
pub fn suspended_join(m: usize, n: usize) -> Result<SimplicialComplex> {
    if m == 0 || n < 4 * m + 2 {
        return Err(Error::InvalidParameters(format!("J_m*(n) needs m ≥ 1 and n ≥ 4m+2, got m={m}, n={n}")));
    }
    balanced_join(m, n - 2)?.suspension()
}

/// `C_d*`: boundary of the d-dimensional cross-polytope, the d-fold join of
/// `S⁰`. Vertices `2i` and `2i+1` are antipodal.
pub fn cross_polytope_boundary(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::InvalidParameters("cross-polytope dimension must be at least 1".into()));
    }
    join_all(&vec![two_points(); d])
}

/// Parameters of a member of the family `GJ(n)`: two integer partitions with
/// parts at least 4, summing to `⌊n/2⌋` and `⌈n/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GjSpec {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl GjSpec {
    /// Validates the partition sums against `n`.
    pub fn new(n: usize, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        let spec = Self::unchecked_sums(a, b)?;
        let (sa, sb): (usize, usize) = (spec.a.iter().sum(), spec.b.iter().sum());
        if sa != n / 2 || sb != n.div_ceil(2) {
            return Err(Error::InvalidParameters(format!(
                "GJ({n}) needs part sums {} and {}, got {sa} and {sb}",
                n / 2,
                n.div_ceil(2)
            )));
        }
        Ok(spec)
    }

    /// Accepts any part sums; parts must still be at least 4.
    pub fn unchecked_sums(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidParameters("both partitions need at least one part".into()));
        }
        if let Some(&p) = a.iter().chain(&b).find(|&&p| p < 4) {
            return Err(Error::InvalidParameters(format!("partition part {p} is below 4")));
        }
        Ok(GjSpec { a, b })
    }

    pub fn vertex_count(&self) -> usize {
        self.a.iter().sum::<usize>() + self.b.iter().sum::<usize>()
    }
}

/// Edges of a circle of length `len` whose vertices start at `offset`.
fn circle_edges(offset: usize, len: usize) -> Vec<Face> {
    (0..len).map(|i| Face::of(&[offset + i, offset + (i + 1) % len])).collect()
}

/// Circles laid out consecutively from `start`; returns each circle's edges.
fn circles_from(start: usize, lengths: &[usize]) -> (Vec<Vec<Face>>, usize) {
    let mut offset = start;
    let mut out = Vec::with_capacity(lengths.len());
    for &len in lengths {
        out.push(circle_edges(offset, len));
        offset += len;
    }
    (out, offset)
}

fn union_of_joins(n: usize, pairs: &[(&[Face], &[Face])]) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (left, right) in pairs {
        for e in *left {
            for f in *right {
                facets.push(e.union(*f));
            }
        }
    }
    SimplicialComplex::new(n, facets)
}

/// `⋃_{i,j} C_{a_i} * C_{b_j}` on disjoint circles; the `a` circles come first.
pub fn gj(spec: &GjSpec) -> Result<SimplicialComplex> {
    let n = spec.vertex_count();
    if n > crate::complex::MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: crate::complex::MAX_VERTICES });
    }
    let (a_circles, split) = circles_from(0, &spec.a);
    let (b_circles, _) = circles_from(split, &spec.b);
    let mut pairs = Vec::new();
    for a in &a_circles {
        for b in &b_circles {
            pairs.push((a.as_slice(), b.as_slice()));
        }
    }
    union_of_joins(n, &pairs)
}

/// Partitions of `total` into parts `≥ min_part`, each non-increasing, in
/// lexicographically ascending order.
pub fn partitions_with_min_part(total: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, min_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (min_part..=max_part.min(remaining)).rev() {
            let rest = remaining - p;
            if rest != 0 && rest < min_part {
                continue;
            }
            cur.push(p);
            rec(rest, p, min_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total == 0 {
        return out;
    }
    rec(total, total, min_part.max(1), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every member of `GJ(n)`, up to reordering parts and, when `n` is even,
/// swapping the two partitions.
pub fn gj_enumerate_specs(n: usize) -> Vec<GjSpec> {
    if n < 8 {
        return Vec::new();
    }
    let lower = partitions_with_min_part(n / 2, 4);
    let upper = partitions_with_min_part(n.div_ceil(2), 4);
    let mut out = Vec::new();
    for (i, a) in lower.iter().enumerate() {
        for (j, b) in upper.iter().enumerate() {
            if n.is_multiple_of(2) && j < i {
                continue;
            }
            out.push(GjSpec { a: a.clone(), b: b.clone() });
        }
    }
    out
}

/// `(L₁*L₃) ∪ (L₂*L₃) ∪ (L₁*L₄)` on four disjoint circles laid out in order.
/// A flag weak 3-pseudomanifold that is not normal.
pub fn remark_complex(l1: usize, l2: usize, l3: usize, l4: usize) -> Result<SimplicialComplex> {
    if let Some(&bad) = [l1, l2, l3, l4].iter().find(|&&l| l < 4) {
        return Err(Error::NonFlagCycle(bad));
    }
    let (c, n) = circles_from(0, &[l1, l2, l3, l4]);
    union_of_joins(n, &[(&c[0], &c[2]), (&c[1], &c[2]), (&c[0], &c[3])])
}

/// The `rows × cols` grid torus with diagonals; vertex `(i, j)` has id `i·cols + j`.
/// Needs both sides at least 3 to be a simplicial complex.
pub fn grid_torus(rows: usize, cols: usize) -> Result<SimplicialComplex> {
    if rows < 3 || cols < 3 {
        return Err(Error::InvalidParameters(format!("grid torus needs sides ≥ 3, got {rows}×{cols}")));
    }
    let id = |i: usize, j: usize| (i % rows) * cols + (j % cols);
    let mut facets = Vec::with_capacity(2 * rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            facets.push(Face::of(&[id(i, j), id(i + 1, j), id(i + 1, j + 1)]));
            facets.push(Face::of(&[id(i, j), id(i, j + 1), id(i + 1, j + 1)]));
        }
    }
    SimplicialComplex::new(rows * cols, facets)
}

/// Cone over a complex with apex `n`.
pub fn cone(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    k.join(&SimplicialComplex::simplex(1)?)
}

/// Disjoint union; the second complex's ids are offset.
pub fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    let offset = a.vertex_count();
    let facets = a.facets().iter().copied().chain(b.facets().iter().map(|f| f.shifted(offset))).collect();
    SimplicialComplex::new(offset + b.vertex_count(), facets)
}

/// Barycentric subdivision: the order complex of the nonempty faces.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    let faces: Vec<Face> = k.all_faces().filter(|f| !f.is_empty()).collect();
    if faces.len() > crate::complex::MAX_VERTICES {
        return Err(Error::TooManyVertices { n: faces.len(), max: crate::complex::MAX_VERTICES });
    }
    let mut graph = crate::complex::Graph::new(faces.len())?;
    for (i, a) in faces.iter().enumerate() {
        for (j, b) in faces.iter().enumerate().skip(i + 1) {
            if a.is_subset_of(*b) || b.is_subset_of(*a) {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok(SimplicialComplex::clique_complex(&graph))
}
