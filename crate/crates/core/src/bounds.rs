//! Closed-form face counts and checkers for the edge and face-number bounds.
//!
//! Every formula is evaluated in exact integer arithmetic; divisions are done
//! last and checked for exactness.

use serde::Serialize;

use crate::complex::{FVector, Face, SimplicialComplex};
use crate::constructions::balanced_join;
use crate::error::{Error, Result};
use crate::validators::{self, Verdict};

/// One evaluated inequality `lhs ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub tight: bool,
    /// Facet or vertex realizing the extreme value (smallest in lexicographic order on ties).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Face>,
    /// For the facet-sum bounds: whether the covering condition implied by
    /// equality was observed. Only set when the bound is tight.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_condition: Option<bool>,
    /// Auxiliary constant, e.g. the `c` of the normal-pseudomanifold edge bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant: Option<i64>,
}

impl BoundReport {
    fn new(bound: &str, n: usize, m: Option<usize>, lhs: i64, rhs: i64) -> Self {
        BoundReport {
            bound: bound.to_string(),
            n,
            m,
            lhs,
            rhs,
            holds: lhs <= rhs,
            tight: lhs == rhs,
            witness: None,
            equality_condition: None,
            constant: None,
        }
    }

    pub fn slack(&self) -> i64 {
        self.rhs - self.lhs
    }
}

fn exact_div(num: i128, den: i128, what: &'static str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::NonIntegral(what));
    }
    i64::try_from(num / den).map_err(|_| Error::InvalidParameters(format!("{what} overflows")))
}

/// Edges of `J_m(n)`: `((m−1)n² + q(q−m)) / 2m + n` with `q = n mod m`.
pub fn f1_j(m: usize, n: usize) -> Result<i64> {
    if m == 0 || n < 4 * m {
        return Err(Error::InvalidParameters(format!("f1(J_m(n)) needs m ≥ 1 and n ≥ 4m, got m={m}, n={n}")));
    }
    let (m, n) = (m as i128, n as i128);
    let q = n % m;
    Ok(exact_div((m - 1) * n * n + q * (q - m), 2 * m, "f1(J_m(n))")? + n as i64)
}

/// Edges of `J_m*(n)`: `((m−1)(n−2)² + q(q−m)) / 2m + 3(n−2)` with `q = (n−2) mod m`.
pub fn f1_jstar(m: usize, n: usize) -> Result<i64> {
    if m == 0 || n < 4 * m + 2 {
        return Err(Error::InvalidParameters(format!("f1(J_m*(n)) needs m ≥ 1 and n ≥ 4m+2, got m={m}, n={n}")));
    }
    let (m, k) = (m as i128, n as i128 - 2);
    let q = k % m;
    Ok(exact_div((m - 1) * k * k + q * (q - m), 2 * m, "f1(J_m*(n))")? + 3 * k as i64)
}

/// The f-vector forced on a 3-dimensional Eulerian complex by `f₀` and `f₁`:
/// `(1, f₀, f₁, 2f₁ − 2f₀, f₁ − f₀)`.
pub fn eulerian3_fvector(f0: u64, f1: u64) -> Result<FVector> {
    if f0 < 5 || f1 < f0 {
        return Err(Error::InvalidParameters(format!("need f1 ≥ f0 ≥ 5, got f0={f0}, f1={f1}")));
    }
    Ok(FVector::new(vec![1, f0, f1, 2 * f1 - 2 * f0, f1 - f0]))
}

fn require(verdict: Verdict, name: &'static str) -> Result<()> {
    if verdict.holds {
        Ok(())
    } else {
        Err(Error::Precondition(name))
    }
}

fn require_dim(k: &SimplicialComplex, expected: isize) -> Result<()> {
    if k.dim() != expected {
        return Err(Error::Dimension { expected, actual: k.dim() });
    }
    Ok(())
}

/// Vertex of largest degree, smallest id on ties.
fn max_degree_vertex(k: &SimplicialComplex) -> Option<usize> {
    let g = k.one_skeleton();
    (0..k.vertex_count()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
}

/// `f₁(K) ≤ f₁(J₂(n))` for a flag 3-dimensional Eulerian complex.
pub fn check_upper_bound_3dim(k: &SimplicialComplex) -> Result<BoundReport> {
    require_dim(k, 3)?;
    require(validators::is_flag(k), "flag")?;
    require(validators::is_eulerian(k), "Eulerian")?;
    let n = k.vertex_count();
    let mut r = BoundReport::new("f1_le_f1_J2", n, Some(2), k.edge_count() as i64, f1_j(2, n)?);
    r.witness = max_degree_vertex(k).map(Face::singleton);
    Ok(r)
}

/// `f₁(K) ≤ f₁(J₂(n)) + c` with `c = 3 − 3 min_v χ̃(lk v)`, for a flag normal
/// 3-pseudomanifold. The witness is the vertex attaining the minimum.
pub fn check_lemma_c_bound(k: &SimplicialComplex) -> Result<BoundReport> {
    require_dim(k, 3)?;
    require(validators::is_flag(k), "flag")?;
    require(validators::is_normal_pseudomanifold(k), "a normal pseudomanifold")?;
    let n = k.vertex_count();
    let (vertex, min_chi) = (0..n)
        .map(|v| (v, k.link(Face::singleton(v)).expect("vertex").complex.reduced_euler_char()))
        .min_by_key(|&(v, chi)| (chi, v))
        .expect("nonempty");
    let c = 3 - 3 * min_chi;
    let mut r = BoundReport::new("f1_le_f1_J2_plus_c", n, Some(2), k.edge_count() as i64, f1_j(2, n)? + c);
    r.witness = Some(Face::singleton(vertex));
    r.constant = Some(c);
    Ok(r)
}

fn require_facet(k: &SimplicialComplex, facet: Face) -> Result<()> {
    if !k.is_facet(facet) {
        return Err(Error::NotAFacet { face: facet });
    }
    Ok(())
}

fn require_flag_weak_3pm(k: &SimplicialComplex) -> Result<()> {
    require_dim(k, 3)?;
    require(validators::is_flag(k), "flag")?;
    require(validators::is_weak_pseudomanifold(k), "a weak pseudomanifold")
}

/// `⋃_{w∈τ} V(lk w) = V(K)` for every ridge `τ` of the facet.
fn ridges_cover(k: &SimplicialComplex, facet: Face) -> bool {
    facet.boundary().all(|ridge| {
        ridge.vertices().fold(Face::EMPTY, |acc, w| acc.union(k.link_vertices(Face::singleton(w)))) == k.vertex_set()
    })
}

fn edge_sum_unchecked(k: &SimplicialComplex, facet: Face) -> BoundReport {
    let lhs: usize = facet.subsets_of_size(2).map(|e| k.link_vertices(e).len()).sum();
    let mut r =
        BoundReport::new("facet_edge_link_sum", k.vertex_count(), None, lhs as i64, k.vertex_count() as i64 + 16);
    r.witness = Some(facet);
    if r.tight {
        r.equality_condition = Some(ridges_cover(k, facet));
    }
    r
}

fn vertex_sum_unchecked(k: &SimplicialComplex, facet: Face) -> BoundReport {
    let lhs: usize = facet.vertices().map(|v| k.link_vertices(Face::singleton(v)).len()).sum();
    let n = k.vertex_count() as i64;
    let mut r = BoundReport::new("facet_vertex_link_sum", k.vertex_count(), None, lhs as i64, 2 * n + 8);
    r.witness = Some(facet);
    if r.tight {
        r.equality_condition = Some(ridges_cover(k, facet));
    }
    r
}

/// `Σ_{e ⊆ σ} f₀(lk e) ≤ n + 16` over the six edges of a facet of a flag weak 3-pseudomanifold.
pub fn check_facet_edge_sum(k: &SimplicialComplex, facet: Face) -> Result<BoundReport> {
    require_facet(k, facet)?;
    require_flag_weak_3pm(k)?;
    Ok(edge_sum_unchecked(k, facet))
}

/// `Σ_{v ∈ σ} f₀(lk v) ≤ 2n + 8` over the four vertices of a facet of a flag weak 3-pseudomanifold.
pub fn check_facet_vertex_sum(k: &SimplicialComplex, facet: Face) -> Result<BoundReport> {
    require_facet(k, facet)?;
    require_flag_weak_3pm(k)?;
    Ok(vertex_sum_unchecked(k, facet))
}

/// Both facet sums for every facet, in facet order, validating the complex once.
pub fn facet_sums_sweep(k: &SimplicialComplex) -> Result<Vec<(BoundReport, BoundReport)>> {
    require_flag_weak_3pm(k)?;
    Ok(k.facets().iter().map(|&f| (edge_sum_unchecked(k, f), vertex_sum_unchecked(k, f))).collect())
}

/// One split `σ = τ₁ ⊔ τ₂` of a facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub tau1: Face,
    pub tau2: Face,
    pub link_sizes: (usize, usize),
    /// `V(lk τ₁) ∩ V(lk τ₂) = V(lk σ)`.
    pub intersection_is_facet_link: bool,
    /// `f₀(lk τ₁) + f₀(lk τ₂) ≤ f₀(K)`.
    pub size_bound: bool,
    /// `V(lk τ₁) ∪ V(lk τ₂) = V(K)`.
    pub union_covers: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualEdgeReport {
    pub facet: Face,
    pub holds: bool,
    /// Pairs of ridges of the facet whose links share a vertex.
    pub overlapping_ridge_pairs: Vec<(Face, Face)>,
    pub bipartitions: Vec<Bipartition>,
}

/// Link disjointness for ridge pairs and the intersection identity for every
/// split of a facet into two nonempty parts (`τ₁` containing the smallest vertex).
pub fn check_dual_edge(k: &SimplicialComplex, facet: Face) -> Result<DualEdgeReport> {
    require_facet(k, facet)?;
    require(validators::is_flag(k), "flag")?;
    let ridges: Vec<Face> = facet.boundary().collect();
    let mut overlapping = Vec::new();
    for (i, a) in ridges.iter().enumerate() {
        for b in &ridges[i + 1..] {
            if !k.link_vertices(*a).is_disjoint(k.link_vertices(*b)) {
                overlapping.push((*a.min(b), *a.max(b)));
            }
        }
    }
    overlapping.sort();
    let sigma_link = k.link_vertices(facet);
    let anchor = facet.min_vertex().map(Face::singleton).unwrap_or(Face::EMPTY);
    let mut bipartitions: Vec<Bipartition> = facet
        .subsets()
        .filter(|t| anchor.is_subset_of(*t) && *t != facet)
        .map(|tau1| {
            let tau2 = facet.difference(tau1);
            let (l1, l2) = (k.link_vertices(tau1), k.link_vertices(tau2));
            Bipartition {
                tau1,
                tau2,
                link_sizes: (l1.len(), l2.len()),
                intersection_is_facet_link: l1.intersection(l2) == sigma_link,
                size_bound: l1.len() + l2.len() <= k.vertex_count(),
                union_covers: l1.union(l2) == k.vertex_set(),
            }
        })
        .collect();
    bipartitions.sort_by_key(|b| b.tau1);
    let holds = overlapping.is_empty() && bipartitions.iter().all(|b| b.intersection_is_facet_link && b.size_bound);
    Ok(DualEdgeReport { facet, holds, overlapping_ridge_pairs: overlapping, bipartitions })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinCriterionReport {
    pub tau1: Face,
    pub tau2: Face,
    /// `V(lk τ₁) ∪ V(lk τ₂) = V(K)`.
    pub union_covers: bool,
    /// `K ⊆ lk τ₁ * lk τ₂`; evaluated only when the union covers.
    pub contained: Option<bool>,
    /// `K = lk τ₁ * lk τ₂`; evaluated only when the union covers.
    pub equal: Option<bool>,
    pub normal_pm: bool,
    /// Containment whenever the union covers, and equality in addition for
    /// normal pseudomanifolds.
    pub holds: bool,
}

impl JoinCriterionReport {
    pub fn strict_containment(&self) -> bool {
        self.contained == Some(true) && self.equal == Some(false)
    }
}

/// Tests whether a flag complex sits inside (or equals) the join of the links of
/// two complementary faces of a facet.
pub fn check_join_criterion(k: &SimplicialComplex, tau1: Face, tau2: Face) -> Result<JoinCriterionReport> {
    if !tau1.is_disjoint(tau2) {
        return Err(Error::InvalidParameters(format!("{tau1} and {tau2} overlap")));
    }
    require_facet(k, tau1.union(tau2))?;
    require(validators::is_flag(k), "flag")?;
    let (v1, v2) = (k.link_vertices(tau1), k.link_vertices(tau2));
    let union_covers = v1.union(v2) == k.vertex_set();
    let normal_pm = validators::is_normal_pseudomanifold(k).holds;
    let (mut contained, mut equal) = (None, None);
    if union_covers {
        let lk1 = k.link_facets(tau1);
        let lk2 = k.link_facets(tau2);
        let in_link = |facets: &[Face], f: Face| facets.iter().any(|g| f.is_subset_of(*g));
        let inside = k.facets().iter().all(|&f| {
            f.is_subset_of(v1.union(v2)) && in_link(&lk1, f.intersection(v1)) && in_link(&lk2, f.intersection(v2))
        });
        let join_inside_k = lk1.iter().all(|&a| lk2.iter().all(|&b| k.contains_face(a.union(b))));
        contained = Some(inside);
        equal = Some(inside && join_inside_k);
    }
    let holds = !union_covers || (contained == Some(true) && (!normal_pm || equal == Some(true)));
    Ok(JoinCriterionReport { tau1, tau2, union_covers, contained, equal, normal_pm, holds })
}

/// `f_i(K) ≤ f_i(J_m(n))` for every `i ≥ 1`, for a flag Eulerian `(2m−1)`-complex.
pub fn check_generic_bound(k: &SimplicialComplex, m: usize) -> Result<Vec<BoundReport>> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be at least 1".into()));
    }
    require_dim(k, 2 * m as isize - 1)?;
    require(validators::is_flag(k), "flag")?;
    require(validators::is_eulerian(k), "Eulerian")?;
    let n = k.vertex_count();
    let reference = balanced_join(m, n)?.f_vector();
    let observed = k.f_vector();
    Ok((1..=(2 * m as isize - 1))
        .map(|i| {
            BoundReport::new(&format!("f{i}_le_f{i}_J{m}"), n, Some(m), observed.get(i) as i64, reference.get(i) as i64)
        })
        .collect())
}

/// Degree profile forced by `f₁(K) = f₁(J₂(n))` on a flag 3-dimensional
/// Eulerian complex: `⌈n/2⌉` vertices of degree `⌊n/2⌋+2`, `⌊n/2⌋` of degree
/// `⌈n/2⌉+2`, and `K` and all vertex links connected.
pub fn equality_degree_profile_holds(k: &SimplicialComplex) -> bool {
    let n = k.vertex_count();
    let g = k.one_skeleton();
    let (lo, hi) = (n / 2, n.div_ceil(2));
    let low_deg = (0..n).filter(|&v| g.degree(v) == lo + 2).count();
    let high_deg = (0..n).filter(|&v| g.degree(v) == hi + 2).count();
    let degrees_ok = if lo == hi { low_deg == n } else { low_deg == hi && high_deg == lo };
    degrees_ok && g.is_connected() && (0..n).all(|v| k.link(Face::singleton(v)).expect("vertex").complex.is_connected())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{balanced_join, gj, grid_torus, remark_complex, suspended_join, GjSpec};

    #[test]
    fn formula_values() {
        assert_eq!(f1_j(2, 8).unwrap(), 24);
        assert_eq!(f1_j(3, 14).unwrap(), 79);
        assert_eq!(f1_jstar(1, 6).unwrap(), 12);
        assert_eq!(f1_jstar(2, 10).unwrap(), 40);
        assert_eq!(f1_jstar(2, 11).unwrap(), 47);
        for n in 8..=40 {
            assert_eq!(f1_j(2, n).unwrap(), (n * n / 4 + n) as i64);
        }
        assert!(f1_j(2, 7).is_err());
        assert!(f1_jstar(2, 9).is_err());
    }

    #[test]
    fn eulerian_fvector_formula() {
        assert_eq!(eulerian3_fvector(8, 24).unwrap().counts(), &[1, 8, 24, 32, 16]);
        assert_eq!(eulerian3_fvector(10, 35).unwrap().counts(), &[1, 10, 35, 50, 25]);
        assert!(eulerian3_fvector(4, 10).is_err());
        assert!(eulerian3_fvector(9, 8).is_err());
    }

    #[test]
    fn upper_bound_is_tight_on_joins() {
        let r = check_upper_bound_3dim(&balanced_join(2, 12).unwrap()).unwrap();
        assert!(r.tight);
        assert_eq!(r.lhs, 48);
        let spec = GjSpec::new(16, vec![4, 4], vec![8]).unwrap();
        assert!(check_upper_bound_3dim(&gj(&spec).unwrap()).unwrap().tight);
    }

    #[test]
    fn upper_bound_rejects_invalid_input() {
        let torus_suspension = grid_torus(4, 4).unwrap().suspension().unwrap();
        assert_eq!(check_upper_bound_3dim(&torus_suspension), Err(Error::Precondition("Eulerian")));
        assert!(check_upper_bound_3dim(&remark_complex(4, 4, 4, 4).unwrap()).unwrap().holds);
        assert!(matches!(check_upper_bound_3dim(&suspended_join(1, 6).unwrap()), Err(Error::Dimension { .. })));
    }

    #[test]
    fn facet_sums_on_joins() {
        let j8 = balanced_join(2, 8).unwrap();
        let f = j8.facets()[0];
        let e = check_facet_edge_sum(&j8, f).unwrap();
        assert_eq!((e.lhs, e.rhs, e.tight, e.equality_condition), (24, 24, true, Some(true)));
        let v = check_facet_vertex_sum(&j8, f).unwrap();
        assert_eq!((v.lhs, v.rhs, v.tight), (24, 24, true));
        let j10 = balanced_join(2, 10).unwrap();
        let e = check_facet_edge_sum(&j10, j10.facets()[0]).unwrap();
        assert_eq!((e.lhs, e.rhs), (26, 26));
        let j9 = balanced_join(2, 9).unwrap();
        let v = check_facet_vertex_sum(&j9, j9.facets()[0]).unwrap();
        assert_eq!((v.lhs, v.rhs), (26, 26));
        assert!(matches!(check_facet_edge_sum(&j8, Face::of(&[0, 1])), Err(Error::NotAFacet { .. })));
    }

    #[test]
    fn dual_edge_on_j8() {
        let j8 = balanced_join(2, 8).unwrap();
        let r = check_dual_edge(&j8, j8.facets()[0]).unwrap();
        assert!(r.holds);
        assert_eq!(r.bipartitions.len(), 7);
        let edge_split = r.bipartitions.iter().find(|b| b.tau1 == Face::of(&[0, 1])).unwrap();
        assert_eq!(edge_split.link_sizes, (4, 4));
    }

    #[test]
    fn join_criterion_on_j10() {
        let j10 = balanced_join(2, 10).unwrap();
        let r = check_join_criterion(&j10, Face::of(&[0, 1]), Face::of(&[5, 6])).unwrap();
        assert!(r.union_covers && r.holds);
        assert_eq!(r.equal, Some(true));
    }

    #[test]
    fn generic_bound_dimension_guard() {
        let jstar = suspended_join(2, 12).unwrap();
        assert!(matches!(check_generic_bound(&jstar, 2), Err(Error::Dimension { .. })));
        let reports = check_generic_bound(&balanced_join(3, 14).unwrap(), 3).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.tight));
    }
}
