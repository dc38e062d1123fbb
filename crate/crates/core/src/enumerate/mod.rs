//! Exhaustive, isomorph-free enumeration of small flag 3-dimensional complexes.
//!
//! A flag complex is the clique complex of its graph, so classes of complexes
//! are classes of graphs. In every class handled here each vertex link is a
//! flag 2-dimensional Eulerian complex, and such a complex has at least six
//! vertices (the octahedron is the smallest). Hence every vertex has degree
//! ≥ 6 and the complement graph has maximum degree ≤ n − 7; the search runs
//! over those complements.

mod canon;
mod generate;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use canon::{canonical_form, canonical_form_colored, CanonicalGraph, MAX_CANONICAL_VERTICES};
pub use generate::graphs_with_max_degree;

use crate::bounds::f1_j;
use crate::complex::{FVector, SimplicialComplex};
use crate::constructions::{gj, gj_enumerate_specs, GjSpec};
use crate::error::{Error, Result};
use crate::validators;

pub const ENUMERATION_SCHEMA: &str = "flagtop.enumeration.v1";
pub const MIN_ENUMERATION_VERTICES: usize = 8;
pub const MAX_ENUMERATION_VERTICES: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexClass {
    FlagNormal3pm,
    FlagEulerian3,
    Flag3Manifold,
}

impl ComplexClass {
    pub const ALL: [ComplexClass; 3] =
        [ComplexClass::FlagNormal3pm, ComplexClass::FlagEulerian3, ComplexClass::Flag3Manifold];

    pub fn name(self) -> &'static str {
        match self {
            ComplexClass::FlagNormal3pm => "flag_normal_3pm",
            ComplexClass::FlagEulerian3 => "flag_eulerian_3",
            ComplexClass::Flag3Manifold => "flag_3_manifold",
        }
    }

    /// Membership test, cheapest checks first.
    pub fn contains(self, k: &SimplicialComplex) -> bool {
        if k.dim() != 3 {
            return false;
        }
        match self {
            ComplexClass::FlagNormal3pm => {
                validators::is_weak_pseudomanifold(k).holds
                    && validators::is_flag(k).holds
                    && validators::is_normal_pseudomanifold(k).holds
            }
            ComplexClass::FlagEulerian3 => {
                validators::is_pure(k).holds && validators::is_flag(k).holds && validators::is_eulerian(k).holds
            }
            ComplexClass::Flag3Manifold => validators::is_flag_3_manifold(k).map(|v| v.holds).unwrap_or(false),
        }
    }
}

impl fmt::Display for ComplexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComplexClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ComplexClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown class {s:?}")))
    }
}

/// One isomorphism class, stored with its canonical vertex labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    #[serde(skip)]
    pub complex: SimplicialComplex,
    pub f_vector: FVector,
    pub facets: Vec<Vec<usize>>,
    #[serde(skip)]
    pub form: CanonicalGraph,
}

impl Representative {
    fn new(k: &SimplicialComplex) -> Self {
        let form = canonical_form(&k.one_skeleton()).expect("n ≤ 16");
        let complex = k.relabeled(form.labeling()).expect("permutation");
        Representative { f_vector: complex.f_vector(), facets: complex.facet_lists(), complex, form }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationResult {
    pub schema: &'static str,
    pub n: usize,
    pub class: ComplexClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f1: Option<u64>,
    /// Complement graphs examined.
    pub candidates: usize,
    pub count: usize,
    pub representatives: Vec<Representative>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl EnumerationResult {
    pub fn max_f1(&self) -> Option<u64> {
        self.representatives.iter().map(|r| r.f_vector.get(1)).max()
    }

    pub fn contains_isomorph_of(&self, k: &SimplicialComplex) -> bool {
        canonical_form(&k.one_skeleton()).map(|f| self.representatives.iter().any(|r| r.form == f)).unwrap_or(false)
    }
}

fn check_range(n: usize) -> Result<()> {
    if !(MIN_ENUMERATION_VERTICES..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(Error::InvalidParameters(format!(
            "enumeration supports {MIN_ENUMERATION_VERTICES} ≤ n ≤ {MAX_ENUMERATION_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

/// All isomorphism classes of `n`-vertex complexes in `class`, optionally only
/// those with exactly `f1` edges. Runs on the current rayon pool.
pub fn enumerate_class(n: usize, class: ComplexClass, f1: Option<u64>) -> Result<EnumerationResult> {
    check_range(n)?;
    let start = Instant::now();
    let complements = graphs_with_max_degree(n, n - 7)?;
    let total_pairs = (n * (n - 1) / 2) as u64;
    let mut representatives: Vec<Representative> = complements
        .par_iter()
        .filter(|h| f1.is_none_or(|e| total_pairs - h.edge_count() as u64 == e))
        .filter_map(|h| {
            let k = SimplicialComplex::clique_complex(&h.complement());
            class.contains(&k).then(|| Representative::new(&k))
        })
        .collect();
    representatives.sort_by(|a, b| a.form.cmp(&b.form));
    Ok(EnumerationResult {
        schema: ENUMERATION_SCHEMA,
        n,
        class,
        f1,
        candidates: complements.len(),
        count: representatives.len(),
        representatives,
        wall_time: start.elapsed(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MaximizerReport {
    #[serde(flatten)]
    pub result: EnumerationResult,
    /// Union-of-joins specs on `n` vertices whose complex lies in the class.
    pub expected: Vec<GjSpec>,
    /// The enumerated classes are exactly the expected union-of-joins complexes.
    pub matches_expected: bool,
}

/// Complexes in `class` attaining `f₁ = f₁(J₂(n))`, compared against the
/// union-of-joins family on `n` vertices.
pub fn maximizers(n: usize, class: ComplexClass) -> Result<MaximizerReport> {
    check_range(n)?;
    let target = f1_j(2, n)? as u64;
    let result = enumerate_class(n, class, Some(target))?;
    let mut expected = Vec::new();
    let mut expected_forms = Vec::new();
    for spec in gj_enumerate_specs(n) {
        let k = gj(&spec)?;
        if class.contains(&k) {
            expected_forms.push(canonical_form(&k.one_skeleton())?);
            expected.push(spec);
        }
    }
    expected_forms.sort();
    expected_forms.dedup();
    let found: Vec<CanonicalGraph> = result.representatives.iter().map(|r| r.form.clone()).collect();
    let matches_expected = found == expected_forms;
    Ok(MaximizerReport { result, expected, matches_expected })
}

/// Isomorphism of flag complexes, decided on their graphs.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<bool> {
    if !validators::is_flag(a).holds || !validators::is_flag(b).holds {
        return Err(Error::Precondition("flag"));
    }
    if a.vertex_count() != b.vertex_count() || a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    Ok(canonical_form(&a.one_skeleton())? == canonical_form(&b.one_skeleton())?)
}

/// Graph form used for comparisons, exposed for callers that cache it.
pub fn graph_form(k: &SimplicialComplex) -> Result<CanonicalGraph> {
    canonical_form(&k.one_skeleton())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{balanced_join, cross_polytope_boundary, suspended_join};

    #[test]
    fn isomorphism_examples() {
        let j8 = balanced_join(2, 8).unwrap();
        assert!(are_isomorphic(&j8, &cross_polytope_boundary(4).unwrap()).unwrap());
        assert!(are_isomorphic(&suspended_join(2, 10).unwrap(), &cross_polytope_boundary(5).unwrap()).unwrap());
        let gj16 = gj(&GjSpec::new(16, vec![4, 4], vec![8]).unwrap()).unwrap();
        assert!(!are_isomorphic(&gj16, &balanced_join(2, 16).unwrap()).unwrap());
        let not_flag = SimplicialComplex::from_facet_lists(3, &[[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(are_isomorphic(&not_flag, &not_flag), Err(Error::Precondition("flag")));
    }

    #[test]
    fn range_guard() {
        assert!(enumerate_class(7, ComplexClass::FlagEulerian3, None).is_err());
        assert!(enumerate_class(12, ComplexClass::FlagEulerian3, None).is_err());
    }

    #[test]
    fn class_names_round_trip() {
        for c in ComplexClass::ALL {
            assert_eq!(c.name().parse::<ComplexClass>().unwrap(), c);
        }
        assert!("flag".parse::<ComplexClass>().is_err());
    }

    #[test]
    fn eight_vertices() {
        let r = enumerate_class(8, ComplexClass::FlagNormal3pm, None).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.contains_isomorph_of(&cross_polytope_boundary(4).unwrap()));
        let m = maximizers(8, ComplexClass::FlagEulerian3).unwrap();
        assert!(m.matches_expected);
    }
}
