//! Membership tests for the classes of complexes the edge-count upper bounds
//! quantify over. Each test returns a [`Verdict`]; failures carry a witness
//! chosen as the first offender in (cardinality, lexicographic) order so that
//! reports are reproducible.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::complex::{graded_cmp, FVector, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Why a complex failed a membership test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A minimal non-face with at least three vertices.
    MissingFace {
        face: Face,
    },
    ImpureFacet {
        facet: Face,
        expected_dim: isize,
    },
    Ridge {
        ridge: Face,
        facet_count: usize,
    },
    Disconnected {
        components: usize,
    },
    DisconnectedLink {
        face: Face,
        components: usize,
    },
    EulerCharacteristic {
        face: Face,
        link_dim: isize,
        chi: i64,
        expected: i64,
    },
    EdgeDegree {
        edge: Face,
        triangles: usize,
    },
    VertexLink {
        vertex: usize,
        reason: String,
    },
    Dimension {
        expected: isize,
        actual: isize,
    },
    /// The 1-skeleton is not complete multipartite with parts of size two.
    NonNeighbors {
        vertex: usize,
        count: usize,
    },
    OddVertexCount {
        n: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }

    fn from_witness(witness: Option<Witness>) -> Self {
        Verdict { holds: witness.is_none(), witness }
    }
}

fn sorted_faces(k: &SimplicialComplex, size: usize) -> &[Face] {
    k.faces(size as isize - 1)
}

fn is_face(k: &SimplicialComplex, face: Face) -> bool {
    sorted_faces(k, face.len()).binary_search(&face).is_ok()
}

/// All inclusion-minimal non-faces, by ascending cardinality then lexicographically.
///
/// Every minimal non-face with three or more vertices is a clique of the
/// 1-skeleton, so they are found by growing cliques that are faces.
pub fn minimal_nonfaces(k: &SimplicialComplex) -> Vec<Face> {
    let mut out = missing_faces_from(k, 3);
    let g = k.one_skeleton();
    let mut pairs: Vec<Face> = g.complement().edges().into_iter().map(|(u, v)| Face::of(&[u, v])).collect();
    pairs.append(&mut out);
    pairs.sort_by(graded_cmp);
    pairs
}

fn missing_faces_from(k: &SimplicialComplex, min_size: usize) -> Vec<Face> {
    let g = k.one_skeleton();
    let mut out = Vec::new();
    let mut stack: Vec<Face> = k.faces(0).to_vec();
    while let Some(s) = stack.pop() {
        let top = s.max_vertex().expect("nonempty");
        let common = s.vertices().fold(!0u64, |acc, v| acc & g.neighbors(v).bits());
        let above = common & !Face::full(top + 1).bits();
        for v in Face::from_bits(above).vertices() {
            let t = s.with(v);
            if is_face(k, t) {
                stack.push(t);
            } else if t.len() >= min_size && t.boundary().all(|b| is_face(k, b)) {
                out.push(t);
            }
        }
    }
    out.sort_by(graded_cmp);
    out.dedup();
    out
}

/// Flag iff every minimal non-face has two vertices.
pub fn is_flag(k: &SimplicialComplex) -> Verdict {
    let missing = missing_faces_from(k, 3);
    Verdict::from_witness(missing.first().map(|&face| Witness::MissingFace { face }))
}

pub fn is_pure(k: &SimplicialComplex) -> Verdict {
    let d = k.dim();
    Verdict::from_witness(
        k.facets().iter().find(|f| f.dim() != d).map(|&facet| Witness::ImpureFacet { facet, expected_dim: d }),
    )
}

/// Connectivity of the 1-skeleton. `{∅}` counts as disconnected.
pub fn is_connected(k: &SimplicialComplex) -> Verdict {
    let components = k.one_skeleton().components().len();
    if components == 1 {
        Verdict::pass()
    } else {
        Verdict::fail(Witness::Disconnected { components })
    }
}

/// Ridges with the number of facets containing them, in lexicographic order.
pub fn ridge_degrees(k: &SimplicialComplex) -> Vec<(Face, usize)> {
    let mut ridges: Vec<Face> = k.facets().iter().flat_map(|f| f.boundary()).collect();
    ridges.sort_unstable();
    let mut out: Vec<(Face, usize)> = Vec::new();
    for r in ridges {
        match out.last_mut() {
            Some((last, c)) if *last == r => *c += 1,
            _ => out.push((r, 1)),
        }
    }
    out
}

/// Pure, with every ridge in exactly two facets.
pub fn is_weak_pseudomanifold(k: &SimplicialComplex) -> Verdict {
    let pure = is_pure(k);
    if !pure.holds {
        return pure;
    }
    if k.dim() < 0 {
        return Verdict::pass();
    }
    let bad = ridge_degrees(k).into_iter().find(|&(_, c)| c != 2);
    Verdict::from_witness(bad.map(|(ridge, facet_count)| Witness::Ridge { ridge, facet_count }))
}

/// Connected weak pseudomanifold whose faces of codimension at least three
/// have connected links.
pub fn is_normal_pseudomanifold(k: &SimplicialComplex) -> Verdict {
    let weak = is_weak_pseudomanifold(k);
    if !weak.holds {
        return weak;
    }
    let conn = is_connected(k);
    if !conn.holds {
        return conn;
    }
    // dim K = d-1; faces of dimension ≤ d-3 have at most dim K - 1 vertices.
    let max_size = k.dim() - 1;
    for size in 1..=max_size.max(0) as usize {
        for &face in sorted_faces(k, size) {
            let lk = k.link(face).expect("face of k");
            let components = lk.complex.one_skeleton().components().len();
            if components != 1 {
                return Verdict::fail(Witness::DisconnectedLink { face, components });
            }
        }
    }
    Verdict::pass()
}

/// Reduced Euler characteristic of the link of every face, in (cardinality,
/// lexicographic) order. `χ̃(lk σ) = Σ_{τ ⊇ σ} (−1)^{|τ|−|σ|−1}`.
pub fn link_euler_characteristics(k: &SimplicialComplex) -> Vec<(Face, i64)> {
    let mut acc: HashMap<Face, i64> = HashMap::new();
    for tau in k.all_faces() {
        for sigma in tau.subsets() {
            let sign = if (tau.len() - sigma.len()) % 2 == 1 { 1 } else { -1 };
            *acc.entry(sigma).or_insert(0) += sign;
        }
    }
    let mut out: Vec<(Face, i64)> = acc.into_iter().collect();
    out.sort_by(|a, b| graded_cmp(&a.0, &b.0));
    out
}

/// Pure, and `χ̃(lk σ) = (−1)^{dim lk σ}` for every face including `∅`.
pub fn is_eulerian(k: &SimplicialComplex) -> Verdict {
    let pure = is_pure(k);
    if !pure.holds {
        return pure;
    }
    let d = k.dim();
    for (face, chi) in link_euler_characteristics(k) {
        let link_dim = d - face.len() as isize;
        let expected = if link_dim.rem_euclid(2) == 0 { 1 } else { -1 };
        if chi != expected {
            return Verdict::fail(Witness::EulerCharacteristic { face, link_dim, chi, expected });
        }
    }
    Verdict::pass()
}

fn require_dim(k: &SimplicialComplex, expected: isize) -> Result<()> {
    if k.dim() != expected {
        return Err(Error::Dimension { expected, actual: k.dim() });
    }
    Ok(())
}

/// Whether a complex is a single cycle of length at least three.
pub fn is_single_cycle(k: &SimplicialComplex) -> bool {
    let g = k.one_skeleton();
    k.dim() == 1
        && k.is_pure()
        && k.vertex_count() >= 3
        && (0..k.vertex_count()).all(|v| g.degree(v) == 2)
        && g.is_connected()
}

/// Connected, every edge in two triangles, every vertex link a single cycle.
pub fn is_closed_surface(k: &SimplicialComplex) -> Result<Verdict> {
    require_dim(k, 2)?;
    let conn = is_connected(k);
    if !conn.holds {
        return Ok(conn);
    }
    let mut tri_count: HashMap<Face, usize> = HashMap::new();
    for &t in k.faces(2) {
        for e in t.boundary() {
            *tri_count.entry(e).or_insert(0) += 1;
        }
    }
    for &e in k.faces(1) {
        let triangles = tri_count.get(&e).copied().unwrap_or(0);
        if triangles != 2 {
            return Ok(Verdict::fail(Witness::EdgeDegree { edge: e, triangles }));
        }
    }
    for v in 0..k.vertex_count() {
        let lk = k.link(Face::singleton(v)).expect("vertex of k");
        if !is_single_cycle(&lk.complex) {
            return Ok(Verdict::fail(Witness::VertexLink { vertex: v, reason: "link is not a single cycle".into() }));
        }
    }
    Ok(Verdict::pass())
}

/// Closed surface with `χ̃ = 1`.
pub fn is_two_sphere(k: &SimplicialComplex) -> Result<Verdict> {
    let surface = is_closed_surface(k)?;
    if !surface.holds {
        return Ok(surface);
    }
    let chi = k.reduced_euler_char();
    if chi != 1 {
        return Ok(Verdict::fail(Witness::EulerCharacteristic { face: Face::EMPTY, link_dim: 2, chi, expected: 1 }));
    }
    Ok(Verdict::pass())
}

/// Flag, weak pseudomanifold, connected, and every vertex link a 2-sphere.
pub fn is_flag_3_manifold(k: &SimplicialComplex) -> Result<Verdict> {
    require_dim(k, 3)?;
    for check in [is_flag, is_weak_pseudomanifold, is_connected] {
        let v = check(k);
        if !v.holds {
            return Ok(v);
        }
    }
    for v in 0..k.vertex_count() {
        let lk = k.link(Face::singleton(v)).expect("vertex of k");
        let sphere = match is_two_sphere(&lk.complex) {
            Ok(s) => s,
            Err(e) => Verdict::fail(Witness::VertexLink { vertex: v, reason: e.to_string() }),
        };
        if !sphere.holds {
            let reason = match sphere.witness {
                Some(Witness::VertexLink { reason, .. }) => reason,
                Some(w) => format!("link is not a 2-sphere: {}", serde_json::to_string(&w).unwrap_or_default()),
                None => String::new(),
            };
            return Ok(Verdict::fail(Witness::VertexLink { vertex: v, reason }));
        }
    }
    Ok(Verdict::pass())
}

/// Boundary of a cross-polytope: every vertex has exactly one non-neighbor and
/// the complex is flag. The dimension of the cross-polytope is `n / 2`.
pub fn is_octahedral_sphere(k: &SimplicialComplex) -> Verdict {
    let n = k.vertex_count();
    if n < 2 || n % 2 == 1 {
        return Verdict::fail(Witness::OddVertexCount { n });
    }
    let g = k.one_skeleton();
    for v in 0..n {
        let count = n - 1 - g.degree(v);
        if count != 1 {
            return Verdict::fail(Witness::NonNeighbors { vertex: v, count });
        }
    }
    is_flag(k)
}

/// Boolean verdict for every class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub flag: bool,
    pub pure: bool,
    pub weak_pm: bool,
    pub normal_pm: bool,
    pub eulerian: bool,
    pub closed_surface: bool,
    pub two_sphere: bool,
    pub flag_3_manifold: bool,
    pub octahedral_sphere: bool,
    pub connected: bool,
}

pub const CLASSIFICATION_SCHEMA: &str = "flagtop.classification.v1";

/// Verdicts for all classes, with a witness for each failed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub schema: &'static str,
    pub n: usize,
    pub dim: isize,
    pub f_vector: FVector,
    pub reduced_euler_char: i64,
    pub verdicts: Verdicts,
    pub witnesses: BTreeMap<String, Witness>,
}

fn dimension_verdict(r: Result<Verdict>) -> Verdict {
    match r {
        Ok(v) => v,
        Err(Error::Dimension { expected, actual }) => Verdict::fail(Witness::Dimension { expected, actual }),
        Err(e) => unreachable!("validators only fail on dimension: {e}"),
    }
}

pub fn classify(k: &SimplicialComplex) -> ClassificationReport {
    let results: Vec<(&str, Verdict)> = vec![
        ("flag", is_flag(k)),
        ("pure", is_pure(k)),
        ("weak_pm", is_weak_pseudomanifold(k)),
        ("normal_pm", is_normal_pseudomanifold(k)),
        ("eulerian", is_eulerian(k)),
        ("closed_surface", dimension_verdict(is_closed_surface(k))),
        ("two_sphere", dimension_verdict(is_two_sphere(k))),
        ("flag_3_manifold", dimension_verdict(is_flag_3_manifold(k))),
        ("octahedral_sphere", is_octahedral_sphere(k)),
        ("connected", is_connected(k)),
    ];
    let holds = |name: &str| results.iter().find(|r| r.0 == name).map(|r| r.1.holds).unwrap_or(false);
    let verdicts = Verdicts {
        flag: holds("flag"),
        pure: holds("pure"),
        weak_pm: holds("weak_pm"),
        normal_pm: holds("normal_pm"),
        eulerian: holds("eulerian"),
        closed_surface: holds("closed_surface"),
        two_sphere: holds("two_sphere"),
        flag_3_manifold: holds("flag_3_manifold"),
        octahedral_sphere: holds("octahedral_sphere"),
        connected: holds("connected"),
    };
    let witnesses = results.into_iter().filter_map(|(name, v)| v.witness.map(|w| (name.to_string(), w))).collect();
    let f_vector = k.f_vector();
    ClassificationReport {
        schema: CLASSIFICATION_SCHEMA,
        n: k.vertex_count(),
        dim: k.dim(),
        reduced_euler_char: f_vector.reduced_euler_char(),
        f_vector,
        verdicts,
        witnesses,
    }
}
