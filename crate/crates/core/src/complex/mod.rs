//! Simplicial complexes on at most 64 vertices.
//!
//! A complex is stored as its facets (an antichain of [`Face`] bitsets). The
//! full face lattice is derived on first use and cached, which keeps cloning
//! cheap for the common case where only facets are touched.

mod face;
mod fvector;
mod graph;

use std::fmt;
use std::sync::OnceLock;

pub use face::{graded_cmp, Face, Subsets, Vertices, MAX_VERTICES};
pub use fvector::FVector;
pub use graph::Graph;

use crate::error::{Error, Result};

/// A finite abstract simplicial complex on vertex ids `0..n`.
///
/// Invariants: the facets form an antichain, every vertex in `0..n` lies in
/// some facet, and the complex is never void. The complex `{∅}` is allowed
/// and has `n == 0`.
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
    faces: OnceLock<Vec<Vec<Face>>>,
}

/// A complex derived from another one together with the map back to the
/// parent's vertex ids: `vertices[i]` is the parent id of local vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    pub complex: SimplicialComplex,
    pub vertices: Vec<usize>,
}

impl Subcomplex {
    /// Translates a local face back to the parent's vertex ids.
    pub fn to_parent(&self, face: Face) -> Face {
        face.relabel(&self.vertices)
    }

    /// Parent vertex set as a face.
    pub fn parent_vertices(&self) -> Face {
        Face::of(&self.vertices)
    }
}

impl SimplicialComplex {
    /// Builds a complex from its facets, validating every invariant.
    pub fn new(n: usize, facets: Vec<Face>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        if facets.is_empty() {
            return Err(Error::VoidComplex);
        }
        let mut facets = facets;
        facets.sort_unstable();
        let mut covered = Face::EMPTY;
        for w in facets.windows(2) {
            if w[0] == w[1] {
                return Err(Error::NotAntichain { smaller: w[0], larger: w[1] });
            }
        }
        for f in &facets {
            if let Some(v) = f.max_vertex().filter(|&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            covered = covered.union(*f);
        }
        if covered != Face::full(n) {
            let v = Face::full(n).difference(covered).min_vertex().expect("missing vertex");
            return Err(Error::PhantomVertex { vertex: v });
        }
        let first = facets[0].len();
        if facets.iter().any(|f| f.len() != first) {
            for a in &facets {
                for b in &facets {
                    if a.len() < b.len() && a.is_subset_of(*b) {
                        return Err(Error::NotAntichain { smaller: *a, larger: *b });
                    }
                }
            }
        }
        Ok(Self::from_sorted_facets(n, facets))
    }

    /// Builds a complex from facets given as vertex lists.
    pub fn from_facet_lists<V: AsRef<[usize]>>(n: usize, facets: &[V]) -> Result<Self> {
        let faces =
            facets.iter().map(|f| Face::from_vertices(f.as_ref().iter().copied())).collect::<Result<Vec<_>>>()?;
        Self::new(n, faces)
    }

    /// The complex generated by arbitrary faces on exactly the vertices `0..n`;
    /// non-maximal generators are dropped.
    pub(crate) fn generated_by(n: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !kept.iter().any(|k| f.is_subset_of(*k)) {
                kept.push(f);
            }
        }
        if kept.is_empty() {
            kept.push(Face::EMPTY);
        }
        kept.sort_unstable();
        Self::from_sorted_facets(n, kept)
    }

    fn from_sorted_facets(n: usize, facets: Vec<Face>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex { n, facets, faces: OnceLock::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_face() -> Self {
        Self::from_sorted_facets(0, vec![Face::EMPTY])
    }

    /// The full simplex on `n >= 1` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, vec![Face::full(n)])
    }

    /// The clique complex of a graph; facets are its maximal cliques.
    pub fn clique_complex(graph: &Graph) -> Self {
        Self::from_sorted_facets(graph.vertex_count(), graph.maximal_cliques())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n)
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn is_facet(&self, face: Face) -> bool {
        self.facets.binary_search(&face).is_ok()
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    fn face_table(&self) -> &Vec<Vec<Face>> {
        self.faces.get_or_init(|| {
            let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
            let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
            for f in &self.facets {
                for s in f.subsets() {
                    by_size[s.len()].push(s);
                }
            }
            for bucket in &mut by_size {
                bucket.sort_unstable();
                bucket.dedup();
            }
            by_size
        })
    }

    /// All faces of dimension `i`, in lexicographic order. Out-of-range
    /// dimensions give an empty slice.
    pub fn faces(&self, i: isize) -> &[Face] {
        let table = self.face_table();
        match usize::try_from(i + 1) {
            Ok(k) if k < table.len() => &table[k],
            _ => &[],
        }
    }

    /// Every face, grouped by cardinality.
    pub fn all_faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.face_table().iter().flatten().copied()
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new(self.face_table().iter().map(|b| b.len() as u64).collect())
    }

    /// `-1 + f_0 - f_1 + f_2 - ...`, computed from face counts.
    pub fn reduced_euler_char(&self) -> i64 {
        self.f_vector().reduced_euler_char()
    }

    /// Number of edges, computed from the 1-skeleton without the full face table.
    pub fn edge_count(&self) -> usize {
        self.one_skeleton().edge_count()
    }

    /// Vertex set of the link of `face`, in original ids. Empty if `face` is a facet
    /// or not a face.
    pub fn link_vertices(&self, face: Face) -> Face {
        self.facets.iter().filter(|f| face.is_subset_of(**f)).fold(Face::EMPTY, |acc, f| acc.union(*f)).difference(face)
    }

    /// Facets of the link of `face`, in original ids.
    pub fn link_facets(&self, face: Face) -> Vec<Face> {
        self.facets.iter().filter(|f| face.is_subset_of(**f)).map(|f| f.difference(face)).collect()
    }

    /// The link `{τ∖σ : σ ⊆ τ ∈ K}`, re-indexed onto its own vertex set.
    pub fn link(&self, face: Face) -> Result<Subcomplex> {
        let facets = self.link_facets(face);
        if facets.is_empty() {
            return Err(Error::NotAFace { face });
        }
        let support = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
        Ok(self.compact(support, facets))
    }

    fn compact(&self, support: Face, facets: Vec<Face>) -> Subcomplex {
        let vertices = support.to_vec();
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = i;
        }
        let mut local: Vec<Face> = facets.into_iter().map(|f| f.relabel(&map)).collect();
        local.sort_unstable();
        local.dedup();
        Subcomplex { complex: Self::from_sorted_facets(vertices.len(), local), vertices }
    }

    /// The induced subcomplex `{σ ∈ K : σ ⊆ W}`.
    pub fn restriction(&self, w: Face) -> Result<Subcomplex> {
        if let Some(v) = w.max_vertex().filter(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let vertices = w.to_vec();
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = i;
        }
        let generators = self.facets.iter().map(|f| f.intersection(w).relabel(&map)).collect();
        Ok(Subcomplex { complex: Self::generated_by(vertices.len(), generators), vertices })
    }

    /// The deletion `{σ ∈ K : σ ∩ W = ∅}`.
    pub fn deletion(&self, w: Face) -> Result<Subcomplex> {
        if let Some(v) = w.max_vertex().filter(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.restriction(self.vertex_set().difference(w))
    }

    /// The join `K * L`; `L`'s vertex ids are offset by `K`'s vertex count.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(b.shifted(self.n)));
            }
        }
        facets.sort_unstable();
        Ok(Self::from_sorted_facets(n, facets))
    }

    /// The join with the two-point complex `S⁰`, whose vertices become 0 and 1.
    pub fn suspension(&self) -> Result<Self> {
        let s0 = Self::from_sorted_facets(2, vec![Face::of(&[0]), Face::of(&[1])]);
        s0.join(self)
    }

    /// The graph on `V(K)` whose edges are the 1-faces of `K`.
    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("n is within range");
        for f in &self.facets {
            for u in f.vertices() {
                for v in f.without(u).vertices().filter(|&v| v > u) {
                    g.add_edge(u, v).expect("ids in range");
                }
            }
        }
        g
    }

    /// Whether the 1-skeleton is connected (and the complex has a vertex).
    pub fn is_connected(&self) -> bool {
        self.one_skeleton().is_connected()
    }

    /// Applies a vertex permutation given as `perm[old] = new`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
        }
        let mut facets: Vec<Face> = self.facets.iter().map(|f| f.relabel(perm)).collect();
        facets.sort_unstable();
        Ok(Self::from_sorted_facets(self.n, facets))
    }

    /// Facet lists as ascending vertex vectors.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex { n: self.n, facets: self.facets.clone(), faces: self.faces.clone() }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex").field("n", &self.n).field("facets", &self.facets).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(4, &[[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        SimplicialComplex::clique_complex(&Graph::complete_multipartite(&[2, 2, 2]).unwrap())
    }

    #[test]
    fn faces_of_four_cycle() {
        let c = square();
        assert_eq!(c.faces(0), &[Face::of(&[0]), Face::of(&[1]), Face::of(&[2]), Face::of(&[3])]);
        assert_eq!(c.faces(1), &[Face::of(&[0, 1]), Face::of(&[0, 3]), Face::of(&[1, 2]), Face::of(&[2, 3])]);
        assert!(c.faces(2).is_empty());
        assert!(c.faces(-2).is_empty());
        assert_eq!(c.faces(-1), &[Face::EMPTY]);
        assert_eq!(c.f_vector().counts(), &[1, 4, 4]);
        assert_eq!(c.reduced_euler_char(), -1);
    }

    #[test]
    fn octahedron_counts() {
        let o = octahedron();
        assert_eq!(o.faces(2).len(), 8);
        assert_eq!(o.f_vector().counts(), &[1, 6, 12, 8]);
        assert_eq!(o.reduced_euler_char(), 1);
    }

    #[test]
    fn vertex_link_of_octahedron_is_square() {
        let o = octahedron();
        let lk = o.link(Face::of(&[0])).unwrap();
        assert_eq!(lk.vertices, vec![2, 3, 4, 5]);
        assert_eq!(lk.complex.f_vector().counts(), &[1, 4, 4]);
        assert!(lk.complex.one_skeleton().is_connected());
        let whole = o.link(Face::EMPTY).unwrap();
        assert_eq!(whole.complex, o);
        assert!(matches!(o.link(Face::of(&[0, 1])), Err(Error::NotAFace { .. })));
    }

    #[test]
    fn link_of_facet_is_empty_face_complex() {
        let o = octahedron();
        let lk = o.link(o.facets()[0]).unwrap();
        assert_eq!(lk.complex, SimplicialComplex::empty_face());
        assert_eq!(lk.complex.f_vector().counts(), &[1]);
    }

    #[test]
    fn restriction_and_deletion() {
        let c = square();
        let path = c.restriction(Face::of(&[0, 1, 2])).unwrap();
        assert_eq!(path.complex.facets(), &[Face::of(&[0, 1]), Face::of(&[1, 2])]);
        let del = c.deletion(Face::of(&[3])).unwrap();
        assert_eq!(del, path);
        let o = octahedron();
        assert_eq!(o.restriction(o.vertex_set()).unwrap().complex, o);
        assert!(c.restriction(Face::of(&[7])).is_err());
    }

    #[test]
    fn join_of_two_point_complexes_is_square() {
        let s0 = SimplicialComplex::from_facet_lists(2, &[[0], [1]]).unwrap();
        let sq = s0.join(&s0).unwrap();
        assert_eq!(sq.f_vector().counts(), &[1, 4, 4]);
        assert_eq!(square().suspension().unwrap().f_vector().counts(), &[1, 6, 12, 8]);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(SimplicialComplex::new(3, vec![]), Err(Error::VoidComplex));
        assert!(matches!(
            SimplicialComplex::from_facet_lists(3, &[vec![0, 1, 2], vec![0, 1]]),
            Err(Error::NotAntichain { .. })
        ));
        assert!(matches!(
            SimplicialComplex::from_facet_lists(3, &[vec![0, 1], vec![0, 1]]),
            Err(Error::NotAntichain { .. })
        ));
        assert!(matches!(
            SimplicialComplex::from_facet_lists(4, &[vec![0, 1], vec![1, 2]]),
            Err(Error::PhantomVertex { vertex: 3 })
        ));
        assert!(matches!(SimplicialComplex::from_facet_lists(2, &[vec![0, 2]]), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(SimplicialComplex::new(65, vec![Face::EMPTY]), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn skeleton_round_trip() {
        let o = octahedron();
        assert_eq!(o.one_skeleton(), Graph::complete_multipartite(&[2, 2, 2]).unwrap());
        assert_eq!(SimplicialComplex::clique_complex(&o.one_skeleton()), o);
        let hollow = SimplicialComplex::from_facet_lists(3, &[[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_ne!(SimplicialComplex::clique_complex(&hollow.one_skeleton()), hollow);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(SimplicialComplex::clique_complex(&k4).facets(), &[Face::full(4)]);
    }
}
