use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count handled by the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// A face: a set of vertex ids stored as a 64-bit mask.
///
/// Faces order lexicographically by their ascending vertex sequences, so
/// `{0,1} < {0,1,2} < {0,3} < {1}`. The empty face is the smallest face.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::TooManyVertices { n: v + 1, max: MAX_VERTICES });
            }
            bits |= 1 << v;
        }
        Ok(Face(bits))
    }

    /// Builds a face from ids known to be below 64.
    pub fn of(vertices: &[usize]) -> Self {
        vertices.iter().fold(Face::EMPTY, |f, &v| f.with(v))
    }

    pub const fn singleton(v: usize) -> Self {
        Face(1 << v)
    }

    /// All vertices `0..n`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub const fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub const fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub const fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Smallest vertex, if any.
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Shifts every vertex id up by `offset`.
    pub fn shifted(self, offset: usize) -> Face {
        debug_assert!(offset == 0 || self.max_vertex().is_none_or(|m| m + offset < 64));
        if offset >= 64 {
            return Face::EMPTY;
        }
        Face(self.0 << offset)
    }

    /// Every subset of this face, including the empty face and the face itself.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(self.0) }
    }

    /// Subsets with exactly `k` vertices.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = Face> {
        self.subsets().filter(move |s| s.len() == k)
    }

    /// The faces obtained by dropping one vertex.
    pub fn boundary(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }

    /// Image of this face under a vertex map given as `map[old] = new`.
    pub fn relabel(self, map: &[usize]) -> Face {
        self.vertices().fold(Face::EMPTY, |f, v| f.with(map[v]))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both sequences agree below the lowest differing vertex `x`. The face
        // holding `x` is smaller unless the other face has nothing above `x`,
        // in which case the other face is a proper prefix.
        let x = diff.trailing_zeros();
        let above = if x == 63 { 0 } else { u64::MAX << (x + 1) };
        if (self.0 >> x) & 1 == 1 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by cardinality first, then lexicographically.
pub fn graded_cmp(a: &Face, b: &Face) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        Face::from_vertices(ids).map_err(serde::de::Error::custom)
    }
}

/// Ascending iterator over the vertices of a face.
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

/// Iterator over all subsets of a mask, largest first.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = (cur != 0).then(|| (cur - 1) & self.mask);
        Some(Face(cur))
    }
}
