//! Canonical labeling of small graphs by equitable refinement and
//! individualization, with automorphism pruning.
//!
//! A leaf of the search tree is a discrete ordered partition; it induces a
//! relabeling whose upper-triangle adjacency code is packed into a `u128`
//! (120 bits suffice for 16 vertices). The smallest code over all leaves is the
//! canonical form. Automorphisms discovered on the way (two leaves with the
//! same code) prune sibling subtrees in the same orbit.

use std::fmt;

use crate::complex::Graph;
use crate::error::{Error, Result};

pub const MAX_CANONICAL_VERTICES: usize = 16;

#[derive(Clone)]
pub struct CanonicalGraph {
    n: usize,
    code: u128,
    /// `labeling[v]` is the canonical position of vertex `v`.
    labeling: Vec<usize>,
}

impl CanonicalGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Upper-triangle adjacency bits of the canonically relabeled graph,
    /// pair `(0,1)` in the most significant used bit.
    pub fn code(&self) -> u128 {
        self.code
    }

    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    /// The canonically relabeled graph.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("n ≤ 16");
        let mut bit = pair_count(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                bit -= 1;
                if self.code >> bit & 1 == 1 {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    /// Adjacency rows of [`Self::graph`] as bit masks.
    pub fn adjacency_matrix(&self) -> Vec<u64> {
        self.graph().adjacency_rows().to_vec()
    }
}

impl PartialEq for CanonicalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.code == other.code
    }
}

impl Eq for CanonicalGraph {}

impl PartialOrd for CanonicalGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.code).cmp(&(other.n, other.code))
    }
}

impl std::hash::Hash for CanonicalGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.n, self.code).hash(state)
    }
}

impl fmt::Debug for CanonicalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalGraph(n={}, code={:#x})", self.n, self.code)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalGraph> {
    canonical_form_colored(g, &[])
}

/// Canonical form of `g` with vertex colors: vertices in `classes[i]` (bit
/// masks) get color `i`, everything else a final color. Two colored graphs get
/// the same form iff some isomorphism maps each class onto the same class.
pub fn canonical_form_colored(g: &Graph, classes: &[u64]) -> Result<CanonicalGraph> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_CANONICAL_VERTICES });
    }
    let adj: Vec<u16> = g.adjacency_rows().iter().map(|&r| r as u16).collect();
    let all: u16 = if n == 0 { 0 } else { (1u32 << n).wrapping_sub(1) as u16 };
    let mut cells = Vec::new();
    let mut rest = all;
    for &c in classes {
        let c = c as u16 & rest;
        if c != 0 {
            cells.push(c);
            rest &= !c;
        }
    }
    if rest != 0 {
        cells.push(rest);
    }
    let mut search = Search { n, adj, first: None, best_code: 0, best_lab: Vec::new(), autos: Vec::new() };
    let root = search.refine(cells);
    search.run(root, &mut Vec::new());
    let mut labeling = vec![0; n];
    for (pos, &v) in search.best_lab.iter().enumerate() {
        labeling[v as usize] = pos;
    }
    Ok(CanonicalGraph { n, code: search.best_code, labeling })
}

struct Search {
    n: usize,
    adj: Vec<u16>,
    /// First leaf: its individualization path, labeling, and code.
    first: Option<(Vec<u8>, Vec<u8>, u128)>,
    best_code: u128,
    best_lab: Vec<u8>,
    /// Each automorphism as an image array.
    autos: Vec<Vec<u8>>,
}

impl Search {
    /// Coarsest equitable refinement of an ordered partition. Split cells are
    /// ordered by neighbor count, so the result is labeling-independent.
    fn refine(&self, mut cells: Vec<u16>) -> Vec<u16> {
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < cells.len() {
                let splitter = cells[s];
                let mut next = Vec::with_capacity(self.n);
                for &cell in &cells {
                    if cell.count_ones() == 1 {
                        next.push(cell);
                        continue;
                    }
                    let mut by_count = [0u16; 17];
                    let mut m = cell;
                    while m != 0 {
                        let v = m.trailing_zeros() as usize;
                        m &= m - 1;
                        by_count[(self.adj[v] & splitter).count_ones() as usize] |= 1 << v;
                    }
                    let before = next.len();
                    next.extend(by_count.iter().copied().filter(|&c| c != 0));
                    changed |= next.len() - before > 1;
                }
                cells = next;
                s += 1;
            }
            if !changed {
                return cells;
            }
        }
    }

    fn leaf_code(&self, lab: &[u8]) -> u128 {
        let mut code = 0u128;
        for i in 0..self.n {
            let row = self.adj[lab[i] as usize];
            for &u in &lab[i + 1..] {
                code = code << 1 | (row >> u & 1) as u128;
            }
        }
        code
    }

    /// Pushes the automorphism sending `from[i] ↦ to[i]` unless it is the identity.
    fn record(&mut self, from: &[u8], to: &[u8]) {
        let mut image = vec![0u8; self.n];
        for (&a, &b) in from.iter().zip(to) {
            image[a as usize] = b;
        }
        if image.iter().enumerate().any(|(v, &w)| v != w as usize) {
            self.autos.push(image);
        }
    }

    /// Orbit representative map under the automorphisms fixing `prefix` pointwise.
    fn orbits(&self, prefix: &[u8]) -> Vec<u8> {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(p: &mut [u8], mut x: u8) -> u8 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for a in self.autos.iter().filter(|a| prefix.iter().all(|&v| a[v as usize] == v)) {
            for v in 0..self.n as u8 {
                let (x, y) = (find(&mut parent, v), find(&mut parent, a[v as usize]));
                if x != y {
                    parent[x.max(y) as usize] = x.min(y);
                }
            }
        }
        (0..self.n as u8).map(|v| find(&mut parent, v)).collect()
    }

    /// Explores the subtree under `cells`; returns the level to jump back to when
    /// an automorphism mapping this path onto the first path was found.
    fn run(&mut self, cells: Vec<u16>, prefix: &mut Vec<u8>) -> Option<usize> {
        let Some(target_idx) = cells.iter().position(|c| c.count_ones() > 1) else {
            let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
            let code = self.leaf_code(&lab);
            let Some((first_path, first_lab, first_code)) = &self.first else {
                self.first = Some((prefix.clone(), lab.clone(), code));
                self.best_code = code;
                self.best_lab = lab;
                return None;
            };
            if code == *first_code {
                let level = first_path.iter().zip(prefix.iter()).take_while(|(a, b)| a == b).count();
                let first_lab = first_lab.clone();
                self.record(&first_lab, &lab);
                return Some(level);
            }
            if code == self.best_code {
                let best = self.best_lab.clone();
                self.record(&best, &lab);
            } else if code < self.best_code {
                self.best_code = code;
                self.best_lab = lab;
            }
            return None;
        };
        let target = cells[target_idx];
        let mut explored: Vec<u8> = Vec::new();
        let mut m = target;
        while m != 0 {
            let v = m.trailing_zeros() as u8;
            m &= m - 1;
            if !explored.is_empty() {
                let orbit = self.orbits(prefix);
                if explored.iter().any(|&u| orbit[u as usize] == orbit[v as usize]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            let child = self.refine(child);
            prefix.push(v);
            let jump = self.run(child, prefix);
            prefix.pop();
            if let Some(level) = jump {
                if level < prefix.len() {
                    return Some(level);
                }
            }
        }
        None
    }
}
