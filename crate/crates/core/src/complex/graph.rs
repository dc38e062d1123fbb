use super::face::{Face, MAX_VERTICES};
use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`, stored as neighbor bitsets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        let all = Face::full(n).bits();
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1 << v);
        }
        Ok(g)
    }

    /// Complete multipartite graph with the given part sizes, parts laid out consecutively.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let n = parts.iter().sum();
        let mut g = Graph::complete(n)?;
        let mut start = 0;
        for &p in parts {
            let block = Face::full(start + p).difference(Face::full(start)).bits();
            for v in start..start + p {
                g.adj[v] &= !block;
            }
            start += p;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> Face {
        Face::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Face::from_bits(self.adj[u] & !Face::full(u + 1).bits()).vertices() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = Face::full(self.n).bits();
        let adj = self.adj.iter().enumerate().map(|(v, &row)| all & !row & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    /// Graph whose vertex `perm[v]` corresponds to vertex `v` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = Face::from_bits(self.adj[u]).relabel(perm).bits();
        }
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `vertices`, re-indexed in ascending order.
    pub fn induced(&self, vertices: Face) -> Graph {
        let ids = vertices.to_vec();
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in ids.iter().enumerate() {
            map[v] = i;
        }
        let adj = ids.iter().map(|&v| Face::from_bits(self.adj[v] & vertices.bits()).relabel(&map).bits()).collect();
        Graph { n: ids.len(), adj }
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Face> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if (seen >> start) & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(Face::from_bits(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Maximal cliques by Bron–Kerbosch with Tomita pivoting, sorted lexicographically.
    pub fn maximal_cliques(&self) -> Vec<Face> {
        let mut out = Vec::new();
        if self.n == 0 {
            out.push(Face::EMPTY);
            return out;
        }
        self.bron_kerbosch(0, Face::full(self.n).bits(), 0, &mut out);
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<Face>) {
        if p == 0 {
            if x == 0 {
                out.push(Face::from_bits(r));
            }
            return;
        }
        let pivot =
            Face::from_bits(p | x).vertices().max_by_key(|&u| (self.adj[u] & p).count_ones()).expect("p is nonempty");
        let mut candidates = p & !self.adj[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.bron_kerbosch(r | (1 << v), p & self.adj[v], x & self.adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cliques_of_octahedron_graph() {
        let g = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        let cliques = g.maximal_cliques();
        assert_eq!(cliques.len(), 8);
        assert!(cliques.iter().all(|c| c.len() == 3));
        assert_eq!(cliques[0], Face::of(&[0, 2, 4]));
    }

    #[test]
    fn isolated_vertices_are_cliques() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.maximal_cliques(), vec![Face::of(&[0, 1]), Face::of(&[2])]);
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn complement_and_edges() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.complement().edge_count(), 5);
        assert_eq!(c5.edges()[0], (0, 1));
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
    }
}
