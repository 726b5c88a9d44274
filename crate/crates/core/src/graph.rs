//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is one `u64` bitset row per vertex, which keeps every
//! neighborhood query a single word operation at the scales this crate
//! targets (the exhaustive census needs n ≤ 9, the closed-form sweeps
//! n ≤ ~30).

use thiserror::Error;

/// Largest supported vertex count: one machine word per adjacency row.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    OrderOutOfRange(usize),
    #[error("loop edge ({0},{0}) rejected: graphs are simple")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

/// A simple undirected graph: symmetric 0/1 adjacency, zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build from an explicit edge list. Duplicate edges are idempotent;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        Ok(())
    }

    /// Internal constructor path used by the codec and the generator,
    /// which validate indices themselves.
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Copy of the graph with one extra edge.
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge_unchecked(u, v);
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Edges as ordered pairs (u < v).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !((1u64 << u) | (1u64 << u).wrapping_sub(1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    /// Non-edges as ordered pairs (u < v).
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All vertices as a bitset.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Subgraph induced by the vertex bitset, relabeled to 0..k in
    /// ascending order of the original ids. `None` when the mask is empty
    /// (there is no order-0 graph).
    pub fn induced_subgraph(&self, vertex_mask: u64) -> Option<Graph> {
        let verts: Vec<usize> = bits(vertex_mask & self.full_mask()).collect();
        if verts.is_empty() {
            return None;
        }
        let mut g = Graph {
            n: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Some(g)
    }

    /// Relabel vertices: `lab[new] = old`.
    pub fn relabeled(&self, lab: &[usize]) -> Graph {
        debug_assert_eq!(lab.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(lab[i], lab[j]) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Path on `n` vertices: 0–1–…–(n−1).
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut g = Graph::path(n)?;
        g.add_edge_unchecked(n - 1, 0);
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = g.full_mask();
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    #[cfg(debug_assertions)]
    pub(crate) fn debug_check_invariants(&self) {
        assert!(self.n >= 1 && self.n <= MAX_VERTICES);
        let full = self.full_mask();
        for u in 0..self.n {
            assert_eq!(self.adj[u] & !full, 0, "bits beyond order at row {u}");
            assert_eq!(self.adj[u] >> u & 1, 0, "diagonal bit at {u}");
            for v in u + 1..self.n {
                assert_eq!(self.adj[u] >> v & 1, self.adj[v] >> u & 1, "asymmetric at ({u},{v})");
            }
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterate the set bit positions of a mask, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
