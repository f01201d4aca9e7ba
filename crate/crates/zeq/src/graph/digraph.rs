//! Digraphs as multiplicity matrices.
//!
//! The adjacency matrix of counts is the source of truth: entry (i, j) is the
//! number of edges i -> j, diagonal entries count loops. Graphs are the
//! symmetric case, simple digraphs the 0/1 loop-free case.

use thiserror::Error;

/// Errors from digraph construction and structural operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("operation requires a simple digraph")]
    NotSimple,
    #[error("operation requires a graph (symmetric adjacency)")]
    NotAGraph,
    #[error("vertex counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("edge weight must be nonzero")]
    ZeroWeight,
    #[error("parallel edge {0} -> {1} in a weighted digraph")]
    ParallelEdge(usize, usize),
    #[error("loop weight at vertex {0} must be 1 or -1")]
    LoopWeightNotUnit(usize),
    #[error("weights are not reciprocal on mutually reverse edges")]
    NotReciprocal,
    #[error("invader natives must be two distinct vertices")]
    BadNatives,
    #[error("invader has no automorphism exchanging its natives")]
    NotSymmetricInvader,
    #[error("vertex count {n} exceeds the brute-force bound {bound}")]
    TooLarge { n: usize, bound: usize },
}

/// A finite digraph with edge multiplicities, vertices 0..n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Digraph {
    n: usize,
    adj: Vec<u32>,
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Digraph {
        Digraph {
            n,
            adj: vec![0; n * n],
        }
    }

    /// Builds a digraph from a list of (tail, head) pairs, counted with multiplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Digraph, GraphError> {
        let mut g = Digraph::new(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            g.adj[u * n + v] += 1;
        }
        Ok(g)
    }

    /// Builds a digraph directly from a multiplicity matrix.
    pub fn from_matrix(rows: &[Vec<u32>]) -> Digraph {
        let n = rows.len();
        let mut g = Digraph::new(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "adjacency matrix must be square");
            for (j, &m) in row.iter().enumerate() {
                g.adj[i * n + j] = m;
            }
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of edges, counted with multiplicity.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|&x| x as usize).sum()
    }

    /// Multiplicity of the edge i -> j.
    pub fn adj(&self, i: usize, j: usize) -> u32 {
        self.adj[i * self.n + j]
    }

    /// Adds `count` parallel edges i -> j.
    pub fn add_edges(&mut self, i: usize, j: usize, count: u32) {
        self.adj[i * self.n + j] += count;
    }

    /// Edges as (tail, head) pairs in row-major order, repeated per multiplicity.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for i in 0..self.n {
            for j in 0..self.n {
                for _ in 0..self.adj(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Out-degrees, counted with multiplicity.
    pub fn out_degrees(&self) -> Vec<u32> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.adj(i, j)).sum())
            .collect()
    }

    /// In-degrees, counted with multiplicity.
    pub fn in_degrees(&self) -> Vec<u32> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.adj(i, j)).sum())
            .collect()
    }

    /// All entries in {0, 1} and no loops.
    pub fn is_simple(&self) -> bool {
        self.is_loop_free() && self.adj.iter().all(|&x| x <= 1)
    }

    /// Symmetric adjacency matrix.
    pub fn is_graph(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.adj(i, j) == self.adj(j, i)))
    }

    pub fn is_loop_free(&self) -> bool {
        (0..self.n).all(|i| self.adj(i, i) == 0)
    }

    /// Complement J - I - A of a simple digraph.
    pub fn complement(&self) -> Result<Digraph, GraphError> {
        if !self.is_simple() {
            return Err(GraphError::NotSimple);
        }
        let mut g = Digraph::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    g.adj[i * self.n + j] = 1 - self.adj(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Digraph with every edge reversed.
    pub fn transpose(&self) -> Digraph {
        let mut g = Digraph::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                g.adj[j * self.n + i] = self.adj(i, j);
            }
        }
        g
    }

    /// Connectivity of the underlying undirected support.
    pub fn is_weakly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in 0..self.n {
                if !seen[u] && (self.adj(v, u) > 0 || self.adj(u, v) > 0) {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Adjacency matrix as signed integers, row-major rows.
    pub fn adjacency_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.adj(i, j) as i64).collect())
            .collect()
    }
}
