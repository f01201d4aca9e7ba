//! Digraphs with nonzero rational edge weights and no parallel edges.
//!
//! These carry the weight matrix W, the reverse-reciprocal matrix W* (the
//! transpose with every nonzero entry inverted), and the symmetric-part views
//! used by the closed zeta forms.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::digraph::{Digraph, GraphError};
use crate::poly::{MultiPoly, PolyMatrix, Rat};

/// A parallel-free digraph with nonzero rational weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedDigraph {
    n: usize,
    weights: BTreeMap<(usize, usize), Rat>,
}

/// The derived matrices and counts of a weighted digraph.
#[derive(Clone, Debug)]
pub struct WeightedViews {
    /// Weight matrix W.
    pub w: PolyMatrix,
    /// Transpose of W with nonzero entries inverted.
    pub w_star: PolyMatrix,
    /// Indicator of mutually reverse edge pairs, A^sym.
    pub a_sym: Digraph,
    /// Entrywise product A^sym . W.
    pub w_sym: PolyMatrix,
    /// Row sums of A^sym.
    pub d_sym: Vec<u32>,
    /// Loops of weight +1.
    pub l_plus: u32,
    /// Loops of weight -1.
    pub l_minus: u32,
    /// Non-loop mutually reverse pairs.
    pub r: u32,
}

impl WeightedDigraph {
    pub fn new(n: usize) -> WeightedDigraph {
        WeightedDigraph {
            n,
            weights: BTreeMap::new(),
        }
    }

    /// Builds from (tail, head, weight) triples.
    pub fn from_edges(n: usize, edges: &[(usize, usize, Rat)]) -> Result<WeightedDigraph, GraphError> {
        let mut g = WeightedDigraph::new(n);
        for (u, v, w) in edges {
            g.add_edge(*u, *v, w.clone())?;
        }
        Ok(g)
    }

    /// Lifts a loop-allowed simple-multiplicity digraph to unit weights.
    pub fn from_digraph(g: &Digraph) -> Result<WeightedDigraph, GraphError> {
        let mut out = WeightedDigraph::new(g.n());
        for i in 0..g.n() {
            for j in 0..g.n() {
                match g.adj(i, j) {
                    0 => {}
                    1 => out.add_edge(i, j, Rat::one())?,
                    _ => return Err(GraphError::ParallelEdge(i, j)),
                }
            }
        }
        Ok(out)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Rat) -> Result<(), GraphError> {
        for &x in &[u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if w.is_zero() {
            return Err(GraphError::ZeroWeight);
        }
        if self.weights.contains_key(&(u, v)) {
            return Err(GraphError::ParallelEdge(u, v));
        }
        self.weights.insert((u, v), w);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&Rat> {
        self.weights.get(&(u, v))
    }

    /// Edges in sorted order as (tail, head, weight).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.weights.iter().map(|(&(u, v), w)| (u, v, w))
    }

    /// The 0/1 support digraph.
    pub fn support(&self) -> Digraph {
        let edges: Vec<(usize, usize)> = self.weights.keys().copied().collect();
        Digraph::from_edges(self.n, &edges).expect("support endpoints are in range")
    }

    /// Mutually reverse pairs have reciprocal weights; loops weigh 1 or -1.
    pub fn has_reciprocal_weights(&self) -> bool {
        self.weights.iter().all(|(&(u, v), w)| {
            if u == v {
                w == &Rat::one() || w == &(-Rat::one())
            } else {
                match self.weights.get(&(v, u)) {
                    Some(rev) => (w * rev).is_one(),
                    None => true,
                }
            }
        })
    }

    /// The weight matrix as a constant polynomial matrix.
    pub fn w_matrix(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zero(self.n, self.n);
        for (&(u, v), w) in &self.weights {
            m.set(u, v, MultiPoly::constant(w.clone()));
        }
        m
    }

    /// All derived views; requires unit loop weights.
    pub fn views(&self) -> Result<WeightedViews, GraphError> {
        let n = self.n;
        let mut w_star = PolyMatrix::zero(n, n);
        let mut a_sym = Digraph::new(n);
        let mut w_sym = PolyMatrix::zero(n, n);
        let mut l_plus = 0;
        let mut l_minus = 0;
        let mut r = 0;
        for (&(u, v), w) in &self.weights {
            w_star.set(v, u, MultiPoly::constant(Rat::one() / w));
            if u == v {
                if w == &Rat::one() {
                    l_plus += 1;
                } else if w == &(-Rat::one()) {
                    l_minus += 1;
                } else {
                    return Err(GraphError::LoopWeightNotUnit(u));
                }
                a_sym.add_edges(u, u, 1);
                w_sym.set(u, u, MultiPoly::constant(w.clone()));
            } else if self.weights.contains_key(&(v, u)) {
                a_sym.add_edges(u, v, 1);
                w_sym.set(u, v, MultiPoly::constant(w.clone()));
                if u < v {
                    r += 1;
                }
            }
        }
        let d_sym = a_sym.out_degrees();
        Ok(WeightedViews {
            w: self.w_matrix(),
            w_star,
            a_sym,
            w_sym,
            d_sym,
            l_plus,
            l_minus,
            r,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn single_positive_loop() {
        let g = WeightedDigraph::from_edges(1, &[(0, 0, rat(1))]).unwrap();
        let v = g.views().unwrap();
        assert_eq!(v.w_star.get(0, 0), &MultiPoly::one());
        assert_eq!((v.l_plus, v.l_minus, v.r), (1, 0, 0));
        assert!(g.has_reciprocal_weights());
    }

    #[test]
    fn reciprocal_two_cycle() {
        let g = WeightedDigraph::from_edges(2, &[(0, 1, rat(2)), (1, 0, ratio(1, 2))]).unwrap();
        let v = g.views().unwrap();
        assert_eq!(v.w_star, v.w);
        assert_eq!(v.a_sym.adj(0, 1), 1);
        assert_eq!(v.a_sym.adj(1, 0), 1);
        assert_eq!(v.a_sym.adj(0, 0), 0);
        assert_eq!(v.r, 1);
        assert_eq!(v.d_sym, vec![1, 1]);
        assert_eq!(v.w_sym.get(0, 1), &MultiPoly::constant(rat(2)));
        assert!(g.has_reciprocal_weights());
    }

    #[test]
    fn no_reverse_pairs() {
        let g = WeightedDigraph::from_edges(3, &[(0, 1, rat(5)), (1, 2, rat(7))]).unwrap();
        let v = g.views().unwrap();
        assert!(v.a_sym.m() == 0);
        assert_eq!(v.r, 0);
        assert_eq!(v.w_star.get(1, 0), &MultiPoly::constant(ratio(1, 5)));
        assert!(g.has_reciprocal_weights());
    }

    #[test]
    fn non_reciprocal_pair_detected() {
        let g = WeightedDigraph::from_edges(2, &[(0, 1, rat(2)), (1, 0, rat(2))]).unwrap();
        assert!(!g.has_reciprocal_weights());
    }

    #[test]
    fn bad_loop_weight() {
        let g = WeightedDigraph::from_edges(1, &[(0, 0, rat(2))]).unwrap();
        assert_eq!(g.views().unwrap_err(), GraphError::LoopWeightNotUnit(0));
        assert!(!g.has_reciprocal_weights());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            WeightedDigraph::from_edges(1, &[(0, 0, rat(0))]).unwrap_err(),
            GraphError::ZeroWeight
        );
        assert_eq!(
            WeightedDigraph::from_edges(2, &[(0, 1, rat(1)), (0, 1, rat(2))]).unwrap_err(),
            GraphError::ParallelEdge(0, 1)
        );
        let multi = Digraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(
            WeightedDigraph::from_digraph(&multi).unwrap_err(),
            GraphError::ParallelEdge(0, 1)
        );
    }

    #[test]
    fn lift_preserves_support() {
        let g = Digraph::from_edges(3, &[(0, 1), (1, 0), (2, 2)]).unwrap();
        let w = WeightedDigraph::from_digraph(&g).unwrap();
        assert_eq!(w.support(), g);
        assert!(w.has_reciprocal_weights());
    }
}
