//! Brute-force closed-walk tallies on the bidirectional double.
//!
//! This is the Euler-product side of the zeta function, implemented with no
//! linear algebra at all: every closed edge sequence up to the truncation
//! length is enumerated and tallied with its weight, directional lengths,
//! and cyclic bump counts. It serves as an independent oracle for det(I - M).

use super::{BdEdge, EdgeSystem};
use crate::graph::{GraphError, WeightedDigraph};
use crate::poly::{Monomial, MultiPoly, Rat, Var};

/// Exact tallies of closed walks by length.
pub struct WalkTally {
    tallies: Vec<MultiPoly>,
}

impl WalkTally {
    /// Truncation length L; tallies exist for 1..=L.
    pub fn max_len(&self) -> usize {
        self.tallies.len()
    }

    /// Tally over closed walks of length `k` (1-based).
    pub fn tally(&self, k: usize) -> &MultiPoly {
        &self.tallies[k - 1]
    }
}

/// Enumerates all closed walks of length up to `max_len` in the double of `g`.
pub fn walk_series_oracle(g: &WeightedDigraph, max_len: usize) -> Result<WalkTally, GraphError> {
    assert!(max_len >= 1, "truncation length must be at least 1");
    let sys = EdgeSystem::build(g)?;
    let k = sys.len();
    let successors: Vec<Vec<usize>> = (0..k)
        .map(|e| {
            (0..k)
                .filter(|&f| sys.edges()[e].head == sys.edges()[f].tail)
                .collect()
        })
        .collect();
    let mut tallies = vec![MultiPoly::zero(); max_len];
    let mut walk = Vec::with_capacity(max_len);
    for start in 0..k {
        walk.push(start);
        extend(&sys, &successors, &mut walk, max_len, &mut tallies);
        walk.pop();
    }
    Ok(WalkTally { tallies })
}

fn extend(
    sys: &EdgeSystem,
    successors: &[Vec<usize>],
    walk: &mut Vec<usize>,
    max_len: usize,
    tallies: &mut [MultiPoly],
) {
    let last = *walk.last().unwrap();
    let start = walk[0];
    if sys.edges()[last].head == sys.edges()[start].tail {
        let (mono, coeff) = tally_term(sys, walk);
        tallies[walk.len() - 1] += &MultiPoly::term(mono, coeff);
    }
    if walk.len() == max_len {
        return;
    }
    for &f in &successors[last] {
        walk.push(f);
        extend(sys, successors, walk, max_len, tallies);
        walk.pop();
    }
}

/// Weight, directional lengths, and cyclic bump counts of one closed walk.
fn tally_term(sys: &EdgeSystem, walk: &[usize]) -> (Monomial, Rat) {
    let mut mono = Monomial::ONE;
    let mut coeff = Rat::from_integer(1.into());
    for (i, &e) in walk.iter().enumerate() {
        let edge: &BdEdge = &sys.edges()[e];
        coeff *= &edge.weight;
        let u = if edge.up { Var::Uu } else { Var::Ud };
        mono = mono.mul(&Monomial::var(u));
        let next = walk[(i + 1) % walk.len()];
        if sys.is_reverse(e, next) {
            let t = match (edge.up, sys.edges()[next].up) {
                (true, true) => Var::Tuu,
                (false, false) => Var::Tdd,
                (true, false) => Var::Tud,
                (false, true) => Var::Tdu,
            };
            mono = mono.mul(&Monomial::var(t));
        }
    }
    (mono, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Digraph;
    use crate::poly::{rat, ratio, det_series_identity_minus_x};

    #[test]
    fn empty_digraph_tallies_are_zero() {
        let g = WeightedDigraph::new(2);
        let t = walk_series_oracle(&g, 4).unwrap();
        for k in 1..=4 {
            assert!(t.tally(k).is_zero());
        }
    }

    #[test]
    fn single_edge_walks() {
        // Double of a single edge: the only closed walks alternate the edge
        // with its reverse partner, so odd lengths vanish and length 2 sees
        // two rotations, each with two bumps.
        let g = WeightedDigraph::from_edges(2, &[(0, 1, rat(3))]).unwrap();
        let t = walk_series_oracle(&g, 4).unwrap();
        assert!(t.tally(1).is_zero());
        assert!(t.tally(3).is_zero());
        let bump_pair = Monomial::var(Var::Uu)
            .mul(&Monomial::var(Var::Ud))
            .mul(&Monomial::var(Var::Tud))
            .mul(&Monomial::var(Var::Tdu));
        let expected = MultiPoly::term(bump_pair, rat(2));
        assert_eq!(t.tally(2), &expected);
        // Length 4 is the period-2 walk e,f,e,f: only two distinct rotations.
        let len4 = MultiPoly::term(bump_pair.mul(&bump_pair), rat(2));
        assert_eq!(t.tally(4), &len4);
    }

    #[test]
    fn directed_cycle_walks() {
        let g = WeightedDigraph::from_digraph(
            &Digraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
        )
        .unwrap();
        let t = walk_series_oracle(&g, 3).unwrap();
        // Length 3: the all-up cycle (3 rotations, no bumps) and the all-down
        // cycle (3 rotations, no bumps).
        let up = MultiPoly::term(Monomial::var_pow(Var::Uu, 3), rat(3));
        let down = MultiPoly::term(Monomial::var_pow(Var::Ud, 3), rat(3));
        assert_eq!(t.tally(3), &(&up + &down));
    }

    #[test]
    fn tallies_match_log_det_series() {
        // tr(M^k) from the determinant series must equal the walk tallies.
        let g = WeightedDigraph::from_edges(
            2,
            &[(0, 1, rat(2)), (1, 0, ratio(1, 2)), (1, 1, rat(-1))],
        )
        .unwrap();
        let order = 5;
        let t = walk_series_oracle(&g, order).unwrap();
        let sys = EdgeSystem::build(&g).unwrap();
        let series = det_series_identity_minus_x(&sys.m_matrix(), order);
        let traces = series.neg_log_times_k();
        for k in 1..=order {
            assert_eq!(&traces[k - 1], t.tally(k), "length {k}");
        }
    }
}
