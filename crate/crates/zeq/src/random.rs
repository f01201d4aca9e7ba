//! Deterministic pseudorandom instance generators for property tests and
//! the randomized identity suites.
//!
//! Everything is driven by a splitmix64 stream, so a seed fully determines
//! every generated instance on every platform.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Digraph, WeightedDigraph};
use crate::invasion::Invader;
use crate::poly::{ratio, Rat, Var};
use crate::switching::SwitchingPartition;

/// Splitmix64 pseudorandom number generator.
#[derive(Clone, Debug)]
pub struct Rng64 {
    state: u64,
}

impl Rng64 {
    pub fn new(seed: u64) -> Rng64 {
        Rng64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from 0..bound; the modulo bias is negligible for the
    /// small bounds used in tests.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below requires a positive bound");
        self.next_u64() % bound
    }

    /// Uniform draw from the inclusive range lo..=hi.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// True with probability num/den.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

/// Rational with numerator in -bound..=bound and denominator in 1..=bound.
pub fn random_rat(rng: &mut Rng64, bound: i64) -> Rat {
    assert!(bound >= 1);
    ratio(rng.range(-bound, bound), rng.range(1, bound))
}

/// Nonzero rational with numerator and denominator bounded by bound.
pub fn random_nonzero_rat(rng: &mut Rng64, bound: i64) -> Rat {
    assert!(bound >= 1);
    let mut num = rng.range(1, bound);
    if rng.chance(1, 2) {
        num = -num;
    }
    ratio(num, rng.range(1, bound))
}

/// Assignment of random nonzero rationals to the given variables.
pub fn random_point(rng: &mut Rng64, vars: &[Var], bound: i64) -> BTreeMap<Var, Rat> {
    vars.iter()
        .map(|&v| (v, random_nonzero_rat(rng, bound)))
        .collect()
}

/// Simple loop-free digraph with each arc present with probability 1/2.
pub fn random_simple_digraph(rng: &mut Rng64, n: usize) -> Digraph {
    let mut g = Digraph::new(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.chance(1, 2) {
                g.add_edges(i, j, 1);
            }
        }
    }
    g
}

/// Digraph with loops allowed and multiplicities up to max_mult, sparse.
pub fn random_multidigraph(rng: &mut Rng64, n: usize, max_mult: u32) -> Digraph {
    let mut g = Digraph::new(n);
    for i in 0..n {
        for j in 0..n {
            if rng.chance(2, 5) {
                g.add_edges(i, j, 1 + rng.below(max_mult as u64) as u32);
            }
        }
    }
    g
}

/// Simple graph with each edge present with probability 1/2.
pub fn random_graph(rng: &mut Rng64, n: usize) -> Digraph {
    let mut g = Digraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(1, 2) {
                g.add_edges(i, j, 1);
                g.add_edges(j, i, 1);
            }
        }
    }
    g
}

/// Connected simple graph: a random recursive tree plus extra edges.
pub fn random_connected_graph(rng: &mut Rng64, n: usize) -> Digraph {
    let mut g = Digraph::new(n);
    for v in 1..n {
        let u = rng.below(v as u64) as usize;
        g.add_edges(u, v, 1);
        g.add_edges(v, u, 1);
    }
    for i in 0..n {
        for j in i + 1..n {
            if g.adj(i, j) == 0 && rng.chance(1, 4) {
                g.add_edges(i, j, 1);
                g.add_edges(j, i, 1);
            }
        }
    }
    g
}

/// Weakly connected simple digraph: an oriented random tree plus extra arcs.
pub fn random_weakly_connected_digraph(rng: &mut Rng64, n: usize) -> Digraph {
    let mut g = Digraph::new(n);
    for v in 1..n {
        let u = rng.below(v as u64) as usize;
        if rng.chance(1, 2) {
            g.add_edges(u, v, 1);
        } else {
            g.add_edges(v, u, 1);
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && g.adj(i, j) == 0 && rng.chance(1, 4) {
                g.add_edges(i, j, 1);
            }
        }
    }
    g
}

/// Weighted digraph with arcs of probability 1/2 and nonzero weights.
pub fn random_weighted_digraph(rng: &mut Rng64, n: usize, bound: i64) -> WeightedDigraph {
    let mut g = WeightedDigraph::new(n);
    for i in 0..n {
        for j in 0..n {
            if rng.chance(1, 2) {
                let w = if i == j {
                    if rng.chance(1, 2) {
                        ratio(1, 1)
                    } else {
                        ratio(-1, 1)
                    }
                } else {
                    random_nonzero_rat(rng, bound)
                };
                g.add_edge(i, j, w).expect("slots are visited once");
            }
        }
    }
    g
}

/// Reciprocal-weight digraph with at most m_max arcs: loops weigh +-1 and
/// mutually reverse arcs carry inverse weights.
pub fn random_reciprocal_digraph(
    rng: &mut Rng64,
    n: usize,
    m_max: usize,
    bound: i64,
) -> WeightedDigraph {
    let mut g = WeightedDigraph::new(n);
    let mut slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    rng.shuffle(&mut slots);
    let mut budget = m_max;
    for (i, j) in slots {
        if budget == 0 {
            break;
        }
        if i == j {
            if rng.chance(1, 3) {
                let w = if rng.chance(1, 2) { ratio(1, 1) } else { ratio(-1, 1) };
                g.add_edge(i, i, w).expect("slots are visited once");
                budget -= 1;
            }
            continue;
        }
        match rng.below(4) {
            0 => {}
            1 => {
                g.add_edge(i, j, random_nonzero_rat(rng, bound))
                    .expect("slots are visited once");
                budget -= 1;
            }
            2 => {
                g.add_edge(j, i, random_nonzero_rat(rng, bound))
                    .expect("slots are visited once");
                budget -= 1;
            }
            _ => {
                if budget >= 2 {
                    let w = random_nonzero_rat(rng, bound);
                    let inv = Rat::new(w.denom().clone(), w.numer().clone());
                    g.add_edge(i, j, w).expect("slots are visited once");
                    g.add_edge(j, i, inv).expect("slots are visited once");
                    budget -= 2;
                }
            }
        }
    }
    g
}

/// Random invader on n_s vertices with arc multiplicities up to max_mult.
pub fn random_invader(rng: &mut Rng64, n_s: usize, max_mult: u32) -> Invader {
    assert!(n_s >= 2);
    let s = random_multidigraph(rng, n_s, max_mult);
    let tail = rng.below(n_s as u64) as usize;
    let mut head = rng.below(n_s as u64 - 1) as usize;
    if head >= tail {
        head += 1;
    }
    Invader::new(&s, tail, head).expect("natives are distinct and in range")
}

/// A digraph together with a partition that is valid for it by construction.
#[derive(Clone, Debug)]
pub struct SwitchingInstance {
    pub g: Digraph,
    pub partition: SwitchingPartition,
}

/// Random valid switching instance on at most max_n vertices.
///
/// The construction places matched block pairs with mirrored internal
/// patterns and mutual edges across each pair, equitable internal patterns
/// on even switching blocks, all-or-nothing links between blocks, and
/// complementary half-links from pairs of extra vertices, so every generated
/// partition satisfies the switching conditions.
pub fn random_switching_instance(rng: &mut Rng64, max_n: usize) -> SwitchingInstance {
    assert!(max_n >= 4);
    let mut budget = max_n;
    let mut v_sizes = Vec::new();
    for _ in 0..rng.below(3) {
        let s = 1 + rng.below(2) as usize;
        if 2 * s <= budget {
            v_sizes.push(s);
            budget -= 2 * s;
        }
    }
    let mut w_sizes = Vec::new();
    for _ in 0..rng.below(3) {
        let s = 2 * (1 + rng.below(2) as usize);
        if s <= budget {
            w_sizes.push(s);
            budget -= s;
        }
    }
    let mut n_x = (rng.below(3) as usize).min(budget);
    if v_sizes.is_empty() && w_sizes.is_empty() {
        w_sizes.push(2);
        budget -= 2;
        n_x = n_x.min(budget);
    }

    let mut next = 0;
    let claim = |len: usize, next: &mut usize| {
        let block: Vec<usize> = (*next..*next + len).collect();
        *next += len;
        block
    };
    let mut v_blocks = Vec::new();
    let mut vp_blocks = Vec::new();
    for &s in &v_sizes {
        v_blocks.push(claim(s, &mut next));
        vp_blocks.push(claim(s, &mut next));
    }
    let w_blocks: Vec<Vec<usize>> = w_sizes.iter().map(|&s| claim(s, &mut next)).collect();
    let x_set = claim(n_x, &mut next);
    let n = next;

    let mut arcs: BTreeSet<(usize, usize)> = BTreeSet::new();

    // Mirrored internal patterns and the mutual matched-pair edges.
    let mut phi = Vec::new();
    for (vb, vpb) in v_blocks.iter().zip(&vp_blocks) {
        if vb.len() == 2 && rng.chance(1, 2) {
            arcs.insert((vb[0], vb[1]));
            arcs.insert((vb[1], vb[0]));
            arcs.insert((vpb[0], vpb[1]));
            arcs.insert((vpb[1], vpb[0]));
        }
        for (&v, &vp) in vb.iter().zip(vpb) {
            phi.push((v, vp));
            arcs.insert((v, vp));
            arcs.insert((vp, v));
        }
    }

    // Equitable internal patterns on the even blocks.
    for wb in &w_blocks {
        match rng.below(3) {
            0 => {}
            1 => {
                for pair in wb.chunks(2) {
                    arcs.insert((pair[0], pair[1]));
                    arcs.insert((pair[1], pair[0]));
                }
            }
            _ => {
                for k in 0..wb.len() {
                    arcs.insert((wb[k], wb[(k + 1) % wb.len()]));
                }
            }
        }
    }

    // All-or-nothing links between each matched union and each even block.
    for (vb, vpb) in v_blocks.iter().zip(&vp_blocks) {
        for wb in &w_blocks {
            let out = rng.chance(1, 2);
            let inn = rng.chance(1, 2);
            for &u in vb.iter().chain(vpb) {
                for &w in wb {
                    if out {
                        arcs.insert((u, w));
                    }
                    if inn {
                        arcs.insert((w, u));
                    }
                }
            }
        }
    }

    // Links between the extra vertices and each matched pair, resampled
    // until the two directional degree differences agree.
    for (vb, vpb) in v_blocks.iter().zip(&vp_blocks) {
        loop {
            let draw: Vec<(bool, bool, bool, bool)> = x_set
                .iter()
                .map(|_| {
                    (
                        rng.chance(1, 2),
                        rng.chance(1, 2),
                        rng.chance(1, 2),
                        rng.chance(1, 2),
                    )
                })
                .collect();
            let delta_to: i64 = draw
                .iter()
                .map(|&(to_v, _, to_vp, _)| to_vp as i64 - to_v as i64)
                .sum();
            let delta_from: i64 = draw
                .iter()
                .map(|&(_, from_v, _, from_vp)| from_vp as i64 - from_v as i64)
                .sum();
            if delta_to != delta_from {
                continue;
            }
            for (&x, &(to_v, from_v, to_vp, from_vp)) in x_set.iter().zip(&draw) {
                for &v in vb {
                    if to_v {
                        arcs.insert((v, x));
                    }
                    if from_v {
                        arcs.insert((x, v));
                    }
                }
                for &vp in vpb {
                    if to_vp {
                        arcs.insert((vp, x));
                    }
                    if from_vp {
                        arcs.insert((x, vp));
                    }
                }
            }
            break;
        }
    }

    // Links between the extra vertices and each even block: either
    // independent all-or-nothing flags, or complementary half-links split
    // between a pair of extra vertices.
    for wb in &w_blocks {
        for direction in 0..2 {
            if n_x == 2 && rng.chance(1, 2) {
                let mut half: Vec<usize> = wb.clone();
                rng.shuffle(&mut half);
                let (first, second) = half.split_at(wb.len() / 2);
                for (&x, part) in x_set.iter().zip([first, second]) {
                    for &w in part {
                        if direction == 0 {
                            arcs.insert((x, w));
                        } else {
                            arcs.insert((w, x));
                        }
                    }
                }
            } else {
                for &x in &x_set {
                    if rng.chance(1, 2) {
                        for &w in wb {
                            if direction == 0 {
                                arcs.insert((x, w));
                            } else {
                                arcs.insert((w, x));
                            }
                        }
                    }
                }
            }
        }
    }

    // Arbitrary arcs inside the fixed part.
    for &a in &x_set {
        for &b in &x_set {
            if a != b && rng.chance(1, 2) {
                arcs.insert((a, b));
            }
        }
    }

    let edges: Vec<(usize, usize)> = arcs.into_iter().collect();
    let g = Digraph::from_edges(n, &edges).expect("constructed arcs are in range");
    let partition = SwitchingPartition::new(v_blocks, vp_blocks, w_blocks, x_set, phi)
        .expect("constructed partition is well formed");
    SwitchingInstance { g, partition }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::switching::validate_partition;
    use num_traits::Zero;

    #[test]
    fn splitmix_is_reproducible() {
        let mut a = Rng64::new(7);
        let mut b = Rng64::new(7);
        let left: Vec<u64> = (0..10).map(|_| a.next_u64()).collect();
        let right: Vec<u64> = (0..10).map(|_| b.next_u64()).collect();
        assert_eq!(left, right);
        let mut c = Rng64::new(8);
        assert_ne!(left[0], c.next_u64());
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut rng = Rng64::new(1);
        let mut hits = [false; 5];
        for _ in 0..200 {
            let v = rng.below(5);
            assert!(v < 5);
            hits[v as usize] = true;
        }
        assert!(hits.iter().all(|&h| h));
        for _ in 0..100 {
            let v = rng.range(-3, 3);
            assert!((-3..=3).contains(&v));
        }
    }

    #[test]
    fn shuffle_permutes() {
        let mut rng = Rng64::new(2);
        let mut xs: Vec<u32> = (0..10).collect();
        rng.shuffle(&mut xs);
        let mut sorted = xs.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn rational_draws_respect_bounds() {
        let mut rng = Rng64::new(3);
        for _ in 0..100 {
            let r = random_nonzero_rat(&mut rng, 4);
            assert!(!r.is_zero());
            let any = random_rat(&mut rng, 4);
            assert!(any.denom() > &num_bigint::BigInt::zero());
        }
        let point = random_point(&mut rng, &[Var::X, Var::Uu], 5);
        assert_eq!(point.len(), 2);
    }

    #[test]
    fn graph_generators_have_the_advertised_shapes() {
        let mut rng = Rng64::new(4);
        for n in 1..=6 {
            let d = random_simple_digraph(&mut rng, n);
            assert!(d.is_simple());
            let g = random_graph(&mut rng, n);
            assert!(g.is_graph() && g.is_simple());
            let c = random_connected_graph(&mut rng, n);
            assert!(c.is_graph() && c.is_weakly_connected());
            let wd = random_weakly_connected_digraph(&mut rng, n);
            assert!(wd.is_simple() && wd.is_weakly_connected());
        }
    }

    #[test]
    fn weighted_generators_respect_their_contracts() {
        let mut rng = Rng64::new(5);
        for _ in 0..50 {
            let g = random_reciprocal_digraph(&mut rng, 4, 6, 3);
            assert!(g.m() <= 6);
            assert!(g.has_reciprocal_weights());
        }
        let w = random_weighted_digraph(&mut rng, 3, 4);
        assert!(w.n() == 3);
    }

    #[test]
    fn random_invaders_are_well_formed() {
        let mut rng = Rng64::new(6);
        for _ in 0..30 {
            let n_s = 2 + rng.below(4) as usize;
            let inv = random_invader(&mut rng, n_s, 2);
            assert_eq!(inv.n(), n_s);
            assert_eq!(inv.core_n(), n_s - 2);
        }
    }

    #[test]
    fn random_switching_instances_validate() {
        let mut rng = Rng64::new(9);
        for _ in 0..60 {
            let inst = random_switching_instance(&mut rng, 8);
            let report = validate_partition(&inst.g, &inst.partition).unwrap();
            assert!(report.is_valid(), "{}\n{:?}", report, inst.g);
        }
    }
}
