//! Exhaustive mining of zeta-equivalent pairs among small digraphs and graphs.
//!
//! Enumeration iterates bit-packed adjacency masks, drops masks that a
//! single label transposition already improves, and dedupes the survivors
//! by canonical form. Mining groups the class representatives by modular
//! determinant fingerprints at two seeded points, then confirms candidate
//! groups by exact polynomial equality, so reported classes carry no
//! fingerprint risk.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::charpoly::{eta, eta_bar};
use crate::graph::{canonical_form, Digraph, GraphError};
use crate::poly::fingerprint::{addmod, det_mod, mulmod};
use crate::poly::{eval_points, MultiPoly, Var, NVARS};

/// Largest digraph vertex count in exhaustive mode.
pub const MAX_DIGRAPH_SEARCH_N: usize = 5;

/// Largest graph vertex count in exhaustive mode.
pub const MAX_GRAPH_SEARCH_N: usize = 7;

/// Whether to enumerate digraphs or graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Digraph,
    Graph,
}

/// Configuration for exhaustive enumeration and pair mining.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub mode: SearchMode,
    /// Keep only connected instances (weak connectivity for digraphs).
    pub connected: bool,
    /// Seed for the fingerprint evaluation points.
    pub seed: u64,
}

/// A set of pairwise non-isomorphic members sharing one exact polynomial.
#[derive(Clone, Debug)]
pub struct EquivalenceClass {
    pub poly: MultiPoly,
    pub members: Vec<Digraph>,
}

/// All equivalence classes of size at least two found by a search.
#[derive(Clone, Debug)]
pub struct EquivalenceClassReport {
    pub config: SearchConfig,
    pub classes: Vec<EquivalenceClass>,
}

fn cap(mode: SearchMode) -> usize {
    match mode {
        SearchMode::Digraph => MAX_DIGRAPH_SEARCH_N,
        SearchMode::Graph => MAX_GRAPH_SEARCH_N,
    }
}

fn check_cap(config: &SearchConfig) -> Result<(), GraphError> {
    let bound = cap(config.mode);
    if config.n > bound {
        return Err(GraphError::TooLarge { n: config.n, bound });
    }
    Ok(())
}

/// Ordered bit slots of the packed adjacency encoding.
fn slots(n: usize, mode: SearchMode) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let keep = match mode {
                SearchMode::Digraph => i != j,
                SearchMode::Graph => i < j,
            };
            if keep {
                out.push((i, j));
            }
        }
    }
    out
}

fn decode(mask: u64, n: usize, mode: SearchMode) -> Digraph {
    let mut g = Digraph::new(n);
    for (k, &(i, j)) in slots(n, mode).iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edges(i, j, 1);
            if mode == SearchMode::Graph {
                g.add_edges(j, i, 1);
            }
        }
    }
    g
}

fn encode(g: &Digraph, mode: SearchMode) -> u64 {
    let mut mask = 0u64;
    for (k, &(i, j)) in slots(g.n(), mode).iter().enumerate() {
        if g.adj(i, j) > 0 {
            mask |= 1 << k;
        }
    }
    mask
}

/// True unless swapping some pair of labels yields a smaller packed mask.
fn transposition_minimal(g: &Digraph, slot_list: &[(usize, usize)]) -> bool {
    let n = g.n();
    let mut sigma: Vec<usize> = (0..n).collect();
    for a in 0..n {
        for b in a + 1..n {
            sigma.swap(a, b);
            let smaller = permuted_smaller(g, &sigma, slot_list);
            sigma.swap(a, b);
            if smaller {
                return false;
            }
        }
    }
    true
}

fn permuted_smaller(g: &Digraph, sigma: &[usize], slot_list: &[(usize, usize)]) -> bool {
    for &(i, j) in slot_list {
        let orig = g.adj(i, j);
        let perm = g.adj(sigma[i], sigma[j]);
        if perm != orig {
            return perm < orig;
        }
    }
    false
}

/// One canonical representative per isomorphism class, in packed-mask order.
pub fn enumerate(config: &SearchConfig) -> Result<Vec<Digraph>, GraphError> {
    check_cap(config)?;
    let n = config.n;
    let mode = config.mode;
    let slot_list = slots(n, mode);
    let total: u64 = 1 << slot_list.len();
    let chunk_count = 128u64.min(total);
    let chunk_size = total.div_ceil(chunk_count);
    let keys = (0..chunk_count)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk_size;
            let hi = total.min(lo.saturating_add(chunk_size));
            let mut set = BTreeSet::new();
            for mask in lo..hi {
                let g = decode(mask, n, mode);
                if config.connected && !g.is_weakly_connected() {
                    continue;
                }
                if !transposition_minimal(&g, &slot_list) {
                    continue;
                }
                let (canon, _) = canonical_form(&g).expect("searches stay within the canon cap");
                set.insert(encode(&canon, mode));
            }
            set
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(keys.into_iter().map(|k| decode(k, n, mode)).collect())
}

/// Determinant of the generalized characteristic matrix mod the
/// fingerprint prime, at one evaluation point.
fn eta_det_mod(g: &Digraph, point: &[u64; NVARS]) -> u64 {
    let n = g.n();
    let dout = g.out_degrees();
    let din = g.in_degrees();
    let x = point[Var::X.index()];
    let tu = point[Var::Tu.index()];
    let td = point[Var::Td.index()];
    let uu = point[Var::Uu.index()];
    let ud = point[Var::Ud.index()];
    let mut entries = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut e = addmod(
                mulmod(uu, g.adj(i, j) as u64),
                mulmod(ud, g.adj(j, i) as u64),
            );
            if i == j {
                e = addmod(e, x);
                e = addmod(e, mulmod(tu, dout[i] as u64));
                e = addmod(e, mulmod(td, din[i] as u64));
            }
            entries[i * n + j] = e;
        }
    }
    det_mod(n, &mut entries)
}

fn exact_poly(g: &Digraph, mode: SearchMode) -> MultiPoly {
    match mode {
        SearchMode::Digraph => eta(g).poly,
        SearchMode::Graph => eta_bar(g).expect("graph mode enumerates graphs").poly,
    }
}

/// Mines all equivalence classes of size at least two among the canonical
/// representatives: fingerprint grouping first, exact confirmation second.
pub fn mine_pairs(config: &SearchConfig) -> Result<EquivalenceClassReport, GraphError> {
    let reps = enumerate(config)?;
    let points = eval_points(config.seed);
    let prints: Vec<(u64, u64)> = reps
        .par_iter()
        .map(|g| (eta_det_mod(g, &points[0]), eta_det_mod(g, &points[1])))
        .collect();
    let mut groups: BTreeMap<(u64, u64), Vec<usize>> = BTreeMap::new();
    for (idx, fp) in prints.iter().enumerate() {
        groups.entry(*fp).or_default().push(idx);
    }
    let mut classes = Vec::new();
    for idxs in groups.values().filter(|v| v.len() >= 2) {
        let polys: Vec<MultiPoly> = idxs.iter().map(|&i| exact_poly(&reps[i], config.mode)).collect();
        let mut used = vec![false; idxs.len()];
        for a in 0..idxs.len() {
            if used[a] {
                continue;
            }
            let mut members = vec![reps[idxs[a]].clone()];
            for b in a + 1..idxs.len() {
                if !used[b] && polys[b] == polys[a] {
                    used[b] = true;
                    members.push(reps[idxs[b]].clone());
                }
            }
            if members.len() >= 2 {
                classes.push(EquivalenceClass {
                    poly: polys[a].clone(),
                    members,
                });
            }
        }
    }
    classes.sort_by_key(|c| encode(&c.members[0], config.mode));
    Ok(EquivalenceClassReport {
        config: *config,
        classes,
    })
}

fn write_member(f: &mut fmt::Formatter<'_>, g: &Digraph, mode: SearchMode) -> fmt::Result {
    let mut first = true;
    for (u, v) in g.edges() {
        if mode == SearchMode::Graph && u > v {
            continue;
        }
        if !first {
            f.write_str(", ")?;
        }
        first = false;
        match mode {
            SearchMode::Digraph => write!(f, "{}->{}", u + 1, v + 1)?,
            SearchMode::Graph => write!(f, "{}-{}", u + 1, v + 1)?,
        }
    }
    if first {
        f.write_str("(no edges)")?;
    }
    Ok(())
}

impl fmt::Display for EquivalenceClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.config.mode {
            SearchMode::Digraph => "digraph",
            SearchMode::Graph => "graph",
        };
        let filter = if self.config.connected { "connected" } else { "all" };
        writeln!(
            f,
            "mode {mode}, n {}, {filter}, seed {}: {} class(es)",
            self.config.n,
            self.config.seed,
            self.classes.len()
        )?;
        let label = match self.config.mode {
            SearchMode::Digraph => "eta",
            SearchMode::Graph => "eta_bar",
        };
        for (k, class) in self.classes.iter().enumerate() {
            writeln!(f)?;
            writeln!(f, "class {}: {} members", k + 1, class.members.len())?;
            writeln!(f, "{label}: {}", class.poly)?;
            for (i, member) in class.members.iter().enumerate() {
                write!(f, "member {}: ", i + 1)?;
                write_member(f, member, self.config.mode)?;
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
