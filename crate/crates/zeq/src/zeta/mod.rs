//! Edge zeta functions of weighted digraphs.
//!
//! The bidirectional double adds to every edge a reverse partner of
//! reciprocal weight. Closed walks on the double may traverse original
//! ("up") and added ("down") edges; the zeta function tallies them with
//! direction weights u and bump weights t for every step onto a reverse
//! partner. Its inverse is det(I - M) for the 2m x 2m transition matrix M,
//! and collapses to n x n determinants under the closed forms below.

pub mod walks;

use num_traits::One;

use crate::graph::{Digraph, GraphError, WeightedDigraph};
use crate::poly::{rat, MultiPoly, PolyMatrix, Rat, Var};

/// One edge of the bidirectional double.
#[derive(Clone, Debug)]
pub struct BdEdge {
    pub tail: usize,
    pub head: usize,
    pub weight: Rat,
    /// Original edges point up; added reverse partners point down.
    pub up: bool,
}

/// The bidirectional double of a weighted digraph, with its edge matrices.
#[derive(Clone, Debug)]
pub struct EdgeSystem {
    n: usize,
    edges: Vec<BdEdge>,
}

impl EdgeSystem {
    /// Doubles the digraph; original edge k sits at index 2k, its reverse at 2k+1.
    pub fn build(g: &WeightedDigraph) -> Result<EdgeSystem, GraphError> {
        let mut edges = Vec::with_capacity(2 * g.m());
        for (u, v, w) in g.edges() {
            if u == v && w != &Rat::one() && w != &(-Rat::one()) {
                return Err(GraphError::LoopWeightNotUnit(u));
            }
            edges.push(BdEdge {
                tail: u,
                head: v,
                weight: w.clone(),
                up: true,
            });
            edges.push(BdEdge {
                tail: v,
                head: u,
                weight: Rat::one() / w,
                up: false,
            });
        }
        Ok(EdgeSystem { n: g.n(), edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges of the double, 2m.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[BdEdge] {
        &self.edges
    }

    /// Whether edge `f` runs reverse to edge `e` (endpoints swapped); a loop
    /// edge is reverse to itself and to its parallel partner.
    pub fn is_reverse(&self, e: usize, f: usize) -> bool {
        self.edges[f].tail == self.edges[e].head && self.edges[f].head == self.edges[e].tail
    }

    /// Weighted edge-adjacency matrix of the chosen direction: entry (e, f)
    /// is w(e) when e points `up` and the head of e is the tail of f.
    pub fn c_matrix(&self, up: bool) -> PolyMatrix {
        let k = self.len();
        PolyMatrix::from_fn(k, k, |e, f| {
            if self.edges[e].up == up && self.edges[e].head == self.edges[f].tail {
                MultiPoly::constant(self.edges[e].weight.clone())
            } else {
                MultiPoly::zero()
            }
        })
    }

    /// Weighted bump matrix: entry (e, f) is w(e) when e points `from_up`,
    /// f points `to_up`, and f is reverse to e.
    pub fn b_matrix(&self, from_up: bool, to_up: bool) -> PolyMatrix {
        let k = self.len();
        PolyMatrix::from_fn(k, k, |e, f| {
            if self.edges[e].up == from_up && self.edges[f].up == to_up && self.is_reverse(e, f) {
                MultiPoly::constant(self.edges[e].weight.clone())
            } else {
                MultiPoly::zero()
            }
        })
    }

    /// Tail-incidence matrix: entry (v, e) is 1 when v is the tail of e.
    pub fn tail_incidence(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.n, self.len(), |v, e| {
            if self.edges[e].tail == v {
                MultiPoly::one()
            } else {
                MultiPoly::zero()
            }
        })
    }

    /// The transition matrix M(t, u): entry (e, f) is u_{dir e} w(e) when the
    /// head of e is the tail of f, times t_{dir e, dir f} when f is reverse
    /// to e (a bump).
    pub fn m_matrix(&self) -> PolyMatrix {
        let k = self.len();
        PolyMatrix::from_fn(k, k, |e, f| {
            if self.edges[e].head != self.edges[f].tail {
                return MultiPoly::zero();
            }
            let u = if self.edges[e].up { Var::Uu } else { Var::Ud };
            let mut p = MultiPoly::var(u).scale(&self.edges[e].weight);
            if self.is_reverse(e, f) {
                let t = match (self.edges[e].up, self.edges[f].up) {
                    (true, true) => Var::Tuu,
                    (false, false) => Var::Tdd,
                    (true, false) => Var::Tud,
                    (false, true) => Var::Tdu,
                };
                p = &p * &MultiPoly::var(t);
            }
            p
        })
    }
}

/// Named specializations of the zeta variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZetaSpec {
    /// All six variables free.
    Full,
    /// tuu = tdd = 1: only direction reversals are tracked.
    Reversing,
    /// tdd = tud = tdu = 1, ud = 0: walks use original edges only.
    Outgoing,
    /// Outgoing with tuu = 0: backtracking walks are suppressed entirely.
    Ihara,
}

impl ZetaSpec {
    pub fn assignments(self) -> Vec<(Var, Rat)> {
        match self {
            ZetaSpec::Full => vec![],
            ZetaSpec::Reversing => vec![(Var::Tuu, rat(1)), (Var::Tdd, rat(1))],
            ZetaSpec::Outgoing => vec![
                (Var::Tdd, rat(1)),
                (Var::Tud, rat(1)),
                (Var::Tdu, rat(1)),
                (Var::Ud, rat(0)),
            ],
            ZetaSpec::Ihara => vec![
                (Var::Tdd, rat(1)),
                (Var::Tud, rat(1)),
                (Var::Tdu, rat(1)),
                (Var::Ud, rat(0)),
                (Var::Tuu, rat(0)),
            ],
        }
    }
}

/// Determinant strategy for edge-level matrices: subset expansion while the
/// table fits, elimination for the larger but low-variable cases.
fn det_edge(mat: &PolyMatrix) -> MultiPoly {
    if mat.rows() <= 14 {
        mat.det_subset_dp()
    } else {
        mat.det_fraction_free()
    }
}

/// det(I - M) with the given variable assignments applied to M first.
pub fn zeta_inverse_specialized(
    g: &WeightedDigraph,
    assignments: &[(Var, Rat)],
) -> Result<MultiPoly, GraphError> {
    let sys = EdgeSystem::build(g)?;
    let m = sys.m_matrix();
    let k = sys.len();
    let mat = PolyMatrix::from_fn(k, k, |i, j| {
        let mut e = -m.get(i, j).assign(assignments);
        if i == j {
            e += &MultiPoly::one();
        }
        e
    });
    Ok(det_edge(&mat))
}

/// Inverse zeta function det(I - M) under a named specialization.
pub fn zeta_inverse(g: &WeightedDigraph, spec: ZetaSpec) -> Result<MultiPoly, GraphError> {
    zeta_inverse_specialized(g, &spec.assignments())
}

/// Reversing-zeta closed form: an n x n determinant in W, W*, D^out, D^in
/// with s_up = uu (tud - 1) and s_down = ud (tdu - 1), times a power of
/// (1 - s_up s_down). Requires reciprocal weights.
pub fn zeta_closed_form_reversing(g: &WeightedDigraph) -> Result<MultiPoly, GraphError> {
    if !g.has_reciprocal_weights() {
        return Err(GraphError::NotReciprocal);
    }
    let views = g.views()?;
    let n = g.n();
    let m = g.m();
    let support = g.support();
    let dout = support.out_degrees();
    let din = support.in_degrees();
    let su = MultiPoly::var(Var::Su);
    let sd = MultiPoly::var(Var::Sd);
    let uu = MultiPoly::var(Var::Uu);
    let ud = MultiPoly::var(Var::Ud);
    let unit = &MultiPoly::one() - &(&su * &sd);
    let mat = PolyMatrix::from_fn(n, n, |i, j| {
        let mut e = -(&(&uu * views.w.get(i, j)) + &(&ud * views.w_star.get(i, j)));
        if i == j {
            e += &unit;
            e -= &(&(&su * &ud) * &MultiPoly::from_int(dout[i] as i64));
            e -= &(&(&sd * &uu) * &MultiPoly::from_int(din[i] as i64));
        }
        e
    });
    let det = det_edge(&mat);
    let su_def = &uu * &(&MultiPoly::var(Var::Tud) - &MultiPoly::one());
    let sd_def = &ud * &(&MultiPoly::var(Var::Tdu) - &MultiPoly::one());
    let map = [(Var::Su, su_def), (Var::Sd, sd_def)].into_iter().collect();
    let det = det.substitute_all(&map);
    let unit = unit.substitute_all(&map);
    Ok(apply_prefactor(det, &unit, m as i64 - n as i64))
}

/// Closed form at tdd = tud = tdu = 1: an n x n determinant in W, W*, D^sym,
/// W^sym with s_up = uu (tuu - 1), times loop and reverse-pair prefactors.
/// Requires reciprocal weights.
pub fn zeta_closed_form_outgoing(g: &WeightedDigraph) -> Result<MultiPoly, GraphError> {
    if !g.has_reciprocal_weights() {
        return Err(GraphError::NotReciprocal);
    }
    let views = g.views()?;
    let n = g.n();
    let su = MultiPoly::var(Var::Su);
    let uu = MultiPoly::var(Var::Uu);
    let ud = MultiPoly::var(Var::Ud);
    let unit = &MultiPoly::one() - &(&su * &su);
    let mat = PolyMatrix::from_fn(n, n, |i, j| {
        let mut e = -(&unit * &(&(&uu * views.w.get(i, j)) + &(&ud * views.w_star.get(i, j))));
        e -= &(&(&(&su * &su) * &uu) * views.w_sym.get(i, j));
        if i == j {
            e += &unit;
            e -= &(&(&su * &uu) * &MultiPoly::from_int(views.d_sym[i] as i64));
        }
        e
    });
    let det = det_edge(&mat);
    let su_def = &uu * &(&MultiPoly::var(Var::Tuu) - &MultiPoly::one());
    let map = [(Var::Su, su_def.clone())].into_iter().collect();
    let mut out = det.substitute_all(&map);
    let one_minus = &MultiPoly::one() - &su_def;
    let one_plus = &MultiPoly::one() + &su_def;
    for _ in 0..views.l_plus {
        out = &out * &one_minus;
    }
    for _ in 0..views.l_minus {
        out = &out * &one_plus;
    }
    let unit = unit.substitute_all(&map);
    Ok(apply_prefactor(out, &unit, views.r as i64 - n as i64))
}

/// Multiplies by unit^exponent, dividing exactly when the exponent is negative.
fn apply_prefactor(mut p: MultiPoly, unit: &MultiPoly, exponent: i64) -> MultiPoly {
    if exponent >= 0 {
        for _ in 0..exponent {
            p = &p * unit;
        }
        p
    } else {
        for _ in 0..-exponent {
            p = p
                .exact_div(unit)
                .expect("closed-form determinant is divisible by its unit prefactor");
        }
        p
    }
}

/// det(I - uA + u^2 (D - I)) for a graph, the n x n side of the Ihara
/// determinant formula.
pub fn bass_determinant(g: &Digraph) -> Result<MultiPoly, GraphError> {
    if !g.is_graph() {
        return Err(GraphError::NotAGraph);
    }
    let n = g.n();
    let deg = g.out_degrees();
    let u = MultiPoly::var(Var::Uu);
    let u2 = u.pow(2);
    let mat = PolyMatrix::from_fn(n, n, |i, j| {
        let mut e = -u.scale(&rat(g.adj(i, j) as i64));
        if i == j {
            e += &MultiPoly::one();
            e += &u2.scale(&rat(deg[i] as i64 - 1));
        }
        e
    });
    Ok(mat.det_fraction_free())
}

/// Cross-multiplied Ihara identity: zeta^{-1} (1-u^2)^{n-mbar} against
/// (1-u^2)^{mbar-n} det(I - uA + u^2(D-I)), with only nonnegative exponents.
pub fn ihara_matches_bass(g: &Digraph) -> Result<bool, GraphError> {
    if !g.is_graph() || !g.is_simple() {
        return Err(GraphError::NotAGraph);
    }
    let w = WeightedDigraph::from_digraph(g)?;
    let zeta = zeta_inverse(&w, ZetaSpec::Ihara)?;
    let det = bass_determinant(g)?;
    let mbar = (g.m() / 2) as i64;
    let n = g.n() as i64;
    let u = MultiPoly::var(Var::Uu);
    let unit = &MultiPoly::one() - &u.pow(2);
    let mut lhs = zeta;
    let mut rhs = det;
    for _ in 0..(n - mbar).max(0) {
        lhs = &lhs * &unit;
    }
    for _ in 0..(mbar - n).max(0) {
        rhs = &rhs * &unit;
    }
    Ok(lhs == rhs)
}
