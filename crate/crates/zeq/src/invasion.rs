//! Invasions: replacing every edge of a digraph by a two-native gadget.
//!
//! An invader is a digraph with a tail native, a head native, and a core of
//! invasive vertices. Invading a digraph G glues one copy of the invader
//! onto every edge of G. The characteristic polynomial of the result reduces
//! to an n x n determinant built from the core's characteristic polynomial
//! and adjugate, so spectra of all invasions are determined by eta.

use crate::charpoly::chi;
use crate::graph::{iso_check, Digraph, GraphError, Perm};
use crate::poly::{
    adjugate_char_matrix, rat, ratio, MultiPoly, PolyMatrix, Var,
};

/// Largest invader size accepted by the brute-force symmetry check.
pub const MAX_INVADER_SYMMETRY_N: usize = 8;

/// A digraph with two distinct native vertices, stored with the tail native
/// first and the head native last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invader {
    s: Digraph,
}

impl Invader {
    /// Builds an invader, relabeling so that `t` is vertex 0 and `h` is last.
    pub fn new(s: &Digraph, t: usize, h: usize) -> Result<Invader, GraphError> {
        let n = s.n();
        for &v in &[t, h] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        if t == h {
            return Err(GraphError::BadNatives);
        }
        let mut images = vec![0usize; n];
        images[t] = 0;
        images[h] = n - 1;
        let mut next = 1;
        for v in 0..n {
            if v != t && v != h {
                images[v] = next;
                next += 1;
            }
        }
        let perm = Perm::from_images(images).expect("native relabeling is a bijection");
        Ok(Invader { s: perm.relabel(s) })
    }

    /// The invader digraph with natives at positions 0 and n-1.
    pub fn digraph(&self) -> &Digraph {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    /// Number of invasive (core) vertices.
    pub fn core_n(&self) -> usize {
        self.s.n() - 2
    }

    fn tail(&self) -> usize {
        0
    }

    fn head(&self) -> usize {
        self.s.n() - 1
    }

    pub fn a_tt(&self) -> u32 {
        self.s.adj(self.tail(), self.tail())
    }

    pub fn a_th(&self) -> u32 {
        self.s.adj(self.tail(), self.head())
    }

    pub fn a_ht(&self) -> u32 {
        self.s.adj(self.head(), self.tail())
    }

    pub fn a_hh(&self) -> u32 {
        self.s.adj(self.head(), self.head())
    }

    /// The core subdigraph induced on the invasive vertices.
    pub fn core(&self) -> Digraph {
        let k = self.core_n();
        Digraph::from_matrix(
            &(1..=k)
                .map(|i| (1..=k).map(|j| self.s.adj(i, j)).collect())
                .collect::<Vec<_>>(),
        )
    }

    fn boundary_row(&self, from_head: bool) -> Vec<u32> {
        let v = if from_head { self.head() } else { self.tail() };
        (1..=self.core_n()).map(|j| self.s.adj(v, j)).collect()
    }

    fn boundary_col(&self, to_head: bool) -> Vec<u32> {
        let v = if to_head { self.head() } else { self.tail() };
        (1..=self.core_n()).map(|i| self.s.adj(i, v)).collect()
    }

    /// Whether some automorphism interchanges the two natives.
    pub fn is_symmetric(&self) -> Result<bool, GraphError> {
        let n = self.s.n();
        if n > MAX_INVADER_SYMMETRY_N {
            return Err(GraphError::TooLarge { n, bound: MAX_INVADER_SYMMETRY_N });
        }
        let k = self.core_n();
        let mut found = false;
        crate::graph::for_each_perm(k, |core_images| {
            if found {
                return;
            }
            let mut images = vec![0usize; n];
            images[self.tail()] = self.head();
            images[self.head()] = self.tail();
            for (i, &img) in core_images.iter().enumerate() {
                images[i + 1] = img + 1;
            }
            let perm = Perm::from_images(images).expect("constructed from bijections");
            if perm.relabel(&self.s) == self.s {
                found = true;
            }
        });
        Ok(found)
    }
}

/// The directed path invader on `n_s` vertices: tail -> core... -> head.
pub fn directed_path_invader(n_s: usize) -> Invader {
    assert!(n_s >= 2, "an invader needs both natives");
    let edges: Vec<(usize, usize)> = (0..n_s - 1).map(|i| (i, i + 1)).collect();
    Invader::new(&Digraph::from_edges(n_s, &edges).unwrap(), 0, n_s - 1).unwrap()
}

/// The undirected path invader on `n_s` vertices.
pub fn undirected_path_invader(n_s: usize) -> Invader {
    assert!(n_s >= 2, "an invader needs both natives");
    let mut edges = Vec::new();
    for i in 0..n_s - 1 {
        edges.push((i, i + 1));
        edges.push((i + 1, i));
    }
    Invader::new(&Digraph::from_edges(n_s, &edges).unwrap(), 0, n_s - 1).unwrap()
}

/// Glues one copy of the invader onto every edge of `g`. Vertices of `g`
/// come first, then one core block per edge in edge-list order. Both natives
/// land on the same vertex when the edge is a loop.
pub fn invade(s: &Invader, g: &Digraph) -> Digraph {
    let n = g.n();
    let core_n = s.core_n();
    let mut out = Digraph::new(n + g.m() * core_n);
    for (k, &(v, vp)) in g.edges().iter().enumerate() {
        let base = n + k * core_n;
        let map = |w: usize| {
            if w == 0 {
                v
            } else if w == s.n() - 1 {
                vp
            } else {
                base + w - 1
            }
        };
        for (i, j) in s.digraph().edges() {
            out.add_edges(map(i), map(j), 1);
        }
    }
    out
}

/// Characteristic polynomial of the invasion, computed from the core's
/// characteristic polynomial chi_C and adjugate without building the
/// invaded digraph: chi_C^(m-n) det(x chi_C I - c_out D^out - c_in D^in
/// - c_fwd A - c_bwd A^T), where each coefficient is a chi_C multiple plus
/// a boundary-adjugate-boundary product.
pub fn invasion_char_poly(s: &Invader, g: &Digraph) -> MultiPoly {
    let core = s.core();
    let chi_c = chi(&core);
    let adj = adjugate_char_matrix(&core.adjacency_rows());
    let p = |row: &[u32], col: &[u32]| -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (j, &rj) in row.iter().enumerate() {
            if rj == 0 {
                continue;
            }
            for (k, &ck) in col.iter().enumerate() {
                if ck == 0 {
                    continue;
                }
                acc += &adj.get(j, k).scale(&rat((rj * ck) as i64));
            }
        }
        acc
    };
    let t_row = s.boundary_row(false);
    let h_row = s.boundary_row(true);
    let t_col = s.boundary_col(false);
    let h_col = s.boundary_col(true);
    let coeff = |a: u32, pv: MultiPoly| &chi_c.scale(&rat(a as i64)) + &pv;
    let c_out = coeff(s.a_tt(), p(&t_row, &t_col));
    let c_in = coeff(s.a_hh(), p(&h_row, &h_col));
    let c_fwd = coeff(s.a_th(), p(&t_row, &h_col));
    let c_bwd = coeff(s.a_ht(), p(&h_row, &t_col));
    let n = g.n();
    let dout = g.out_degrees();
    let din = g.in_degrees();
    let x_chi = &MultiPoly::var(Var::X) * &chi_c;
    let mat = PolyMatrix::from_fn(n, n, |i, j| {
        let mut e = MultiPoly::zero();
        if i == j {
            e += &x_chi;
            e -= &c_out.scale(&rat(dout[i] as i64));
            e -= &c_in.scale(&rat(din[i] as i64));
        }
        e -= &c_fwd.scale(&rat(g.adj(i, j) as i64));
        e -= &c_bwd.scale(&rat(g.adj(j, i) as i64));
        e
    });
    let det = mat.det_fraction_free();
    power_times(det, &chi_c, g.m() as i64 - g.n() as i64)
}

/// Glues one copy of a symmetric invader onto every undirected edge of a
/// loop-free graph. Blocks are ordered by vertex pair, then multiplicity.
pub fn symmetric_invade(s: &Invader, g: &Digraph) -> Result<Digraph, GraphError> {
    if !s.is_symmetric()? {
        return Err(GraphError::NotSymmetricInvader);
    }
    if !g.is_graph() || !g.is_loop_free() {
        return Err(GraphError::NotAGraph);
    }
    let n = g.n();
    let core_n = s.core_n();
    let mbar = g.m() / 2;
    let mut out = Digraph::new(n + mbar * core_n);
    let mut block = 0;
    for v in 0..n {
        for vp in v + 1..n {
            for _ in 0..g.adj(v, vp) {
                let base = n + block * core_n;
                block += 1;
                let map = |w: usize| {
                    if w == 0 {
                        v
                    } else if w == s.n() - 1 {
                        vp
                    } else {
                        base + w - 1
                    }
                };
                for (i, j) in s.digraph().edges() {
                    out.add_edges(map(i), map(j), 1);
                }
            }
        }
    }
    Ok(out)
}

/// Characteristic polynomial of the symmetric invasion, via the graph
/// restriction of the invasion determinant with exponent mbar - n.
pub fn symmetric_invasion_char_poly(s: &Invader, g: &Digraph) -> Result<MultiPoly, GraphError> {
    if !s.is_symmetric()? {
        return Err(GraphError::NotSymmetricInvader);
    }
    if !g.is_graph() || !g.is_loop_free() {
        return Err(GraphError::NotAGraph);
    }
    let core = s.core();
    let chi_c = chi(&core);
    let adj = adjugate_char_matrix(&core.adjacency_rows());
    let p = |row: &[u32], col: &[u32]| -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (j, &rj) in row.iter().enumerate() {
            for (k, &ck) in col.iter().enumerate() {
                if rj != 0 && ck != 0 {
                    acc += &adj.get(j, k).scale(&rat((rj * ck) as i64));
                }
            }
        }
        acc
    };
    let t_row = s.boundary_row(false);
    let t_col = s.boundary_col(false);
    let h_col = s.boundary_col(true);
    let c_deg = &chi_c.scale(&rat(s.a_tt() as i64)) + &p(&t_row, &t_col);
    let c_adj = &chi_c.scale(&rat(s.a_th() as i64)) + &p(&t_row, &h_col);
    let n = g.n();
    let deg = g.out_degrees();
    let x_chi = &MultiPoly::var(Var::X) * &chi_c;
    let mat = PolyMatrix::from_fn(n, n, |i, j| {
        let mut e = MultiPoly::zero();
        if i == j {
            e += &x_chi;
            e -= &c_deg.scale(&rat(deg[i] as i64));
        }
        e -= &c_adj.scale(&rat(g.adj(i, j) as i64));
        e
    });
    let det = mat.det_fraction_free();
    let mbar = (g.m() / 2) as i64;
    Ok(power_times(det, &chi_c, mbar - g.n() as i64))
}

/// Multiplies by base^exponent, dividing exactly for negative exponents.
fn power_times(mut p: MultiPoly, base: &MultiPoly, exponent: i64) -> MultiPoly {
    if exponent >= 0 {
        for _ in 0..exponent {
            p = &p * base;
        }
    } else {
        for _ in 0..-exponent {
            p = p
                .exact_div(base)
                .expect("invasion determinant is divisible by the core polynomial");
        }
    }
    p
}

/// Chebyshev polynomial of the second kind, U_{-1} = 0, U_0 = 1,
/// U_{k+1} = 2x U_k - U_{k-1}.
pub fn chebyshev_u(k: i64) -> MultiPoly {
    assert!(k >= -1, "Chebyshev index starts at -1");
    let two_x = MultiPoly::var(Var::X).scale(&rat(2));
    let mut prev = MultiPoly::zero();
    let mut cur = MultiPoly::one();
    if k == -1 {
        return prev;
    }
    for _ in 0..k {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// U_k evaluated at x/2, the characteristic polynomial of the k-vertex path.
pub fn chebyshev_u_half(k: i64) -> MultiPoly {
    let map = [(Var::X, MultiPoly::var(Var::X).scale(&ratio(1, 2)))]
        .into_iter()
        .collect();
    chebyshev_u(k).substitute_all(&map)
}

/// Whether the two digraphs become isomorphic after relabeling; small helper
/// for invasion tests on gadget outputs that exceed the canonical-form bound.
pub fn small_iso(g: &Digraph, h: &Digraph) -> bool {
    matches!(iso_check(g, h), Ok(Some(_)))
}
