//! Generalized characteristic polynomials of digraphs and graphs.
//!
//! The central object is eta(x, tu, td, uu, ud) = det(xI + tu D^out + td D^in
//! + uu A + ud A^T), homogeneous of degree n. Graphs use the three-variable
//! restriction eta_bar(x, t, u) = det(xI + tD + uA). The completed variant
//! adds a yJ term; its y-degree is one, which drives complement equivalence.
//! Zeta-equivalence of digraphs (graphs) is exact equality of eta (eta_bar).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{Digraph, GraphError};
use crate::poly::{rat, MultiPoly, PolyMatrix, Rat, Var};

/// eta with the vertex and edge counts it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaPolynomial {
    pub poly: MultiPoly,
    pub n: usize,
    pub m: usize,
}

/// eta_bar with the vertex and edge counts it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaBarPolynomial {
    pub poly: MultiPoly,
    pub n: usize,
    pub m: usize,
}

/// Raised when a polynomial that should split over integer degrees does not.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("polynomial does not factor over integer roots in 0..n")]
pub struct DegreeRootError;

/// The matrix xI + tu D^out + td D^in + uu A + ud A^T.
pub fn eta_matrix(g: &Digraph) -> PolyMatrix {
    let n = g.n();
    let dout = g.out_degrees();
    let din = g.in_degrees();
    PolyMatrix::from_fn(n, n, |i, j| {
        let mut e = MultiPoly::zero();
        if i == j {
            e += &MultiPoly::var(Var::X);
            e += &MultiPoly::var(Var::Tu).scale(&rat(dout[i] as i64));
            e += &MultiPoly::var(Var::Td).scale(&rat(din[i] as i64));
        }
        e += &MultiPoly::var(Var::Uu).scale(&rat(g.adj(i, j) as i64));
        e += &MultiPoly::var(Var::Ud).scale(&rat(g.adj(j, i) as i64));
        e
    })
}

/// The matrix of `eta_matrix` with yJ added.
pub fn eta_complete_matrix(g: &Digraph) -> PolyMatrix {
    let base = eta_matrix(g);
    let y = MultiPoly::var(Var::Y);
    PolyMatrix::from_fn(g.n(), g.n(), |i, j| base.get(i, j) + &y)
}

/// Generalized characteristic polynomial of a digraph.
pub fn eta(g: &Digraph) -> EtaPolynomial {
    EtaPolynomial {
        poly: eta_matrix(g).det_fraction_free(),
        n: g.n(),
        m: g.m(),
    }
}

/// Graph restriction det(xI + tD + uA), in the variables x, tu, uu.
pub fn eta_bar(g: &Digraph) -> Result<EtaBarPolynomial, GraphError> {
    if !g.is_graph() {
        return Err(GraphError::NotAGraph);
    }
    let n = g.n();
    let deg = g.out_degrees();
    let mat = PolyMatrix::from_fn(n, n, |i, j| {
        let mut e = MultiPoly::var(Var::Uu).scale(&rat(g.adj(i, j) as i64));
        if i == j {
            e += &MultiPoly::var(Var::X);
            e += &MultiPoly::var(Var::Tu).scale(&rat(deg[i] as i64));
        }
        e
    });
    Ok(EtaBarPolynomial {
        poly: mat.det_fraction_free(),
        n,
        m: g.m(),
    })
}

/// Completed polynomial det(xI + yJ + tu D^out + td D^in + uu A + ud A^T).
///
/// The all-ones perturbation yJ has rank one, so the determinant is affine
/// in y; it is assembled from two y-free determinants as
/// (1 - y) det(L) + y det(L + J), which the direct expansion tests confirm.
pub fn eta_complete(g: &Digraph) -> Result<MultiPoly, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::NotSimple);
    }
    let base = eta_matrix(g);
    let det0 = base.det_fraction_free();
    let shifted = PolyMatrix::from_fn(g.n(), g.n(), |i, j| base.get(i, j) + &MultiPoly::one());
    let det1 = shifted.det_fraction_free();
    let y = MultiPoly::var(Var::Y);
    let p = &det0 + &(&y * &(&det1 - &det0));
    let expected = usize::from(g.n() >= 1) as u32;
    assert_eq!(p.degree_in(Var::Y), expected, "completed polynomial must have y-degree one");
    Ok(p)
}

/// Ordinary characteristic polynomial det(xI - A).
pub fn chi(g: &Digraph) -> MultiPoly {
    if g.n() <= 10 {
        crate::poly::char_matrix(&g.adjacency_rows()).det_fraction_free()
    } else {
        chi_interpolated(g)
    }
}

/// chi via exact integer determinants at x = 0..=n and Newton interpolation.
///
/// Large matrices are much cheaper this way than carrying polynomial entries
/// through the elimination: n + 1 integer Bareiss determinants pin down the
/// degree-n polynomial uniquely.
fn chi_interpolated(g: &Digraph) -> MultiPoly {
    let n = g.n();
    let a = g.adjacency_rows();
    let points: Vec<Rat> = (0..=n as i64).map(rat).collect();
    let values: Vec<Rat> = points
        .iter()
        .map(|x| {
            let xi = x.to_integer();
            let entries: Vec<BigInt> = (0..n)
                .flat_map(|i| {
                    let xi = xi.clone();
                    let a = &a;
                    (0..n).map(move |j| {
                        let mut e = BigInt::from(-a[i][j]);
                        if i == j {
                            e += &xi;
                        }
                        e
                    })
                })
                .collect();
            Rat::from_integer(int_det(n, entries))
        })
        .collect();
    newton_interpolate(&points, &values)
}

/// Exact determinant of a row-major integer matrix by Bareiss elimination.
fn int_det(n: usize, mut m: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                Some(r) => {
                    for j in k..n {
                        m.swap(k * n + j, r * n + j);
                    }
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = t / &prev;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = m[k * n + k].clone();
    }
    let d = m[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Polynomial in x through the given points, by divided differences.
fn newton_interpolate(points: &[Rat], values: &[Rat]) -> MultiPoly {
    let mut dd = values.to_vec();
    let mut coeffs = vec![dd[0].clone()];
    for level in 1..points.len() {
        for i in 0..dd.len() - 1 {
            dd[i] = (&dd[i + 1] - &dd[i]) / (&points[i + level] - &points[i]);
        }
        dd.pop();
        coeffs.push(dd[0].clone());
    }
    let x = MultiPoly::var(Var::X);
    let mut acc = MultiPoly::zero();
    let mut basis = MultiPoly::one();
    for (k, c) in coeffs.iter().enumerate() {
        acc += &basis.scale(c);
        if k + 1 < coeffs.len() {
            basis = &basis * &(&x - &MultiPoly::constant(points[k].clone()));
        }
    }
    acc
}

/// Degree-weighted Markov polynomial f(a,b) mu_bar(x,a,b) = eta_bar(a+xa+xb, x, 1).
///
/// f(a,b) = det((a+b)I + D); dividing by f at any point where f is nonzero
/// recovers det(xI + ((a+b)I + D)^{-1}(A + aI)) exactly.
pub fn markov_poly(g: &Digraph) -> Result<MultiPoly, GraphError> {
    let eb = eta_bar(g)?;
    let a = MultiPoly::var(Var::A);
    let b = MultiPoly::var(Var::B);
    let x = MultiPoly::var(Var::X);
    let mut map = BTreeMap::new();
    map.insert(Var::X, &a + &(&x * &(&a + &b)));
    map.insert(Var::Tu, x);
    map.insert(Var::Uu, MultiPoly::one());
    Ok(eb.poly.substitute_all(&map))
}

/// Degree sequence recovered from eta_bar: the integer roots of
/// eta_bar(x, -1, 0) = det(xI - D), sorted descending.
pub fn degree_sequence_from_eta_bar(p: &EtaBarPolynomial) -> Result<Vec<u32>, DegreeRootError> {
    let q = p.poly.assign(&[(Var::Tu, rat(-1)), (Var::Uu, Rat::zero())]);
    let n = p.n;
    // Descending coefficient list of a monic degree-n polynomial in x.
    let mut coeffs: Vec<Rat> = (0..=n)
        .rev()
        .map(|k| {
            let c = q.coeff_in_var(Var::X, k as u32);
            if c.total_degree() > 0 {
                return None;
            }
            Some(c.constant_term())
        })
        .collect::<Option<_>>()
        .ok_or(DegreeRootError)?;
    let mut degrees = Vec::with_capacity(n);
    for d in (0..n as i64).rev() {
        loop {
            match synthetic_divide(&coeffs, d) {
                Some(quot) => {
                    coeffs = quot;
                    degrees.push(d as u32);
                }
                None => break,
            }
        }
    }
    if coeffs.len() != 1 {
        return Err(DegreeRootError);
    }
    Ok(degrees)
}

/// Divides a descending-coefficient polynomial by (x - d), if the remainder vanishes.
fn synthetic_divide(coeffs: &[Rat], d: i64) -> Option<Vec<Rat>> {
    if coeffs.len() < 2 {
        return None;
    }
    let dr = rat(d);
    let mut quot = Vec::with_capacity(coeffs.len() - 1);
    let mut carry = coeffs[0].clone();
    for c in &coeffs[1..] {
        quot.push(carry.clone());
        carry = c + &dr * &carry;
    }
    if carry.is_zero() {
        Some(quot)
    } else {
        None
    }
}

/// Exact eta equality of two simple digraphs on the same vertex count.
pub fn zeta_equivalent_digraphs(g: &Digraph, h: &Digraph) -> Result<bool, GraphError> {
    if g.n() != h.n() {
        return Err(GraphError::SizeMismatch(g.n(), h.n()));
    }
    if !g.is_simple() || !h.is_simple() {
        return Err(GraphError::NotSimple);
    }
    Ok(eta(g).poly == eta(h).poly)
}

/// Exact eta_bar equality of two simple graphs on the same vertex count.
pub fn zeta_equivalent_graphs(g: &Digraph, h: &Digraph) -> Result<bool, GraphError> {
    if g.n() != h.n() {
        return Err(GraphError::SizeMismatch(g.n(), h.n()));
    }
    if !g.is_simple() || !h.is_simple() {
        return Err(GraphError::NotSimple);
    }
    Ok(eta_bar(g)?.poly == eta_bar(h)?.poly)
}
