//! Adjugate of the characteristic matrix xI - A for an integer matrix A.
//!
//! Small inputs go through signed minors, which are trivially correct; larger
//! ones use the Faddeev-LeVerrier recurrence, whose divisions by 1..n are
//! exact over the rationals.

use num_traits::Zero;

use super::matrix::PolyMatrix;
use super::multipoly::{rat, MultiPoly, Rat};
use super::var::Var;

const MINOR_CUTOFF: usize = 6;

/// adj(xI - A) as a matrix of polynomials in x, satisfying
/// (xI - A) * adj(xI - A) = det(xI - A) * I.
pub fn adjugate_char_matrix(a: &[Vec<i64>]) -> PolyMatrix {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "square matrix required");
    if n <= MINOR_CUTOFF {
        adjugate_by_minors(a)
    } else {
        adjugate_by_leverrier(a)
    }
}

/// The characteristic matrix xI - A itself.
pub fn char_matrix(a: &[Vec<i64>]) -> PolyMatrix {
    let n = a.len();
    PolyMatrix::from_fn(n, n, |i, j| {
        let mut p = MultiPoly::from_int(-a[i][j]);
        if i == j {
            p += &MultiPoly::var(Var::X);
        }
        p
    })
}

fn adjugate_by_minors(a: &[Vec<i64>]) -> PolyMatrix {
    let n = a.len();
    if n == 0 {
        return PolyMatrix::zero(0, 0);
    }
    let cm = char_matrix(a);
    // adj[j][i] is the signed (i, j) cofactor.
    PolyMatrix::from_fn(n, n, |j, i| {
        let d = cm.minor(i, j).det_cofactor();
        if (i + j) % 2 == 0 {
            d
        } else {
            -d
        }
    })
}

fn adjugate_by_leverrier(a: &[Vec<i64>]) -> PolyMatrix {
    let n = a.len();
    // M_1 = I; M_{k+1} = A M_k + c_{n-k} I with c_{n-k} = -tr(A M_k)/k;
    // adj(xI - A) = sum_k M_k x^{n-k}.
    let mut m: Vec<Vec<Rat>> = identity_rat(n);
    let mut adj = PolyMatrix::zero(n, n);
    for k in 1..=n {
        let xpow = MultiPoly::term(
            super::monomial::Monomial::var_pow(Var::X, (n - k) as u32),
            num_traits::One::one(),
        );
        for i in 0..n {
            for j in 0..n {
                if !m[i][j].is_zero() {
                    let term = xpow.scale(&m[i][j]);
                    adj.set(i, j, adj.get(i, j) + &term);
                }
            }
        }
        if k == n {
            break;
        }
        let am = int_times_rat(a, &m);
        let trace = (0..n).fold(Rat::zero(), |acc, i| acc + &am[i][i]);
        let c = -trace / rat(k as i64);
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    adj
}

fn identity_rat(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
        .collect()
}

fn int_times_rat(a: &[Vec<i64>], m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Rat::zero();
                    for k in 0..n {
                        if a[i][k] != 0 {
                            acc += m[k][j].clone() * rat(a[i][k]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
