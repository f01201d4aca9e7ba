//! Truncated power series in x with polynomial coefficients.
//!
//! Supports expanding det(I - x M) as a series in the scaling variable x and
//! taking -log of a unit series, which links closed-walk tallies to the zeta
//! determinant. Coefficients are [`MultiPoly`] values free of x.

use num_traits::One;

use super::matrix::PolyMatrix;
use super::multipoly::{MultiPoly, Rat};
use super::var::Var;

/// Series a_0 + a_1 x + ... + a_L x^L, truncated beyond order L.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XSeries {
    coeffs: Vec<MultiPoly>,
}

impl XSeries {
    pub fn zero(order: usize) -> XSeries {
        XSeries {
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> XSeries {
        let mut s = XSeries::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// Truncates a polynomial (which may mention x) into series form.
    pub fn from_poly(p: &MultiPoly, order: usize) -> XSeries {
        let mut s = XSeries::zero(order);
        for k in 0..=order {
            s.coeffs[k] = p.coeff_in_var(Var::X, k as u32);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn mul(&self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        let mut out = XSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        let mut out = XSeries::zero(order);
        for k in 0..=order {
            out.coeffs[k] = &self.coeffs[k] - &rhs.coeffs[k];
        }
        out
    }

    /// Inverse of a series whose constant coefficient is a nonzero rational.
    pub fn inverse(&self) -> XSeries {
        let c0 = &self.coeffs[0];
        assert!(
            !c0.is_zero() && c0.total_degree() == 0,
            "series inverse requires a nonzero constant leading coefficient"
        );
        let inv0 = MultiPoly::constant(Rat::one() / c0.constant_term());
        let order = self.order();
        let mut out = XSeries::zero(order);
        out.coeffs[0] = inv0.clone();
        for k in 1..=order {
            let mut acc = MultiPoly::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || out.coeffs[k - j].is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[j] * &out.coeffs[k - j]);
            }
            out.coeffs[k] = -(&inv0 * &acc);
        }
        out
    }

    /// Coefficients p_1..p_L with -log(self) = sum_k p_k x^k / k; requires
    /// constant coefficient 1. This is the Newton-style recurrence
    /// p_k = -k d_k - sum_{j<k} p_j d_{k-j}, exact over the coefficient ring.
    pub fn neg_log_times_k(&self) -> Vec<MultiPoly> {
        assert!(
            self.coeffs[0].is_one_constant(),
            "series log requires constant coefficient 1"
        );
        let order = self.order();
        let mut p: Vec<MultiPoly> = Vec::with_capacity(order);
        for k in 1..=order {
            let mut acc = self.coeffs[k].scale(&crate::poly::multipoly::rat(k as i64));
            for j in 1..k {
                if p[j - 1].is_zero() || self.coeffs[k - j].is_zero() {
                    continue;
                }
                acc += &(&p[j - 1] * &self.coeffs[k - j]);
            }
            p.push(-acc);
        }
        p
    }
}

impl MultiPoly {
    fn is_one_constant(&self) -> bool {
        self.num_terms() == 1 && self.constant_term().is_one()
    }
}

/// det(I - x m) truncated at `order`, by Gaussian elimination over the
/// truncated series ring. Pivots stay units because the input has unit
/// diagonal constant terms and x-divisible off-diagonal terms.
pub fn det_series_identity_minus_x(m: &PolyMatrix, order: usize) -> XSeries {
    assert!(m.is_square());
    let n = m.rows();
    let x = MultiPoly::var(Var::X);
    let mut work: Vec<Vec<XSeries>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = -(&x * m.get(i, j));
                    if i == j {
                        e += &MultiPoly::one();
                    }
                    XSeries::from_poly(&e, order)
                })
                .collect()
        })
        .collect();
    let mut det = XSeries::one(order);
    for k in 0..n {
        let pivot = work[k][k].clone();
        det = det.mul(&pivot);
        let inv = pivot.inverse();
        for i in k + 1..n {
            if (0..=order).all(|t| work[i][k].coeffs[t].is_zero()) {
                continue;
            }
            let factor = work[i][k].mul(&inv);
            for j in k + 1..n {
                let delta = factor.mul(&work[k][j]);
                work[i][j] = work[i][j].sub(&delta);
            }
        }
    }
    det
}
