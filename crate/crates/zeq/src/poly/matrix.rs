//! Dense matrices of polynomials with exact determinants.

use super::multipoly::{MultiPoly, Rat};

/// Rectangular matrix of [`MultiPoly`] entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            data: vec![MultiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, MultiPoly::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> PolyMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, data }
    }

    /// Constant matrix from rational entries.
    pub fn from_rat_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> PolyMatrix {
        PolyMatrix::from_fn(rows, cols, |i, j| MultiPoly::constant(f(i, j)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        self.data[i * self.cols + j] = p;
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        PolyMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = MultiPoly::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc += &(a * rhs.get(k, j));
            }
            acc
        })
    }

    /// Entry-wise product with a polynomial.
    pub fn scale(&self, p: &MultiPoly) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * p)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MultiPoly::is_zero)
    }

    /// Matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows - 1, self.cols - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self.get(rr, cc).clone()
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Every
    /// division along the way is exact in the polynomial ring.
    pub fn det_fraction_free(&self) -> MultiPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return MultiPoly::one();
        }
        let mut m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = MultiPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return MultiPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                m[i][k] = MultiPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Determinant by dynamic programming over column subsets, expanding one
    /// row at a time. Costs O(2^n n) polynomial multiply-adds but never forms
    /// the large intermediate products of elimination, which makes it the
    /// right tool for edge-level matrices with near-monomial entries.
    pub fn det_subset_dp(&self) -> MultiPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        assert!(n <= 20, "subset determinant is exponential in the size");
        let mut table: Vec<Option<MultiPoly>> = vec![None; 1 << n];
        table[0] = Some(MultiPoly::one());
        for s in 1usize..1 << n {
            let k = s.count_ones() as usize;
            let row = k - 1;
            let mut acc = MultiPoly::zero();
            let mut pos = 0;
            for j in 0..n {
                if s & (1 << j) == 0 {
                    continue;
                }
                let a = self.get(row, j);
                if !a.is_zero() {
                    if let Some(sub) = &table[s & !(1 << j)] {
                        let contrib = a * sub;
                        acc += &(if (row + pos) % 2 == 0 { contrib } else { -contrib });
                    }
                }
                pos += 1;
            }
            if !acc.is_zero() {
                table[s] = Some(acc);
            } else if k < n {
                // Keep an explicit zero out of the table so later rows skip it,
                // but the full set must always produce an answer.
                table[s] = None;
            } else {
                table[s] = Some(acc);
            }
        }
        table[(1 << n) - 1].take().expect("full subset is always filled")
    }

    /// Determinant by cofactor expansion along the first row. Exponential;
    /// kept as an independently simple oracle and for small minors.
    pub fn det_cofactor(&self) -> MultiPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        match n {
            0 => MultiPoly::one(),
            1 => self.get(0, 0).clone(),
            _ => {
                let mut acc = MultiPoly::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let sub = self.minor(0, j).det_cofactor();
                    let contrib = a * &sub;
                    acc += &(if j % 2 == 0 { contrib } else { -contrib });
                }
                acc
            }
        }
    }
}
