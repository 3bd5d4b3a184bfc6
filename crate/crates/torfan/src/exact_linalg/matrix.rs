//! Dense matrices over arbitrary-precision integers, row-major.
//!
//! Dimensions may be zero: empty matrices are legal and represent zero maps
//! to or from the zero group, which keeps every chain-complex operation
//! total.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A dense `rows x cols` integer matrix.  Acts on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// The zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Builds a matrix entry by entry from a closure.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from machine-integer rows.  Panics on ragged input.
    /// The column count must be passed explicitly so zero-row matrices keep
    /// their shape.
    pub fn from_rows_i64(cols: usize, rows: &[Vec<i64>]) -> Self {
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row in matrix literal");
        }
        Self::from_fn(rows.len(), cols, |i, j| BigInt::from(rows[i][j]))
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "column of wrong length");
        }
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.entry(i, j).clone()).collect()
    }

    /// Matrix product `self * rhs`.  Panics on a shape mismatch, which is
    /// always a programming error here.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.entry(i, k) * rhs.entry(k, j);
            }
            acc
        })
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j) * &v[j]).sum())
            .collect()
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols { self.entry(i, j).clone() } else { rhs.entry(i, j - self.cols).clone() }
        })
    }

    /// Vertical concatenation `[self; rhs]`.
    pub fn vstack(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        Self::from_fn(self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows { self.entry(i, j).clone() } else { rhs.entry(i - self.rows, j).clone() }
        })
    }

    pub fn neg(&self) -> IntMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| -self.entry(i, j))
    }

    /// The submatrix with the selected columns, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        Self::from_fn(self.rows, idx.len(), |i, j| self.entry(i, idx[j]).clone())
    }

    /// The submatrix with the selected rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        Self::from_fn(idx.len(), self.cols, |i, j| self.entry(idx[i], j).clone())
    }

    /// Rank over the rationals, by fraction-free Gaussian elimination
    /// (Bareiss) with full pivoting.  Exact; no SNF needed.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut prev = BigInt::from(1);
        while rank < m.rows.min(m.cols) {
            // Find any nonzero pivot in the remaining submatrix.
            let mut pivot = None;
            'search: for i in rank..m.rows {
                for j in rank..m.cols {
                    if !m.entry(i, j).is_zero() {
                        pivot = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap_rows(rank, pi);
            m.swap_cols(rank, pj);
            // Bareiss step: every later entry becomes
            // (a_ij * p - a_ik * a_kj) / prev, an exact division.
            let p = m.entry(rank, rank).clone();
            for i in rank + 1..m.rows {
                for j in rank + 1..m.cols {
                    let v = (m.entry(i, j) * &p - m.entry(i, rank) * m.entry(rank, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, rank, BigInt::zero());
            }
            prev = p;
            rank += 1;
        }
        rank
    }

    /// Determinant by fraction-free elimination.  Panics if not square.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut m = self.clone();
        let mut sign = BigInt::from(1);
        let mut prev = BigInt::from(1);
        for k in 0..n {
            if m.entry(k, k).is_zero() {
                let Some(i) = (k + 1..n).find(|&i| !m.entry(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, i);
                sign = -sign;
            }
            let p = m.entry(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.entry(i, j) * &p - m.entry(i, k) * m.entry(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = p;
        }
        sign * m.entry(n - 1, n - 1).clone()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k * row[src]`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.entry(src, j) * k + self.entry(dst, j);
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += k * col[src]`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.entry(i, src) * k + self.entry(i, dst);
            self.set(i, dst, v);
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.entry(i, j);
            self.set(i, j, v);
        }
    }

    /// Greatest absolute value of any entry; zero for empty matrices.
    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(Signed::abs).max().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.entry(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
