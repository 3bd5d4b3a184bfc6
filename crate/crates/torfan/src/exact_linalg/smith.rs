//! Smith and Hermite normal forms, with the derived solvers every homology
//! computation reduces to: integer kernels, exact linear systems, and
//! inverses of unimodular matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// The Smith normal form `D = U * A * V` of an integer matrix.
///
/// `D` is diagonal with `d_1 | d_2 | ... | d_r`, all entries nonnegative and
/// zeros trailing; `U` and `V` are unimodular (determinant +-1).  The
/// diagonal entries are the invariant factors of the cokernel of `A`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The diagonal of `D`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.entry(i, i).clone()).collect()
    }

    /// Rank of the original matrix: the number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Computes the Smith normal form of `A` by unimodular row and column
/// operations.
///
/// Pivoting picks the minimal-absolute-value nonzero entry of the remaining
/// submatrix, which keeps coefficient growth tolerable; correctness does not
/// depend on the choice.  Works for any shape, including empty matrices.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let lim = rows.min(cols);
    let mut t = 0;
    while t < lim {
        let Some((pi, pj)) = min_abs_entry(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Clear row and column t.  A division with remainder leaves a
        // strictly smaller entry which becomes the new pivot, so the loop
        // terminates.
        'reduce: loop {
            // Column below the pivot.
            for i in t + 1..rows {
                if d.entry(i, t).is_zero() {
                    continue;
                }
                let q = -(d.entry(i, t) / d.entry(t, t));
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d.entry(i, t).is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    continue 'reduce;
                }
            }
            // Row right of the pivot.  Column swaps here refill column t,
            // hence the restart.
            for j in t + 1..cols {
                if d.entry(t, j).is_zero() {
                    continue;
                }
                let q = -(d.entry(t, j) / d.entry(t, t));
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d.entry(t, j).is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    continue 'reduce;
                }
            }
            // Divisibility: the pivot must divide the whole remaining
            // submatrix for the invariant-factor chain to come out right.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !d.entry(i, j).mod_floor(d.entry(t, t)).is_zero() {
                        let one = BigInt::one();
                        d.add_row_multiple(t, i, &one);
                        u.add_row_multiple(t, i, &one);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        t += 1;
    }

    // Normalize pivot signs.
    for i in 0..lim {
        if d.entry(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }

    let form = SmithForm { d, u, v };
    debug_assert!(smith_form_consistent(a, &form));
    form
}

fn smith_form_consistent(a: &IntMatrix, f: &SmithForm) -> bool {
    if f.u.mul(a).mul(&f.v) != f.d {
        return false;
    }
    let diag = f.diagonal();
    for w in diag.windows(2) {
        if w[0].is_zero() && !w[1].is_zero() {
            return false;
        }
        if !w[0].is_zero() && !w[1].mod_floor(&w[0]).is_zero() {
            return false;
        }
    }
    diag.iter().all(|x| !x.is_negative())
}

fn min_abs_entry(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in from..m.rows() {
        for j in from..m.cols() {
            let e = m.entry(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            match &best {
                Some((b, _, _)) if *b <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// A lattice basis of `ker(A)` in `Z^cols`, returned as the columns of the
/// result.  The basis spans the kernel saturated in the ambient lattice:
/// every integer solution of `Ax = 0` is an integer combination of the
/// columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let f = smith_normal_form(a);
    let lim = a.rows().min(a.cols());
    let idx: Vec<usize> =
        (0..a.cols()).filter(|&j| j >= lim || f.d.entry(j, j).is_zero()).collect();
    f.v.select_columns(&idx)
}

/// Solves `A * X = B` over the integers.  Returns `None` when no integral
/// solution exists.
pub fn solve(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows(), b.rows(), "solve: row mismatch");
    let f = smith_normal_form(a);
    let c = f.u.mul(b);
    let lim = a.rows().min(a.cols());
    let mut y = IntMatrix::zeros(a.cols(), b.cols());
    for i in 0..a.rows() {
        let di = if i < lim { f.d.entry(i, i).clone() } else { BigInt::zero() };
        for j in 0..b.cols() {
            let ci = c.entry(i, j);
            if di.is_zero() {
                if !ci.is_zero() {
                    return None;
                }
            } else {
                let (q, r) = ci.div_rem(&di);
                if !r.is_zero() {
                    return None;
                }
                y.set(i, j, q);
            }
        }
    }
    Some(f.v.mul(&y))
}

/// Inverse of a unimodular matrix.  Panics if the matrix is not square with
/// determinant +-1 (callers only ever invert the transforms of a Smith
/// form).
pub fn inverse_unimodular(m: &IntMatrix) -> IntMatrix {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let inv = solve(m, &IntMatrix::identity(m.rows()))
        .expect("matrix is not unimodular: no integral inverse");
    debug_assert!(m.mul(&inv) == IntMatrix::identity(m.rows()));
    inv
}

/// Row-style Hermite normal form with zero rows dropped.
///
/// The result is the canonical basis of the row lattice: row-echelon with
/// positive pivots and the entries above each pivot reduced into
/// `[0, pivot)`.  Two integer matrices have equal row lattices if and only
/// if their Hermite forms are equal.
pub fn row_hnf(a: &IntMatrix) -> IntMatrix {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivot_row = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclidean elimination within this column.
        loop {
            let mut best: Option<(BigInt, usize)> = None;
            for i in pivot_row..rows {
                let e = m.entry(i, col);
                if e.is_zero() {
                    continue;
                }
                let a = e.abs();
                match &best {
                    Some((b, _)) if *b <= a => {}
                    _ => best = Some((a, i)),
                }
            }
            let Some((_, i)) = best else { break };
            m.swap_rows(pivot_row, i);
            let mut dirty = false;
            for i in pivot_row + 1..rows {
                if m.entry(i, col).is_zero() {
                    continue;
                }
                let q = -(m.entry(i, col) / m.entry(pivot_row, col));
                m.add_row_multiple(i, pivot_row, &q);
                dirty = dirty || !m.entry(i, col).is_zero();
            }
            if !dirty {
                break;
            }
        }
        if m.entry(pivot_row, col).is_zero() {
            continue;
        }
        if m.entry(pivot_row, col).is_negative() {
            m.negate_row(pivot_row);
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    // Reduce entries above each pivot into [0, pivot).
    for &(r, c) in &pivots {
        for i in 0..r {
            let q = -m.entry(i, c).div_floor(m.entry(r, c));
            m.add_row_multiple(i, r, &q);
        }
    }
    m.select_rows(&(0..pivot_row).collect::<Vec<_>>())
}
