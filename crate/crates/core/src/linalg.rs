//! Dense matrices over a [`Scalar`] with exact elimination.
//!
//! Pivots are always units. Over `F_p` that is every nonzero entry; over the
//! dual numbers it means the constant part is nonzero, so the pivot columns
//! chosen are exactly those of the ε = 0 reduction. A column whose remaining
//! entries are nonzero but all non-units cannot be eliminated without
//! changing the rank of the reduction, and is reported as
//! [`Error::NonGenericPivot`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Dual, Fp, Prime, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    prime: Prime,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(prime: Prime, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, prime, data: vec![S::zero(prime); rows * cols] }
    }

    pub fn identity(prime: Prime, n: usize) -> Self {
        let mut m = Self::zeros(prime, n, n);
        for i in 0..n {
            m[(i, i)] = S::one(prime);
        }
        m
    }

    /// Builds a matrix from rows of length `cols`.
    pub fn from_rows(prime: Prime, cols: usize, rows: Vec<Vec<S>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, prime, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: &[S]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.prime, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.prime, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out[(i, j)] + a * rhs[(k, j)];
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect();
        Matrix { data, ..*self }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, prime: self.prime, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Result<Vec<usize>> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)].is_unit()) else {
                if (r..self.rows).any(|i| !self[(i, c)].is_zero()) {
                    return Err(Error::NonGenericPivot);
                }
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self[(r, c)].inv()?;
            for j in c..self.cols {
                let v = self[(r, j)] * inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self[(i, j)] - factor * self[(r, j)];
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok(pivots)
    }

    /// Row-reduces and drops the zero rows.
    pub fn echelon_basis(&self) -> Result<Self> {
        let mut m = self.clone();
        let pivots = m.rref()?;
        m.data.truncate(pivots.len() * m.cols);
        m.rows = pivots.len();
        Ok(m)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut m = self.clone();
        Ok(m.rref()?.len())
    }

    /// Basis of the right kernel `{v : A v = 0}`, one vector per row, in
    /// reduced echelon form.
    pub fn kernel(&self) -> Result<Self> {
        let mut m = self.clone();
        let pivots = m.rref()?;
        let p = self.prime;
        let mut basis = Self::zeros(p, 0, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![S::zero(p); self.cols];
            v[free] = S::one(p);
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[(i, free)];
            }
            basis.push_row(&v);
        }
        basis.echelon_basis()
    }

    /// Inverse of a square matrix whose reduction mod ε is invertible.
    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(self.prime, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = S::one(self.prime);
        }
        let pivots = aug.rref()?;
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Self::zeros(self.prime, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Ok(inv)
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Result<S> {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = S::one(self.prime);
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m[(i, c)].is_unit()) else {
                if (c..n).any(|i| !m[(i, c)].is_zero()) {
                    return Err(Error::NonGenericPivot);
                }
                return Ok(S::zero(self.prime));
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = -det;
            }
            let piv = m[(c, c)];
            det *= piv;
            let inv = piv.inv()?;
            for i in c + 1..n {
                let f = m[(i, c)] * inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m[(i, j)] - f * m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        Ok(det)
    }
}

impl Matrix<Dual> {
    pub fn constant_part(&self) -> Matrix<Fp> {
        self.map(|x| x.a)
    }

    pub fn eps_part(&self) -> Matrix<Fp> {
        self.map(|x| x.b)
    }
}

impl<S> core::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> core::ops::IndexMut<(usize, usize)> for Matrix<S> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Rank computed column by column: each column is reduced against the
/// column-space basis found so far and kept if anything survives. Shares no
/// code with [`Matrix::rref`], so the two serve as cross-checks.
pub fn rank_by_column_greedy(m: &Matrix<Fp>) -> usize {
    // basis vectors live in row space of length m.nrows(), each with a
    // distinguished pivot index where it equals 1
    let mut basis: Vec<(usize, Vec<Fp>)> = Vec::new();
    for j in 0..m.ncols() {
        let mut v: Vec<Fp> = (0..m.nrows()).map(|i| m[(i, j)]).collect();
        for (piv, b) in &basis {
            let f = v[*piv];
            if !f.is_zero() {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x -= f * y;
                }
            }
        }
        if let Some(piv) = v.iter().rposition(|x| !x.is_zero()) {
            let inv = v[piv].inv().expect("nonzero");
            for x in v.iter_mut() {
                *x *= inv;
            }
            // keep earlier basis vectors reduced at the new pivot
            for (_, b) in basis.iter_mut() {
                let f = b[piv];
                if !f.is_zero() {
                    for (x, &y) in b.iter_mut().zip(&v) {
                        *x -= f * y;
                    }
                }
            }
            basis.push((piv, v));
        }
    }
    basis.len()
}
