//! Dense matrices over an exact coefficient ring.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{ExactError, LaurentQQ, Rat};

/// Exact coefficient ring: rationals or Laurent polynomials. The
/// `inv_unit` hook inverts units (all nonzero rationals; monomials in
/// the Laurent ring).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + AddAssign
    + SubAssign
{
    fn inv_unit(&self) -> Option<Self>;
}

impl Scalar for Rat {
    fn inv_unit(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for LaurentQQ {
    fn inv_unit(&self) -> Option<Self> {
        self.inv_monomial()
    }
}

/// Dense row-major matrix over an exact ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<R: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Scalar> Matrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.clone() * c.clone();
        }
        out
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.rows, "vector/matrix size mismatch");
        let mut out = vec![R::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let e = &self[(i, j)];
                if !e.is_zero() {
                    out[j] += vi.clone() * e.clone();
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<R: Scalar> std::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.entries[i * self.cols + j]
    }
}

impl<R: Scalar> std::ops::IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.entries[i * self.cols + j]
    }
}

impl<R: Scalar> Add for &Matrix<R> {
    type Output = Matrix<R>;
    fn add(self, rhs: Self) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a += b.clone();
        }
        out
    }
}

impl<R: Scalar> Sub for &Matrix<R> {
    type Output = Matrix<R>;
    fn sub(self, rhs: Self) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a -= b.clone();
        }
        out
    }
}

impl<R: Scalar> Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: Self) -> Matrix<R> {
        assert_eq!(self.cols, rhs.rows, "matrix product size mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl Matrix<Rat> {
    /// Rank over the rationals by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            m.entries.swap_chunks(p, rank, m.cols);
            let inv = m[(rank, col)].recip();
            for j in col..m.cols {
                let v = m[(rank, j)].clone() * &inv;
                m[(rank, j)] = v;
            }
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let c = m[(r, col)].clone();
                    for j in col..m.cols {
                        let v = m[(rank, j)].clone() * &c;
                        m[(r, j)] -= v;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Exact inverse; errors when singular.
    pub fn inverse(&self) -> Result<Matrix<Rat>, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::<Rat>::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else {
                return Err(ExactError::Singular);
            };
            m.entries.swap_chunks(p, col, n);
            inv.entries.swap_chunks(p, col, n);
            let d = m[(col, col)].recip();
            for j in 0..n {
                let v = m[(col, j)].clone() * &d;
                m[(col, j)] = v;
                let v = inv[(col, j)].clone() * &d;
                inv[(col, j)] = v;
            }
            for r in 0..n {
                if r != col && !m[(r, col)].is_zero() {
                    let c = m[(r, col)].clone();
                    for j in 0..n {
                        let v = m[(col, j)].clone() * &c;
                        m[(r, j)] -= v;
                        let v = inv[(col, j)].clone() * &c;
                        inv[(r, j)] -= v;
                    }
                }
            }
        }
        Ok(inv)
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl<T> SwapChunks for Vec<T> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (left, right) = self.split_at_mut(hi * width);
        left[lo * width..(lo + 1) * width].swap_with_slice(&mut right[..width]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    fn mq(rows: usize, cols: usize, vals: &[i64]) -> Matrix<Rat> {
        Matrix::from_fn(rows, cols, |i, j| rat(vals[i * cols + j]))
    }

    #[test]
    fn rank_basics() {
        assert_eq!(Matrix::<Rat>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Rat>::zero(2, 5).rank(), 0);
        assert_eq!(mq(2, 2, &[1, 2, 2, 4]).rank(), 1);
    }

    #[test]
    fn rank_transpose_agrees() {
        let m = mq(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn inverse_diagonal() {
        let m = mq(2, 2, &[2, 0, 0, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv[(0, 0)], ratio(1, 2));
        assert_eq!(inv[(1, 1)], ratio(1, 4));
        assert_eq!(&m * &inv, Matrix::identity(2));
    }

    #[test]
    fn inverse_identity_and_singular() {
        let id = Matrix::<Rat>::identity(4);
        assert_eq!(id.inverse().unwrap(), id);
        assert_eq!(mq(2, 2, &[1, 1, 1, 1]).inverse(), Err(ExactError::Singular));
    }

    #[test]
    fn inverse_verified_by_multiplication() {
        let m = mq(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 2]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert_eq!(&inv * &m, Matrix::identity(3));
    }
}
