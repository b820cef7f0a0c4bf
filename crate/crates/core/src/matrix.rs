//! Dense matrices over a generic scalar.
//!
//! Everything here is exact when the scalar is exact. Row-major storage,
//! `rows x cols`, zero-dimensional matrices are first-class citizens since
//! degenerate divides produce them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::LinalgError;
use crate::scalar::{FieldScalar, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Matrix { rows: nr, cols: nc, data: rows.into_iter().flatten().collect() }
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

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut t = T::zero();
        for i in 0..self.rows {
            t = t + self[(i, i)].clone();
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    acc = acc + self[(r, c)].clone() * v[c].clone();
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Stack blocks: `blocks[i][j]` becomes the (i,j) block. Row heights and
    /// column widths must be consistent along each band.
    pub fn from_blocks(blocks: &[Vec<&Matrix<T>>]) -> Self {
        let band_rows: Vec<usize> = blocks.iter().map(|band| band[0].rows).collect();
        let band_cols: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for (band, &h) in blocks.iter().zip(&band_rows) {
            assert_eq!(band.len(), band_cols.len());
            for (b, &w) in band.iter().zip(&band_cols) {
                assert_eq!(b.rows, h);
                assert_eq!(b.cols, w);
            }
        }
        let total_rows: usize = band_rows.iter().sum();
        let total_cols: usize = band_cols.iter().sum();
        let mut m = Self::zeros(total_rows, total_cols);
        let mut r0 = 0;
        for (bi, band) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, block) in band.iter().enumerate() {
                for r in 0..band_rows[bi] {
                    for c in 0..band_cols[bj] {
                        m[(r0 + r, c0 + c)] = block[(r, c)].clone();
                    }
                }
                c0 += band_cols[bj];
            }
            r0 += band_rows[bi];
        }
        m
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        Self::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            if self[(r, r)] != T::one() {
                return false;
            }
            for c in 0..r {
                if !self[(r, c)].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact inverse of a unit upper triangular matrix by back substitution.
    /// Stays in the ring: no division is performed.
    pub fn invert_unit_upper_triangular(&self) -> Result<Self, LinalgError> {
        if !self.is_upper_unitriangular() {
            return Err(LinalgError::NotUnimodular);
        }
        let n = self.rows;
        let mut inv = Self::identity(n);
        // column j of the inverse, rows solved bottom-up
        for j in 0..n {
            for i in (0..n).rev() {
                let mut acc = if i == j { T::one() } else { T::zero() };
                for k in i + 1..n {
                    acc = acc - self[(i, k)].clone() * inv[(k, j)].clone();
                }
                inv[(i, j)] = acc;
            }
        }
        Ok(inv)
    }

    /// Exact inverse of a unit lower triangular matrix.
    pub fn invert_unit_lower_triangular(&self) -> Result<Self, LinalgError> {
        Ok(self.transpose().invert_unit_upper_triangular()?.transpose())
    }
}

impl<T: FieldScalar> Matrix<T> {
    /// Reduced row echelon form; returns the reduced matrix and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // largest-magnitude pivot keeps f64 stable; harmless for exact scalars
            let mut best: Option<usize> = None;
            for r in row..m.rows {
                if !m[(r, col)].is_zero()
                    && best.is_none_or(|b| m[(r, col)].abs() > m[(b, col)].abs())
                {
                    best = Some(r);
                }
            }
            let Some(p) = best else { continue };
            m.swap_rows(row, p);
            let inv = m[(row, col)].clone();
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)].clone() / inv.clone();
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in col..m.cols {
                        let v = m[(r, c)].clone() - f.clone() * m[(row, c)].clone();
                        m[(r, c)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one column vector per basis element.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = T::zero() - r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Solve `self * x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (r, pivots) = {
            let (m, p) = aug.rref();
            aug = m;
            (aug.clone(), p)
        };
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Solve for several right-hand sides given as columns of `b`.
    pub fn solve_matrix(&self, b: &Matrix<T>) -> Option<Matrix<T>> {
        assert_eq!(self.rows, b.rows);
        let mut cols = Vec::with_capacity(b.cols);
        for c in 0..b.cols {
            cols.push(self.solve(&b.col(c))?);
        }
        let sol = Matrix::from_fn(self.cols, b.cols, |r, c| cols[c][r].clone());
        Some(sol)
    }

    pub fn determinant(&self) -> Result<T, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NonSquare);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let mut best: Option<usize> = None;
            for r in col..n {
                if !m[(r, col)].is_zero()
                    && best.is_none_or(|b| m[(r, col)].abs() > m[(b, col)].abs())
                {
                    best = Some(r);
                }
            }
            let Some(p) = best else { return Ok(T::zero()) };
            if p != col {
                m.swap_rows(col, p);
                det = T::zero() - det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                if !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone() / pivot.clone();
                    for c in col..n {
                        let v = m[(r, c)].clone() - f.clone() * m[(col, c)].clone();
                        m[(r, c)] = v;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NonSquare);
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                T::one()
            } else {
                T::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(LinalgError::Singular);
        }
        Ok(red.submatrix(0, n, n, n))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}x{}", self.rows, self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() + rhs[(r, c)].clone())
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() - rhs[(r, c)].clone())
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| T::zero() - x.clone())
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out[(r, c)].clone() + a.clone() * rhs[(k, c)].clone();
                    out[(r, c)] = v;
                }
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format!("{}", self[(r, c)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bq(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| bi(v)).collect()).collect())
    }

    #[test]
    fn product_and_transpose() {
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        let b = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, int_matrix(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), int_matrix(&[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn unit_triangular_inverse_is_exact() {
        let s = int_matrix(&[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]]);
        let inv = s.invert_unit_upper_triangular().unwrap();
        assert!((&s * &inv).is_identity());
        assert!((&inv * &s).is_identity());
    }

    #[test]
    fn non_unitriangular_rejected() {
        let s = int_matrix(&[&[1, 1], &[1, 1]]);
        assert!(matches!(s.invert_unit_upper_triangular(), Err(LinalgError::NotUnimodular)));
    }

    #[test]
    fn zero_dimensional_matrices() {
        let e = Matrix::<BigInt>::zeros(0, 0);
        assert!(e.is_identity());
        assert!((&e * &e).is_identity());
        assert!(e.invert_unit_upper_triangular().unwrap().is_identity());
    }

    #[test]
    fn rational_inverse_round_trips() {
        let m = Matrix::from_rows(vec![
            vec![bq(1), bq(2), bq(0)],
            vec![bq(0), bq(1), bq(3)],
            vec![bq(4), bq(0), bq(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(m.determinant().unwrap(), bq(25));
    }

    #[test]
    fn singular_matrix_reported() {
        let m = Matrix::from_rows(vec![vec![bq(1), bq(2)], vec![bq(2), bq(4)]]);
        assert!(matches!(m.inverse(), Err(LinalgError::Singular)));
        assert_eq!(m.determinant().unwrap(), bq(0));
        assert_eq!(m.rank(), 1);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn block_assembly() {
        let id = Matrix::<BigInt>::identity(1);
        let a = int_matrix(&[&[5]]);
        let z = Matrix::<BigInt>::zeros(1, 1);
        let m = Matrix::from_blocks(&[vec![&id, &a], vec![&z, &id]]);
        assert_eq!(m, int_matrix(&[&[1, 5], &[0, 1]]));
    }
}
