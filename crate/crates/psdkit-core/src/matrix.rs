//! Dense complex matrices and the index-structure operations shared by every
//! other module: column stacking (`vec`/`unvec`), partial traces and the
//! partial transpose.
//!
//! Storage is row-major `Complex64`. Composite indices follow the row-major
//! convention `(k, p) -> k * d2 + p` (0-based), so a `(d1*d2) x (d1*d2)`
//! matrix is viewed as a `d1 x d1` grid of `d2 x d2` blocks.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

// f64 math in no_std builds; std test builds resolve the same calls
// inherently and see this import as unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

pub use num_complex::Complex64;

/// Which tensor factor an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// The outer (block) index of dimension `d1`.
    First,
    /// The inner index of dimension `d2`.
    Second,
}

/// Relative tolerance used by validation gates and rank decisions.
///
/// The checks scale `eps` by `max(1, norm)` of the data they guard, so the
/// default is meaningful both for unit-scale fixtures and for larger inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-10;

    pub fn new(eps: f64) -> Result<Self> {
        if !(eps >= 0.0) {
            return Err(Error::InvalidArgument("tolerance must be non-negative"));
        }
        Ok(Tolerance { eps })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// `eps * max(1, scale)` — the absolute threshold for data of the given
    /// magnitude.
    pub fn scaled(&self, scale: f64) -> f64 {
        self.eps * scale.max(1.0)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: Self::DEFAULT_EPS,
        }
    }
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major data. Panics if the length does not match.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must be rows * cols");
        ComplexMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        ComplexMatrix {
            rows,
            cols,
            data: entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    /// Build from nested rows of `(re, im)` pairs; panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        ComplexMatrix { rows: r, cols: c, data }
    }

    pub fn diag(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in entries.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn diag_real(entries: &[f64]) -> Self {
        let v: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diag(&v)
    }

    /// Matrix unit `E_{k,j}` of size `n x n` (0-based indices).
    pub fn matrix_unit(n: usize, k: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(k, j)] = Complex64::new(1.0, 0.0);
        m
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

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose `M*`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn fro_norm(&self) -> f64 {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).norm()))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols) && self.max_abs_diff(other) <= tol
    }

    /// `max |M - M*|` over all entries; 0 for exactly Hermitian input.
    pub fn hermitian_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermitian_deviation() <= tol
    }

    /// Returns an error unless the matrix is square and Hermitian within
    /// `tol.scaled(max_abs)`.
    pub fn require_hermitian(&self, tol: &Tolerance) -> Result<usize> {
        let n = self.require_square()?;
        let dev = self.hermitian_deviation();
        if dev > tol.scaled(self.max_abs()) {
            return Err(Error::NotHermitian { deviation: dev });
        }
        Ok(n)
    }

    /// `(M + M*) / 2` — the Hermitian part, exactly Hermitian entrywise.
    pub fn hermitized(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = (self[(i, j)] + self[(j, i)].conj()).scale(0.5);
            }
        }
        out
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal direct sum `self (+) other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        out.set_submatrix(0, 0, self);
        out.set_submatrix(self.rows, self.cols, other);
        out
    }

    /// Copy `m` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_submatrix(&mut self, r0: usize, c0: usize, m: &Self) {
        assert!(r0 + m.rows <= self.rows && c0 + m.cols <= self.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                self[(r0 + i, c0 + j)] = m[(i, j)];
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)];
            }
        }
        out
    }

    /// The `b x b` block at block position `(k, j)`.
    pub fn block(&self, k: usize, j: usize, b: usize) -> Self {
        self.submatrix(k * b, j * b, b, b)
    }

    pub fn set_block(&mut self, k: usize, j: usize, m: &Self) {
        assert!(m.is_square());
        self.set_submatrix(k * m.rows, j * m.cols, m);
    }

    /// Principal submatrix selected by 0-based `indices`.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        assert!(self.is_square());
        let k = indices.len();
        let mut out = Self::zeros(k, k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out[(a, b)] = self[(i, j)];
            }
        }
        out
    }

    /// Column stacking: a `d x e` matrix becomes a `d*e x 1` column with
    /// column `k` occupying entries `k*d .. (k+1)*d`.
    pub fn vec(&self) -> Self {
        let mut out = Self::zeros(self.rows * self.cols, 1);
        for j in 0..self.cols {
            for i in 0..self.rows {
                out[(j * self.rows + i, 0)] = self[(i, j)];
            }
        }
        out
    }

    /// Inverse of [`ComplexMatrix::vec`]: rebuild a `d x e` matrix from a
    /// stacked column of length `d * e`.
    pub fn unvec(v: &[Complex64], d: usize, e: usize) -> Result<Self> {
        if v.len() != d * e {
            return Err(Error::LengthMismatch {
                expected: d * e,
                got: v.len(),
            });
        }
        let mut out = Self::zeros(d, e);
        for j in 0..e {
            for i in 0..d {
                out[(i, j)] = v[j * d + i];
            }
        }
        Ok(out)
    }

    fn require_composite(&self, d1: usize, d2: usize) -> Result<()> {
        let n = self.require_square()?;
        if n != d1 * d2 {
            return Err(Error::ShapeMismatch {
                expected: (d1 * d2, d1 * d2),
                got: (self.rows, self.cols),
            });
        }
        Ok(())
    }

    /// Partial trace of a `(d1*d2) x (d1*d2)` matrix over the chosen factor.
    ///
    /// Tracing out the first factor leaves the `d2 x d2` sum of the diagonal
    /// blocks; tracing out the second leaves the `d1 x d1` matrix of
    /// blockwise traces.
    pub fn partial_trace(&self, d1: usize, d2: usize, which: Factor) -> Result<Self> {
        self.require_composite(d1, d2)?;
        match which {
            Factor::First => {
                let mut out = Self::zeros(d2, d2);
                for k in 0..d1 {
                    for p in 0..d2 {
                        for q in 0..d2 {
                            out[(p, q)] += self[(k * d2 + p, k * d2 + q)];
                        }
                    }
                }
                Ok(out)
            }
            Factor::Second => {
                let mut out = Self::zeros(d1, d1);
                for k in 0..d1 {
                    for j in 0..d1 {
                        let mut t = Complex64::new(0.0, 0.0);
                        for p in 0..d2 {
                            t += self[(k * d2 + p, j * d2 + p)];
                        }
                        out[(k, j)] = t;
                    }
                }
                Ok(out)
            }
        }
    }

    /// Partial transpose: entrywise transpose within each `d2 x d2` block.
    /// Involutive; exact (no arithmetic).
    pub fn partial_transpose(&self, d1: usize, d2: usize) -> Result<Self> {
        self.require_composite(d1, d2)?;
        let mut out = Self::zeros(self.rows, self.cols);
        for k in 0..d1 {
            for j in 0..d1 {
                for p in 0..d2 {
                    for q in 0..d2 {
                        out[(k * d2 + p, j * d2 + q)] = self[(k * d2 + q, j * d2 + p)];
                    }
                }
            }
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn vec_stacks_columns() {
        // [[a, b], [c, d]] -> (a, c, b, d)^T
        let m = ComplexMatrix::new(
            2,
            2,
            vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)],
        );
        let v = m.vec();
        assert_eq!(v.rows(), 4);
        assert_eq!(v[(0, 0)], c(1.0, 0.0));
        assert_eq!(v[(1, 0)], c(3.0, 0.0));
        assert_eq!(v[(2, 0)], c(2.0, 0.0));
        assert_eq!(v[(3, 0)], c(4.0, 0.0));
    }

    #[test]
    fn vec_of_singleton() {
        let m = ComplexMatrix::new(1, 1, vec![c(5.0, -1.0)]);
        let v = m.vec();
        assert_eq!((v.rows(), v.cols()), (1, 1));
        assert_eq!(v[(0, 0)], c(5.0, -1.0));
    }

    #[test]
    fn unvec_checks_length() {
        let err = ComplexMatrix::unvec(&[c(1.0, 0.0); 3], 2, 2).unwrap_err();
        assert_eq!(err, Error::LengthMismatch { expected: 4, got: 3 });
    }

    #[test]
    fn partial_trace_of_identity_kron() {
        // Tr_first(I_{d1} (x) B) = d1 * B
        let b = ComplexMatrix::new(
            2,
            2,
            vec![c(1.0, 0.0), c(2.0, 1.0), c(2.0, -1.0), c(-1.0, 0.0)],
        );
        let m = ComplexMatrix::identity(3).kron(&b);
        let t = m.partial_trace(3, 2, Factor::First).unwrap();
        assert!(t.approx_eq(&b.scale_real(3.0), 1e-15));
    }

    #[test]
    fn partial_transpose_fixes_diagonal_and_is_involutive() {
        let d = ComplexMatrix::diag_real(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(d.partial_transpose(2, 3).unwrap(), d);
    }

    #[test]
    fn partial_ops_reject_bad_shapes() {
        let m = ComplexMatrix::zeros(5, 5);
        assert!(matches!(
            m.partial_trace(2, 2, Factor::Second),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(matches!(
            m.partial_transpose(2, 2),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn hermitized_is_exactly_hermitian() {
        let m = ComplexMatrix::new(
            2,
            2,
            vec![c(1.0, 0.5), c(2.0, 1.0), c(0.0, -3.0), c(4.0, -0.25)],
        );
        assert_eq!(m.hermitized().hermitian_deviation(), 0.0);
    }

    #[test]
    fn empty_products_behave() {
        let a = ComplexMatrix::zeros(2, 0);
        let b = ComplexMatrix::zeros(0, 2);
        let p = a.matmul(&b);
        assert_eq!((p.rows(), p.cols()), (2, 2));
        assert_eq!(p.max_abs(), 0.0);
    }

    #[test]
    fn tolerance_rejects_negative_eps() {
        assert!(Tolerance::new(-1.0).is_err());
        assert_eq!(Tolerance::default().eps(), 1e-10);
    }
}
