//! Choi matrices and Kraus representations of linear maps on matrices.
//!
//! A map `Phi` acting on `d_in x d_in` matrices with `d_out x d_out` values
//! is stored through its Choi matrix `S = [Phi(E_kj)]`, laid out on the
//! input-(x)-output composite space with the input as the block index. Under
//! that convention the trace-preserving check is the partial trace over the
//! second (output) factor and the unital check over the first (input)
//! factor; both agree with the Kraus-sum criteria `sum V_i* V_i = I` and
//! `sum V_i V_i* = I`.
//!
//! Kraus operators come from the columns of any square root `T` with
//! `S = T T*`, un-stacked column by column; the square-root freedom is
//! exactly the non-uniqueness of Kraus representations. The lower-triangular
//! Cholesky root keeps the leading operators sparse.

use alloc::vec::Vec;

// f64 math in no_std builds; std test builds resolve the same calls
// inherently and see this import as unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::herm_eig;
use crate::matrix::{Complex64, ComplexMatrix, Factor, Tolerance};
use crate::positivity::{check_p2_eigen, PositivityVerdict};
use crate::{Error, Result};

/// A finite family of Kraus operators, each `d_out x d_in`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    d_in: usize,
    d_out: usize,
    ops: Vec<ComplexMatrix>,
}

impl KrausSet {
    /// Identically zero operators are dropped; they contribute nothing to
    /// the represented map.
    pub fn new(d_in: usize, d_out: usize, ops: Vec<ComplexMatrix>) -> Result<Self> {
        if d_in == 0 || d_out == 0 {
            return Err(Error::InvalidArgument("channel dimensions must be positive"));
        }
        for v in &ops {
            if (v.rows(), v.cols()) != (d_out, d_in) {
                return Err(Error::ShapeMismatch {
                    expected: (d_out, d_in),
                    got: (v.rows(), v.cols()),
                });
            }
        }
        let ops = ops.into_iter().filter(|v| v.max_abs() > 0.0).collect();
        Ok(KrausSet { d_in, d_out, ops })
    }

    pub fn d_in(&self) -> usize {
        self.d_in
    }

    pub fn d_out(&self) -> usize {
        self.d_out
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// `sum V_i* V_i` — equals the identity iff the channel is
    /// trace-preserving.
    pub fn tp_sum(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.d_in, self.d_in);
        for v in &self.ops {
            acc = acc.add(&v.adjoint().matmul(v));
        }
        acc
    }

    /// `sum V_i V_i*` — equals the identity iff the channel is unital.
    pub fn unital_sum(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.d_out, self.d_out);
        for v in &self.ops {
            acc = acc.add(&v.matmul(&v.adjoint()));
        }
        acc
    }
}

/// Choi matrix of a map, `(d_in * d_out)` square and Hermitian, with block
/// `(k, j)` equal to `Phi(E_kj)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    d_in: usize,
    d_out: usize,
    m: ComplexMatrix,
}

impl ChoiMatrix {
    pub fn new(d_in: usize, d_out: usize, m: ComplexMatrix, tol: &Tolerance) -> Result<Self> {
        let n = m.require_hermitian(tol)?;
        if n != d_in * d_out {
            return Err(Error::ShapeMismatch {
                expected: (d_in * d_out, d_in * d_out),
                got: (m.rows(), m.cols()),
            });
        }
        Ok(ChoiMatrix { d_in, d_out, m })
    }

    pub fn d_in(&self) -> usize {
        self.d_in
    }

    pub fn d_out(&self) -> usize {
        self.d_out
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    /// `Phi(E_kj)`: the `(k, j)` block of size `d_out`.
    pub fn action_on_unit(&self, k: usize, j: usize) -> ComplexMatrix {
        self.m.block(k, j, self.d_out)
    }

    /// Apply the represented map to an arbitrary input by linearity over the
    /// matrix units.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if (rho.rows(), rho.cols()) != (self.d_in, self.d_in) {
            return Err(Error::ShapeMismatch {
                expected: (self.d_in, self.d_in),
                got: (rho.rows(), rho.cols()),
            });
        }
        let mut out = ComplexMatrix::zeros(self.d_out, self.d_out);
        for k in 0..self.d_in {
            for j in 0..self.d_in {
                let w = rho[(k, j)];
                if w == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for p in 0..self.d_out {
                    for q in 0..self.d_out {
                        out[(p, q)] += w * self.m[(k * self.d_out + p, j * self.d_out + q)];
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Assemble the Choi matrix block by block: block `(k, j)` is
/// `sum_i V_i E_kj V_i*`.
pub fn choi_from_kraus(kraus: &KrausSet) -> ChoiMatrix {
    let (d_in, d_out) = (kraus.d_in, kraus.d_out);
    let mut m = ComplexMatrix::zeros(d_in * d_out, d_in * d_out);
    for v in &kraus.ops {
        for k in 0..d_in {
            for j in 0..d_in {
                // V E_kj V* = (column k of V) (column j of V)*.
                for p in 0..d_out {
                    for q in 0..d_out {
                        m[(k * d_out + p, j * d_out + q)] += v[(p, k)] * v[(q, j)].conj();
                    }
                }
            }
        }
    }
    ChoiMatrix {
        d_in,
        d_out,
        m: m.hermitized(),
    }
}

/// The same Choi matrix as a sum of stacked-column outer products
/// `sum_i vec(V_i) vec(V_i)*`; must agree with [`choi_from_kraus`] to
/// rounding.
pub fn choi_from_kraus_outer(kraus: &KrausSet) -> ChoiMatrix {
    let (d_in, d_out) = (kraus.d_in, kraus.d_out);
    let n = d_in * d_out;
    let mut m = ComplexMatrix::zeros(n, n);
    for v in &kraus.ops {
        let col = v.vec();
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] += col[(i, 0)] * col[(j, 0)].conj();
            }
        }
    }
    ChoiMatrix {
        d_in,
        d_out,
        m: m.hermitized(),
    }
}

/// Which square root of the Choi matrix produces the Kraus family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChoiRoot {
    /// Lower-triangular Cholesky factor (sparse leading operators).
    Cholesky,
    /// Spectral root `V sqrt(Lambda)` from the eigendecomposition.
    Spectral,
}

/// Recover a Kraus family from a PSD Choi matrix: un-stack the columns of a
/// square root, dropping columns of norm at most `tol * |S|^(1/2)`.
pub fn kraus_from_choi(s: &ChoiMatrix, root: ChoiRoot, tol: &Tolerance) -> Result<KrausSet> {
    let t = match root {
        ChoiRoot::Cholesky => crate::linalg::psd_cholesky(&s.m, tol)?,
        ChoiRoot::Spectral => {
            let eig = herm_eig(&s.m, tol)?;
            let scale = eig.max().abs().max(eig.min().abs());
            if eig.min() < -tol.scaled(scale) {
                return Err(Error::NotPsd {
                    witness: eig.min(),
                    index: None,
                });
            }
            let n = s.m.rows();
            // Eigenvalues at rounding level are exactly rank deficiency;
            // zero them so their columns drop out like Cholesky's do.
            let floor = 32.0 * n as f64 * f64::EPSILON * scale;
            let mut t = eig.vectors.clone();
            for j in 0..n {
                let wj = eig.values[j];
                let w = Complex64::new(if wj > floor { wj.sqrt() } else { 0.0 }, 0.0);
                for i in 0..n {
                    t[(i, j)] *= w;
                }
            }
            t
        }
    };
    let drop_thr = tol.eps() * s.m.fro_norm().sqrt();
    let mut ops = Vec::new();
    for i in 0..t.cols() {
        let col = t.col(i);
        let norm: f64 = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > drop_thr {
            ops.push(ComplexMatrix::unvec(&col, s.d_out, s.d_in)?);
        }
    }
    KrausSet::new(s.d_in, s.d_out, ops)
}

/// `Phi(rho) = sum_i V_i rho V_i*`.
pub fn apply_kraus(kraus: &KrausSet, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    if (rho.rows(), rho.cols()) != (kraus.d_in, kraus.d_in) {
        return Err(Error::ShapeMismatch {
            expected: (kraus.d_in, kraus.d_in),
            got: (rho.rows(), rho.cols()),
        });
    }
    let mut out = ComplexMatrix::zeros(kraus.d_out, kraus.d_out);
    for v in &kraus.ops {
        out = out.add(&v.matmul(rho).matmul(&v.adjoint()));
    }
    Ok(out)
}

/// Complete positivity: positivity of the Choi matrix (eigenvalue oracle).
pub fn is_cp(s: &ChoiMatrix, tol: &Tolerance) -> Result<PositivityVerdict> {
    check_p2_eigen(&s.m, tol)
}

/// Trace preservation, checked without any Kraus representation: the partial
/// trace over the output factor must be the identity on the input space.
pub fn is_tp(s: &ChoiMatrix, tol: &Tolerance) -> Result<bool> {
    let reduced = s.m.partial_trace(s.d_in, s.d_out, Factor::Second)?;
    let dev = reduced.max_abs_diff(&ComplexMatrix::identity(s.d_in));
    Ok(dev <= tol.scaled(s.m.max_abs()))
}

/// Unitality: the partial trace over the input factor must be the identity
/// on the output space.
pub fn is_unital(s: &ChoiMatrix, tol: &Tolerance) -> Result<bool> {
    let reduced = s.m.partial_trace(s.d_in, s.d_out, Factor::First)?;
    let dev = reduced.max_abs_diff(&ComplexMatrix::identity(s.d_out));
    Ok(dev <= tol.scaled(s.m.max_abs()))
}
