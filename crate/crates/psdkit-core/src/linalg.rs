//! Dense kernels on top of [`ComplexMatrix`]: Hermitian eigendecomposition,
//! semidefinite Cholesky, Faddeev–LeVerrier characteristic coefficients,
//! Hermitian square roots, an eigenvalue-based SVD and the Moore–Penrose
//! pseudoinverse, and a pivoted-LU determinant.
//!
//! Everything targets the desk-scale envelope (dimension <= 64, residuals
//! around `1e-9 * norm`); there are no iterative large-scale paths.

use alloc::vec::Vec;

// f64 math in no_std builds; std test builds resolve the same calls
// inherently and see this import as unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::{Complex64, ComplexMatrix, Tolerance};
use crate::{Error, Result};

const MAX_JACOBI_SWEEPS: usize = 64;

/// Eigendecomposition of a Hermitian matrix: `values` descending,
/// `vectors` unitary with `H = V diag(values) V*`.
#[derive(Debug, Clone)]
pub struct HermEig {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermEig {
    pub fn min(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// `V diag(f(w)) V*`, hermitized.
    pub fn assemble(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        let mut scaled = v.clone();
        for j in 0..n {
            let w = Complex64::new(f(self.values[j]), 0.0);
            for i in 0..n {
                scaled[(i, j)] *= w;
            }
        }
        scaled.matmul(&v.adjoint()).hermitized()
    }
}

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// The input must be square and Hermitian within `tol.scaled(max_abs)`; it is
/// hermitized before iteration so the rotations see an exactly Hermitian
/// working copy.
pub fn herm_eig(h: &ComplexMatrix, tol: &Tolerance) -> Result<HermEig> {
    let n = h.require_hermitian(tol)?;
    let mut a = h.hermitized();
    let mut v = ComplexMatrix::identity(n);

    let scale = a.max_abs();
    if n <= 1 || scale == 0.0 {
        let values = (0..n).map(|i| a[(i, i)].re).collect();
        return Ok(HermEig { values, vectors: v });
    }
    // Rotations below this size cannot move the spectrum at double precision.
    let stop = f64::EPSILON * scale * 1e-2;

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0_f64;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off = off.max(a[(p, q)].norm());
            }
        }
        if off <= stop {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let abs_apq = apq.norm();
                if abs_apq <= stop {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let phase = apq / abs_apq;

                // tan(2*theta) = 2|a_pq| / (a_pp - a_qq), stable small root.
                let tau = (app - aqq) / (2.0 * abs_apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let s_phase = phase.scale(s);

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    let new_kp = akp.scale(c) + s_phase.conj() * akq;
                    let new_kq = akq.scale(c) - s_phase * akp;
                    a[(k, p)] = new_kp;
                    a[(p, k)] = new_kp.conj();
                    a[(k, q)] = new_kq;
                    a[(q, k)] = new_kq.conj();
                }
                a[(p, p)] = Complex64::new(app + t * abs_apq, 0.0);
                a[(q, q)] = Complex64::new(aqq - t * abs_apq, 0.0);
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp.scale(c) + s_phase.conj() * vkq;
                    v[(k, q)] = vkq.scale(c) - s_phase * vkp;
                }
            }
        }
    }
    if !converged {
        let mut off = 0.0_f64;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off = off.max(a[(p, q)].norm());
            }
        }
        // One more chance: accept if the leftover is within the contract.
        if off > 1e-11 * scale.max(1.0) {
            return Err(Error::ConvergenceFailure { residual: off });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .re
            .partial_cmp(&a[(i, i)].re)
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (new_j, &old_j) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, new_j)] = v[(i, old_j)];
        }
    }
    Ok(HermEig { values, vectors })
}

/// Semidefinite Cholesky: a lower-triangular `T` with `S = T T*`.
///
/// Pivots within `tol.scaled(max_abs)` of zero are treated as zero and their
/// column is zeroed; positivity then forces the rest of that column to
/// vanish, which is checked so that rank-deficient non-positive inputs (for
/// instance a zero diagonal over a non-zero row) are rejected rather than
/// silently mis-factored. A pivot below the negative threshold reports the
/// 1-based leading index at which positivity fails.
pub fn psd_cholesky(s: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    let n = s.require_hermitian(tol)?;
    let scale = s.max_abs();
    let thr = tol.scaled(scale);
    // Residuals in a zeroed column may be as large as sqrt(pivot * diagonal).
    let col_thr = (thr * scale.max(1.0)).sqrt().max(thr);

    let mut t = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut pivot = s[(j, j)].re;
        for k in 0..j {
            pivot -= t[(j, k)].norm_sqr();
        }
        if pivot > thr {
            let l = pivot.sqrt();
            t[(j, j)] = Complex64::new(l, 0.0);
            for i in j + 1..n {
                let mut x = s[(i, j)];
                for k in 0..j {
                    x -= t[(i, k)] * t[(j, k)].conj();
                }
                t[(i, j)] = x / l;
            }
        } else if pivot >= -thr {
            // Semidefinite pivot: the column must already be exhausted.
            for i in j + 1..n {
                let mut x = s[(i, j)];
                for k in 0..j {
                    x -= t[(i, k)] * t[(j, k)].conj();
                }
                if x.norm() > col_thr {
                    return Err(Error::NotPsd {
                        witness: pivot,
                        index: Some(j + 1),
                    });
                }
            }
        } else {
            return Err(Error::NotPsd {
                witness: pivot,
                index: Some(j + 1),
            });
        }
    }
    Ok(t)
}

/// Characteristic-polynomial coefficients of a Hermitian matrix in the sign
/// convention `p(t) = t^n + sum_i (-1)^i b_i t^(n-i)`, so `b_i` is the sum of
/// the `i x i` principal minors. Computed by the Faddeev–LeVerrier recursion.
pub fn charpoly_coeffs(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let n = h.require_hermitian(&Tolerance::new(1e-8).expect("const"))?;
    let mut b = Vec::with_capacity(n);
    let mut mk = ComplexMatrix::identity(n);
    for k in 1..=n {
        let hm = h.matmul(&mk);
        let a_k = -hm.trace() / (k as f64);
        // b_k = (-1)^k a_k; both are real for Hermitian input.
        b.push(if k % 2 == 0 { a_k.re } else { -a_k.re });
        mk = hm;
        for i in 0..n {
            mk[(i, i)] += a_k;
        }
    }
    Ok(b)
}

/// Hermitian PSD square root: `R` with `R^2 = S`.
///
/// Eigenvalues in `[-tol.scaled(..), 0)` are clamped to zero; anything below
/// that is a positivity error carrying the offending eigenvalue.
pub fn matrix_sqrt_psd(s: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    let eig = herm_eig(s, tol)?;
    let thr = tol.scaled(eig.max().abs().max(eig.min().abs()));
    if eig.min() < -thr {
        return Err(Error::NotPsd {
            witness: eig.min(),
            index: None,
        });
    }
    Ok(eig.assemble(|w| w.max(0.0).sqrt()))
}

/// Thin singular value decomposition `M = U diag(sigma) V*` computed from the
/// eigendecomposition of `M* M`.
///
/// `sigma` is descending with `min(rows, cols)` entries; columns of `u` whose
/// singular value is zero are left as zero columns. Accuracy for singular
/// values near `sqrt(eps) * sigma_max` is limited by the Gram squaring, which
/// is why rank cutoffs in this crate sit well above that level.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub v: ComplexMatrix,
}

pub fn svd(m: &ComplexMatrix) -> Result<Svd> {
    let gram = m.adjoint().matmul(m).hermitized();
    let eig = herm_eig(&gram, &Tolerance::default())?;
    let r = m.rows().min(m.cols());
    let sigma: Vec<f64> = eig
        .values
        .iter()
        .take(r)
        .map(|&w| w.max(0.0).sqrt())
        .collect();
    let mut u = ComplexMatrix::zeros(m.rows(), r);
    for (j, &s) in sigma.iter().enumerate() {
        if s > 0.0 {
            for i in 0..m.rows() {
                let mut x = Complex64::new(0.0, 0.0);
                for k in 0..m.cols() {
                    x += m[(i, k)] * eig.vectors[(k, j)];
                }
                u[(i, j)] = x / s;
            }
        }
    }
    Ok(Svd {
        u,
        sigma,
        v: eig.vectors,
    })
}

/// Largest singular value.
pub fn operator_norm(m: &ComplexMatrix) -> f64 {
    if m.rows() == 0 || m.cols() == 0 {
        return 0.0;
    }
    svd(m).map_or(0.0, |s| s.sigma.first().copied().unwrap_or(0.0))
}

/// Moore–Penrose pseudoinverse. Singular values at or below
/// `tol.eps() * sigma_max` are treated as zero.
pub fn pinv(m: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    let Svd { u, sigma, v } = svd(m)?;
    let smax = sigma.first().copied().unwrap_or(0.0);
    let cutoff = tol.eps() * smax;
    let mut out = ComplexMatrix::zeros(m.cols(), m.rows());
    for (k, &s) in sigma.iter().enumerate() {
        if s <= cutoff || s == 0.0 {
            continue;
        }
        let inv = 1.0 / s;
        for i in 0..m.cols() {
            let vk = v[(i, k)].scale(inv);
            for j in 0..m.rows() {
                out[(i, j)] += vk * u[(j, k)].conj();
            }
        }
    }
    Ok(out)
}

/// Determinant by partially pivoted LU elimination.
pub fn det_lu(m: &ComplexMatrix) -> Result<Complex64> {
    let n = m.require_square()?;
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let mut piv = k;
        let mut best = a[(k, k)].norm();
        for i in k + 1..n {
            let mag = a[(i, k)].norm();
            if mag > best {
                best = mag;
                piv = i;
            }
        }
        if best == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if piv != k {
            for j in 0..n {
                let tmp = a[(k, j)];
                a[(k, j)] = a[(piv, j)];
                a[(piv, j)] = tmp;
            }
            det = -det;
        }
        let pivot = a[(k, k)];
        det *= pivot;
        for i in k + 1..n {
            let f = a[(i, k)] / pivot;
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in k..n {
                let akj = a[(k, j)];
                a[(i, j)] -= f * akj;
            }
        }
    }
    Ok(det)
}
