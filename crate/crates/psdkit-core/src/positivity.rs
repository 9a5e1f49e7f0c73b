//! Six independent characterizations of positive semidefiniteness for a
//! Hermitian matrix, each exposed as its own oracle, plus a consensus runner
//! that cross-checks them.
//!
//! * P1 — sampled quadratic form `z* P z >= 0` (necessary-only; a negative
//!   sample is a disproof, a pass is evidence).
//! * P2 — all eigenvalues non-negative.
//! * P3 — a semidefinite Cholesky factorization exists.
//! * P4 — all `2^d - 1` principal minors non-negative (exponential; refuses
//!   dimensions above 16).
//! * P5 — all characteristic-polynomial coefficients `b_i` non-negative in
//!   the alternating-sign convention (Descartes' rule of signs).
//! * P6 — a Hermitian square root exists.

use alloc::vec::Vec;

// f64 math in no_std builds; std test builds resolve the same calls
// inherently and see this import as unused.
#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;

use crate::linalg::{charpoly_coeffs, det_lu, herm_eig, matrix_sqrt_psd, psd_cholesky};
use crate::matrix::{Complex64, ComplexMatrix, Tolerance};
use crate::sample::random_unit_vector;
use crate::{Error, Result};

/// Largest dimension for which the exhaustive principal-minor check runs.
pub const MINOR_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Sampled quadratic form (necessary-only).
    P1,
    /// Eigenvalues.
    P2,
    /// Cholesky factorization.
    P3,
    /// Principal minors.
    P4,
    /// Characteristic-polynomial coefficients.
    P5,
    /// Hermitian square root.
    P6,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::P1 => "p1",
            Method::P2 => "p2",
            Method::P3 => "p3",
            Method::P4 => "p4",
            Method::P5 => "p5",
            Method::P6 => "p6",
        }
    }
}

/// Evidence attached to a negative verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A sampled unit vector with `z* P z < 0`.
    QuadraticForm { value: f64, vector: Vec<Complex64> },
    /// The most negative eigenvalue.
    Eigenvalue(f64),
    /// 1-based leading index of the failing Cholesky pivot.
    PivotIndex { index: usize, pivot: f64 },
    /// Bit mask (over 0-based row indices) of a negative principal minor.
    Minor { mask: u32, value: f64 },
    /// 1-based index of a negative characteristic coefficient.
    Coefficient { index: usize, value: f64 },
}

/// Outcome of one positivity oracle. A witness is present exactly when the
/// verdict is negative.
#[derive(Debug, Clone, PartialEq)]
pub struct PositivityVerdict {
    pub is_psd: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl PositivityVerdict {
    fn pass(method: Method) -> Self {
        PositivityVerdict {
            is_psd: true,
            method,
            witness: None,
        }
    }

    fn fail(method: Method, witness: Witness) -> Self {
        PositivityVerdict {
            is_psd: false,
            method,
            witness: Some(witness),
        }
    }
}

/// P1: Monte-Carlo check of the defining quadratic form on random unit
/// vectors. Can only disprove positivity; a pass means no counterexample was
/// sampled.
pub fn check_p1_quadratic_form(
    p: &ComplexMatrix,
    samples: usize,
    tol: &Tolerance,
    rng: &mut impl Rng,
) -> Result<PositivityVerdict> {
    let n = p.require_hermitian(tol)?;
    let thr = tol.scaled(p.max_abs());
    for _ in 0..samples {
        let z = random_unit_vector(rng, n);
        let mut form = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                form += (z[i].conj() * p[(i, j)] * z[j]).re;
            }
        }
        if form < -thr {
            return Ok(PositivityVerdict::fail(
                Method::P1,
                Witness::QuadraticForm {
                    value: form,
                    vector: z,
                },
            ));
        }
    }
    Ok(PositivityVerdict::pass(Method::P1))
}

/// P2: smallest eigenvalue at least `-tol * max(1, |P|)`.
pub fn check_p2_eigen(p: &ComplexMatrix, tol: &Tolerance) -> Result<PositivityVerdict> {
    let eig = herm_eig(p, tol)?;
    let scale = eig.max().abs().max(eig.min().abs());
    if eig.min() >= -tol.scaled(scale) {
        Ok(PositivityVerdict::pass(Method::P2))
    } else {
        Ok(PositivityVerdict::fail(
            Method::P2,
            Witness::Eigenvalue(eig.min()),
        ))
    }
}

/// P3: existence of the semidefinite Cholesky factorization.
pub fn check_p3_cholesky(p: &ComplexMatrix, tol: &Tolerance) -> Result<PositivityVerdict> {
    match psd_cholesky(p, tol) {
        Ok(_) => Ok(PositivityVerdict::pass(Method::P3)),
        Err(Error::NotPsd { witness, index }) => Ok(PositivityVerdict::fail(
            Method::P3,
            Witness::PivotIndex {
                index: index.unwrap_or(0),
                pivot: witness,
            },
        )),
        Err(e) => Err(e),
    }
}

/// P4: every principal minor non-negative, by exhaustive enumeration of the
/// `2^d - 1` principal submatrices. Refuses `d > 16`.
pub fn check_p4_minors(p: &ComplexMatrix, tol: &Tolerance) -> Result<PositivityVerdict> {
    let n = p.require_hermitian(tol)?;
    if n > MINOR_LIMIT {
        return Err(Error::CapacityExceeded {
            dim: n,
            limit: MINOR_LIMIT,
        });
    }
    let scale = p.max_abs().max(1.0);
    for mask in 1u32..(1u32 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let det = det_lu(&p.principal_submatrix(&idx))?.re;
        let thr = tol.eps() * scale.powi(idx.len() as i32);
        if det < -thr {
            return Ok(PositivityVerdict::fail(
                Method::P4,
                Witness::Minor { mask, value: det },
            ));
        }
    }
    Ok(PositivityVerdict::pass(Method::P4))
}

/// P5: all characteristic coefficients non-negative, each against the
/// dimensionally matched threshold `tol * binom(n, i) * |P|^i`.
pub fn check_p5_charpoly(p: &ComplexMatrix, tol: &Tolerance) -> Result<PositivityVerdict> {
    p.require_hermitian(tol)?;
    let b = charpoly_coeffs(p)?;
    let n = b.len();
    let norm = p.fro_norm().max(1.0);
    let mut binom = 1.0_f64;
    for (i, &bi) in b.iter().enumerate() {
        let k = i + 1;
        binom = binom * ((n - k + 1) as f64) / (k as f64);
        let thr = tol.eps() * binom * norm.powi(k as i32);
        if bi < -thr {
            return Ok(PositivityVerdict::fail(
                Method::P5,
                Witness::Coefficient { index: k, value: bi },
            ));
        }
    }
    Ok(PositivityVerdict::pass(Method::P5))
}

/// P6: existence of a Hermitian square root with a verified residual.
pub fn check_p6_sqrt(p: &ComplexMatrix, tol: &Tolerance) -> Result<PositivityVerdict> {
    match matrix_sqrt_psd(p, tol) {
        Ok(r) => {
            let residual = r.matmul(&r).max_abs_diff(p);
            if residual > 1e-8 * p.fro_norm().max(1.0) {
                return Err(Error::ConvergenceFailure { residual });
            }
            Ok(PositivityVerdict::pass(Method::P6))
        }
        Err(Error::NotPsd { witness, .. }) => Ok(PositivityVerdict::fail(
            Method::P6,
            Witness::Eigenvalue(witness),
        )),
        Err(e) => Err(e),
    }
}

/// Verdicts of P2–P6 on the same matrix. The methods are provably
/// equivalent, so a split vote is an internal-consistency failure, flagged
/// rather than papered over.
#[derive(Debug, Clone)]
pub struct ConsensusReport {
    pub verdicts: Vec<PositivityVerdict>,
    pub consistent: bool,
}

impl ConsensusReport {
    /// The common verdict, if the oracles agreed.
    pub fn is_psd(&self) -> Option<bool> {
        if self.consistent {
            Some(self.verdicts[0].is_psd)
        } else {
            None
        }
    }
}

/// Run P2–P6 (P4 only within its capacity limit) and report every verdict.
pub fn consensus(p: &ComplexMatrix, tol: &Tolerance) -> Result<ConsensusReport> {
    let n = p.require_hermitian(tol)?;
    let mut verdicts = alloc::vec![
        check_p2_eigen(p, tol)?,
        check_p3_cholesky(p, tol)?,
    ];
    if n <= MINOR_LIMIT {
        verdicts.push(check_p4_minors(p, tol)?);
    }
    verdicts.push(check_p5_charpoly(p, tol)?);
    verdicts.push(check_p6_sqrt(p, tol)?);
    let consistent = verdicts.iter().all(|v| v.is_psd == verdicts[0].is_psd);
    Ok(ConsensusReport {
        verdicts,
        consistent,
    })
}
