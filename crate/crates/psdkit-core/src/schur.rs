//! Schur-parameter engine: every positive semidefinite matrix, viewed as a
//! `d x d` grid of square blocks, is encoded bijectively by diagonal square
//! roots `L_kk` (with `S_kk = L_kk L_kk*`) together with a family of
//! contractions `Gamma_{kj}` for `k < j`. Off-diagonal entries are rebuilt
//! through a lattice of Julia-operator unitaries:
//!
//! ```text
//! S_kj = L_kk* ( R_{k,j-1} U_{k+1,j-1} C_{k+1,j}
//!              + D_{G*_{k,k+1}} .. D_{G*_{k,j-1}} G_kj D_{G_{k+1,j}} .. D_{G_{j-1,j}} ) L_jj
//! ```
//!
//! Extraction inverts this recursively, one superdiagonal at a time, since
//! each relation involves exactly one new contraction. The module also
//! carries the corollaries of the parametrization: the product formula for
//! the determinant, the rank-one criterion, the inheritance property of
//! leading submatrices, and a Cholesky factorization.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

// f64 math in no_std builds; std test builds resolve the same calls
// inherently and see this import as unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{self, herm_eig, operator_norm, pinv, psd_cholesky};
use crate::matrix::{Complex64, ComplexMatrix, Tolerance};
use crate::{Error, Result};

/// Relative singular-value cutoff for the pseudo-inverse solves used during
/// extraction. It must sit above the noise floor of Gram-based singular
/// values (~sqrt(machine eps)) so that defect operators which are zero up to
/// rounding are treated as exactly singular.
const EXTRACT_CUTOFF: f64 = 1e-7;

/// How far outside the closed unit ball a solved contraction may land before
/// clamping is considered a failure rather than rounding.
const CLAMP_SLACK: f64 = 1e-6;

/// Relative residual allowed when a singular defect product makes the solve
/// a projection; anything larger signals numerically inconsistent data.
const RESIDUAL_SLACK: f64 = 1e-6;

/// A square matrix with operator norm at most 1.
///
/// Construction clamps norms that exceed 1 by at most the clamp slack (or
/// the caller's tolerance if looser) back onto the ball and rejects anything
/// beyond that.
#[derive(Debug, Clone, PartialEq)]
pub struct Contraction {
    m: ComplexMatrix,
}

impl Contraction {
    pub fn new(m: ComplexMatrix, tol: &Tolerance) -> Result<Self> {
        m.require_square()?;
        let norm = operator_norm(&m);
        let slack = CLAMP_SLACK.max(tol.eps());
        if norm > 1.0 + slack {
            return Err(Error::ContractionNorm { norm });
        }
        let m = if norm > 1.0 {
            m.scale_real(1.0 / norm)
        } else {
            m
        };
        Ok(Contraction { m })
    }

    pub fn scalar(z: Complex64) -> Result<Self> {
        Self::new(
            ComplexMatrix::new(1, 1, alloc::vec![z]),
            &Tolerance::default(),
        )
    }

    pub fn zero(dim: usize) -> Self {
        Contraction {
            m: ComplexMatrix::zeros(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    /// Largest singular value; at most 1 by construction.
    pub fn norm(&self) -> f64 {
        operator_norm(&self.m)
    }

    /// Defect operator `D_T = (I - T*T)^(1/2)`, Hermitian PSD.
    pub fn defect(&self) -> ComplexMatrix {
        let g = self.m.adjoint().matmul(&self.m);
        psd_sqrt_clamped(&ComplexMatrix::identity(self.dim()).sub(&g))
    }

    /// Defect of the adjoint, `D_{T*} = (I - T T*)^(1/2)`.
    pub fn defect_adjoint(&self) -> ComplexMatrix {
        let g = self.m.matmul(&self.m.adjoint());
        psd_sqrt_clamped(&ComplexMatrix::identity(self.dim()).sub(&g))
    }

    /// Entrywise transpose; the operator norm is unchanged.
    pub fn transpose(&self) -> Self {
        Contraction {
            m: self.m.transpose(),
        }
    }
}

/// Hermitian square root with all eigenvalues clamped at zero. Inputs here
/// are `I - T*T` of contractions, so negative eigenvalues are pure rounding.
fn psd_sqrt_clamped(a: &ComplexMatrix) -> ComplexMatrix {
    let eig = herm_eig(a, &Tolerance::new(1e-6).expect("const"))
        .expect("defect eigendecomposition of a Hermitian matrix");
    eig.assemble(|w| w.max(0.0).sqrt())
}

/// Julia operator of a contraction: the unitary dilation
/// `[[T, D_{T*}], [D_T, -T*]]`.
pub fn julia(t: &Contraction) -> ComplexMatrix {
    let b = t.dim();
    let mut u = ComplexMatrix::zeros(2 * b, 2 * b);
    u.set_submatrix(0, 0, t.matrix());
    u.set_submatrix(0, b, &t.defect_adjoint());
    u.set_submatrix(b, 0, &t.defect());
    u.set_submatrix(b, b, &t.matrix().adjoint().scale_real(-1.0));
    u
}

/// Which square root of the diagonal blocks parametrizes the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootChoice {
    /// The Hermitian PSD square root (default; unique, self-adjoint).
    PositiveSqrt,
    /// The lower-triangular Cholesky factor.
    Cholesky,
}

/// Diagonal square roots plus the strictly-upper contraction family.
///
/// Zero diagonal roots force the contractions in their row and column to
/// zero (a vanishing diagonal entry of a positive matrix kills its whole row
/// and column), which keeps the parametrization one-to-one.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurParameterSet {
    block: usize,
    roots: Vec<ComplexMatrix>,
    gammas: BTreeMap<(usize, usize), Contraction>,
}

impl SchurParameterSet {
    pub fn new(
        block: usize,
        roots: Vec<ComplexMatrix>,
        gammas: impl IntoIterator<Item = ((usize, usize), Contraction)>,
    ) -> Result<Self> {
        if block == 0 {
            return Err(Error::InvalidArgument("block dimension must be positive"));
        }
        let d = roots.len();
        for r in &roots {
            if (r.rows(), r.cols()) != (block, block) {
                return Err(Error::ShapeMismatch {
                    expected: (block, block),
                    got: (r.rows(), r.cols()),
                });
            }
        }
        let mut map = BTreeMap::new();
        for ((k, j), g) in gammas {
            if k >= j || j >= d {
                return Err(Error::InvalidArgument(
                    "contraction indices must satisfy k < j < d",
                ));
            }
            if g.dim() != block {
                return Err(Error::ShapeMismatch {
                    expected: (block, block),
                    got: (g.dim(), g.dim()),
                });
            }
            if (roots[k].max_abs() == 0.0 || roots[j].max_abs() == 0.0)
                && g.matrix().max_abs() != 0.0
            {
                return Err(Error::InvalidArgument(
                    "contractions attached to a zero diagonal root must be zero",
                ));
            }
            map.insert((k, j), g);
        }
        Ok(SchurParameterSet {
            block,
            roots,
            gammas: map,
        })
    }

    /// Scalar-entry convenience constructor: non-negative diagonal roots and
    /// complex contraction values indexed by `(k, j)`, `k < j`.
    pub fn scalar(
        roots: &[f64],
        gammas: impl IntoIterator<Item = ((usize, usize), Complex64)>,
    ) -> Result<Self> {
        let root_mats: Vec<ComplexMatrix> = roots
            .iter()
            .map(|&x| ComplexMatrix::from_real(1, 1, &[x]))
            .collect();
        let mut gs = Vec::new();
        for ((k, j), z) in gammas {
            gs.push(((k, j), Contraction::scalar(z)?));
        }
        Self::new(1, root_mats, gs)
    }

    pub fn block_dim(&self) -> usize {
        self.block
    }

    /// Number of diagonal blocks `d`.
    pub fn block_count(&self) -> usize {
        self.roots.len()
    }

    /// Dimension of the represented matrix, `d * block`.
    pub fn dim(&self) -> usize {
        self.roots.len() * self.block
    }

    pub fn root(&self, k: usize) -> &ComplexMatrix {
        &self.roots[k]
    }

    pub fn roots(&self) -> &[ComplexMatrix] {
        &self.roots
    }

    /// The contraction at `(k, j)`; absent entries are zero.
    pub fn gamma(&self, k: usize, j: usize) -> Contraction {
        self.gammas
            .get(&(k, j))
            .cloned()
            .unwrap_or_else(|| Contraction::zero(self.block))
    }

    /// Iterate over the stored (possibly zero) contractions.
    pub fn gammas(&self) -> impl Iterator<Item = (&(usize, usize), &Contraction)> {
        self.gammas.iter()
    }

    /// Real parameter count of the encoding: `d * b^2` from the roots plus
    /// `2 b^2` per strictly-upper slot gives `(d b)^2` — exactly the real
    /// dimension of the matrices being parametrized (scalar case: `d^2`).
    pub fn real_parameter_count(&self) -> usize {
        let d = self.block_count();
        let b = self.block;
        d * b * b + d * (d - 1) / 2 * 2 * b * b
    }

    /// Entrywise transpose of every root and contraction. For a positive
    /// block-Toeplitz matrix this is the parameter set of its partial
    /// transpose.
    pub fn transpose_entries(&self) -> Self {
        SchurParameterSet {
            block: self.block,
            roots: self.roots.iter().map(ComplexMatrix::transpose).collect(),
            gammas: self
                .gammas
                .iter()
                .map(|(&k, g)| (k, g.transpose()))
                .collect(),
        }
    }
}

/// Row contraction `R_{k,j} = [G_{k,k+1}, D_{G*_{k,k+1}} G_{k,k+2}, ...]`,
/// a `b x (j-k)b` block row. Requires `k < j`.
pub fn row_contraction(params: &SchurParameterSet, k: usize, j: usize) -> ComplexMatrix {
    assert!(k < j && j < params.block_count());
    let b = params.block_dim();
    let mut out = ComplexMatrix::zeros(b, (j - k) * b);
    let mut prefix = ComplexMatrix::identity(b);
    for m in 1..=(j - k) {
        let g = params.gamma(k, k + m);
        out.set_submatrix(0, (m - 1) * b, &prefix.matmul(g.matrix()));
        if m < j - k {
            prefix = prefix.matmul(&g.defect_adjoint());
        }
    }
    out
}

/// Column contraction `C_{k,j} = [G_{j-1,j}; G_{j-2,j} D_{G_{j-1,j}}; ...]`,
/// a `(j-k)b x b` block column. Requires `k < j`.
pub fn column_contraction(params: &SchurParameterSet, k: usize, j: usize) -> ComplexMatrix {
    assert!(k < j && j < params.block_count());
    let b = params.block_dim();
    let mut out = ComplexMatrix::zeros((j - k) * b, b);
    let mut suffix = ComplexMatrix::identity(b);
    for m in 1..=(j - k) {
        let g = params.gamma(j - m, j);
        out.set_submatrix((m - 1) * b, 0, &g.matrix().matmul(&suffix));
        if m < j - k {
            suffix = g.defect().matmul(&suffix);
        }
    }
    out
}

/// Left-multiply rows `row0 .. row0 + u2.rows()` of `acc` by `u2` in place.
fn left_mul_embedded(acc: &mut ComplexMatrix, row0: usize, u2: &ComplexMatrix) {
    let s = u2.rows();
    let mut old = Vec::with_capacity(s);
    for col in 0..acc.cols() {
        old.clear();
        for i in 0..s {
            old.push(acc[(row0 + i, col)]);
        }
        for i in 0..s {
            let mut x = Complex64::new(0.0, 0.0);
            for (kk, &o) in old.iter().enumerate() {
                x += u2[(i, kk)] * o;
            }
            acc[(row0 + i, col)] = x;
        }
    }
}

/// The lattice unitary `U_{k,j}`, a `(j-k+1)b` square matrix, defined by
/// `U_{k,k} = I` and
/// `U_{k,j} = E_1(U(G_{k,k+1})) .. E_{j-k}(U(G_{k,j})) (U_{k+1,j} (+) I)`,
/// where `E_l` embeds a Julia operator at block positions `(l, l+1)`.
pub fn unitary_chain(params: &SchurParameterSet, k: usize, j: usize) -> ComplexMatrix {
    assert!(k <= j && j < params.block_count());
    let b = params.block_dim();
    let mut u = ComplexMatrix::identity(b);
    for a in (k..j).rev() {
        let m = j - a;
        let mut acc = u.direct_sum(&ComplexMatrix::identity(b));
        for l in (1..=m).rev() {
            let jul = julia(&params.gamma(a, a + l));
            left_mul_embedded(&mut acc, (l - 1) * b, &jul);
        }
        u = acc;
    }
    u
}

/// Products of row/column defects that frame `Gamma_kj` in the entry
/// relation: `D_{G*_{k,k+1}} .. D_{G*_{k,j-1}}` and
/// `D_{G_{k+1,j}} .. D_{G_{j-1,j}}`.
fn defect_frames(
    params: &SchurParameterSet,
    k: usize,
    j: usize,
) -> (ComplexMatrix, ComplexMatrix) {
    let b = params.block_dim();
    let mut dl = ComplexMatrix::identity(b);
    let mut dr = ComplexMatrix::identity(b);
    for m in k + 1..j {
        dl = dl.matmul(&params.gamma(k, m).defect_adjoint());
        dr = dr.matmul(&params.gamma(m, j).defect());
    }
    (dl, dr)
}

/// The unit-root entry expression `X_kj` with
/// `S_kj = L_kk* X_kj L_jj`: the lattice path sum plus the framed new
/// contraction.
fn inner_entry(params: &SchurParameterSet, k: usize, j: usize) -> ComplexMatrix {
    let (dl, dr) = defect_frames(params, k, j);
    let term = dl.matmul(params.gamma(k, j).matrix()).matmul(&dr);
    if j == k + 1 {
        return term;
    }
    let r = row_contraction(params, k, j - 1);
    let u = unitary_chain(params, k + 1, j - 1);
    let c = column_contraction(params, k + 1, j);
    r.matmul(&u).matmul(&c).add(&term)
}

/// Rebuild the Hermitian matrix encoded by a parameter set. For contractive
/// parameters and arbitrary square roots the result is positive
/// semidefinite.
pub fn reconstruct(params: &SchurParameterSet) -> ComplexMatrix {
    let d = params.block_count();
    let b = params.block_dim();
    let mut s = ComplexMatrix::zeros(d * b, d * b);
    for k in 0..d {
        let l = params.root(k);
        s.set_block(k, k, &l.matmul(&l.adjoint()).hermitized());
    }
    for span in 1..d {
        for k in 0..d - span {
            let j = k + span;
            let x = inner_entry(params, k, j);
            let skj = params.root(k).adjoint().matmul(&x).matmul(params.root(j));
            s.set_block(j, k, &skj.adjoint());
            s.set_block(k, j, &skj);
        }
    }
    s
}

/// Extract the parameter set of a positive semidefinite matrix viewed as
/// `d x d` blocks of size `block`.
///
/// Positivity is checked first. Contractions are recovered one superdiagonal
/// at a time by pseudo-inverse solves against the diagonal roots and defect
/// frames; when a frame is singular the undetermined component is set to
/// zero and the solve residual is verified, so inconsistent (non-positive)
/// data surfaces as an error instead of a bogus parameter.
pub fn extract(
    s: &ComplexMatrix,
    block: usize,
    root_choice: RootChoice,
    tol: &Tolerance,
) -> Result<SchurParameterSet> {
    let n = s.require_hermitian(tol)?;
    if block == 0 || n % block != 0 {
        return Err(Error::InvalidArgument(
            "matrix dimension must be a multiple of the block size",
        ));
    }
    let d = n / block;
    let norm = s.fro_norm();
    let gate = tol.scaled(norm);

    let eig = herm_eig(s, tol)?;
    if eig.min() < -gate {
        return Err(Error::NotPsd {
            witness: eig.min(),
            index: None,
        });
    }

    // Diagonal blocks may dip slightly below zero relative to the full gate.
    let block_tol = Tolerance::new(gate.max(tol.eps()))?;
    let mut roots = Vec::with_capacity(d);
    let mut dead = alloc::vec![false; d];
    for k in 0..d {
        let skk = s.block(k, k, block);
        if skk.max_abs() <= gate {
            roots.push(ComplexMatrix::zeros(block, block));
            dead[k] = true;
        } else {
            roots.push(match root_choice {
                RootChoice::PositiveSqrt => linalg::matrix_sqrt_psd(&skk, &block_tol)?,
                RootChoice::Cholesky => psd_cholesky(&skk, &block_tol)?,
            });
        }
    }

    let ptol = Tolerance::new(EXTRACT_CUTOFF)?;
    let resid_tol = RESIDUAL_SLACK * norm.max(1.0);
    let mut params = SchurParameterSet {
        block,
        roots,
        gammas: BTreeMap::new(),
    };
    for span in 1..d {
        for k in 0..d - span {
            let j = k + span;
            if dead[k] || dead[j] {
                params.gammas.insert((k, j), Contraction::zero(block));
                continue;
            }
            let lk_pinv = pinv(&params.roots[k].adjoint(), &ptol)?;
            let lj_pinv = pinv(&params.roots[j], &ptol)?;
            let x = lk_pinv.matmul(&s.block(k, j, block)).matmul(&lj_pinv);
            let rhs = if span == 1 {
                x
            } else {
                let r = row_contraction(&params, k, j - 1);
                let u = unitary_chain(&params, k + 1, j - 1);
                let c = column_contraction(&params, k + 1, j);
                x.sub(&r.matmul(&u).matmul(&c))
            };
            let (dl, dr) = defect_frames(&params, k, j);
            let mut g = pinv(&dl, &ptol)?.matmul(&rhs).matmul(&pinv(&dr, &ptol)?);
            let sigma = operator_norm(&g);
            if sigma > 1.0 {
                if sigma > 1.0 + CLAMP_SLACK {
                    return Err(Error::ContractionNorm { norm: sigma });
                }
                g = g.scale_real(1.0 / sigma);
            }
            let residual = dl.matmul(&g).matmul(&dr).max_abs_diff(&rhs);
            if residual > resid_tol {
                return Err(Error::InconsistentResidual { residual });
            }
            params.gammas.insert((k, j), Contraction { m: g });
        }
    }
    Ok(params)
}

/// Determinant straight from the parameters:
/// `det S = prod_k det(L_kk L_kk*) * prod_{k<j} det(I - G_kj* G_kj)`.
pub fn determinant_formula(params: &SchurParameterSet) -> f64 {
    let b = params.block_dim();
    let mut det = 1.0_f64;
    for l in params.roots() {
        det *= linalg::det_lu(l).expect("square root block").norm_sqr();
    }
    for (_, g) in params.gammas() {
        let a = ComplexMatrix::identity(b).sub(&g.matrix().adjoint().matmul(g.matrix()));
        det *= linalg::det_lu(&a).expect("square defect block").re;
    }
    det
}

/// Rank-one criterion for scalar parameter sets: the encoded matrix has rank
/// one exactly when, for every pair of non-vanishing diagonal entries, the
/// effective lattice entry has modulus 1 (for nearest neighbours this is
/// `|G_{k,k+1}| = 1`), and at least one diagonal entry is non-zero.
pub fn is_rank_one(params: &SchurParameterSet, tol: &Tolerance) -> Result<bool> {
    if params.block_dim() != 1 {
        return Err(Error::InvalidArgument(
            "the rank-one criterion applies to scalar parameter sets",
        ));
    }
    let d = params.block_count();
    let maxr = params
        .roots()
        .iter()
        .fold(0.0_f64, |m, l| m.max(l.max_abs()));
    if maxr == 0.0 {
        return Ok(false);
    }
    let live: Vec<bool> = params
        .roots()
        .iter()
        .map(|l| l.max_abs() > tol.scaled(maxr))
        .collect();
    if !live.iter().any(|&x| x) {
        return Ok(false);
    }
    // Defect square roots carry sqrt(eps)-level noise at the boundary.
    let slack = tol.eps().max(1e-7);
    for k in 0..d {
        for j in k + 1..d {
            if live[k] && live[j] {
                let x = inner_entry(params, k, j);
                if (x[(0, 0)].norm() - 1.0).abs() > slack {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Parameters of the leading `m x m` block submatrix: the first `m` roots
/// and the contractions they frame (the inheritance property).
pub fn truncate_leading(params: &SchurParameterSet, m: usize) -> Result<SchurParameterSet> {
    if m == 0 || m > params.block_count() {
        return Err(Error::InvalidArgument(
            "truncation size must satisfy 1 <= m <= d",
        ));
    }
    Ok(SchurParameterSet {
        block: params.block_dim(),
        roots: params.roots()[..m].to_vec(),
        gammas: params
            .gammas
            .iter()
            .filter(|((_, j), _)| *j < m)
            .map(|(&k, g)| (k, g.clone()))
            .collect(),
    })
}

/// Lower-triangular `T` with `reconstruct(params) = T T*`, obtained by
/// factoring the reconstruction.
pub fn cholesky_via_params(
    params: &SchurParameterSet,
    tol: &Tolerance,
) -> Result<ComplexMatrix> {
    psd_cholesky(&reconstruct(params), tol)
}
