//! (Block-)Toeplitz constructors and the positive-partial-transpose facts
//! about them.
//!
//! Two routes establish that positive (block-)Toeplitz matrices stay
//! positive under partial transposition. For fully Toeplitz matrices the
//! order-reversal permutation `sigma_0 : i -> n+1-i` satisfies
//! `R_sigma(C_sigma(A)) = A^T` exactly, and its blockwise version reproduces
//! the partial transpose, so the partial transpose is a permutation
//! similarity and keeps the spectrum. For block-Toeplitz matrices with
//! general blocks the permutation identity fails, but the single-index
//! Schur parameters transpose entrywise: the partial transpose is encoded by
//! the transposed roots and contractions, hence positive.

use alloc::vec::Vec;

use crate::linalg::matrix_sqrt_psd;
use crate::matrix::{Complex64, ComplexMatrix, Tolerance};
use crate::positivity::{check_p2_eigen, PositivityVerdict};
use crate::schur::{self, Contraction, RootChoice, SchurParameterSet};
use crate::{Error, Result};

/// Build an `N x N` Toeplitz matrix from symbols `a_{-(N-1)} .. a_{N-1}`
/// (length `2N - 1`, ascending index), so `A_ij = a_{i-j}`.
pub fn build_toeplitz(symbols: &[Complex64]) -> Result<ComplexMatrix> {
    if symbols.len() % 2 == 0 {
        return Err(Error::InvalidArgument(
            "need an odd number of symbols a_{-n}..a_n",
        ));
    }
    let n = symbols.len() / 2 + 1;
    let mut a = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // a_{i-j}: offset the index by n-1 into the symbol slice.
            a[(i, j)] = symbols[i + (n - 1) - j];
        }
    }
    Ok(a)
}

/// Full symbol list `a_{-(N-1)} .. a_{N-1}` for a Hermitian Toeplitz matrix,
/// mirroring the given `a_0 .. a_{N-1}` via `a_{-k} = conj(a_k)`.
pub fn hermitian_symbols(upper: &[Complex64]) -> Vec<Complex64> {
    let n = upper.len();
    let mut out = Vec::with_capacity(2 * n - 1);
    for k in (1..n).rev() {
        out.push(upper[k].conj());
    }
    out.extend_from_slice(upper);
    out
}

/// Build a block-Toeplitz matrix from square blocks `b_{-(M-1)} .. b_{M-1}`
/// of equal size, so block `(i, j)` is `b_{i-j}`.
pub fn build_block_toeplitz(blocks: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    if blocks.len() % 2 == 0 {
        return Err(Error::InvalidArgument(
            "need an odd number of block symbols b_{-m}..b_m",
        ));
    }
    let m = blocks.len() / 2 + 1;
    let b = blocks[0].require_square()?;
    for blk in blocks {
        if (blk.rows(), blk.cols()) != (b, b) {
            return Err(Error::ShapeMismatch {
                expected: (b, b),
                got: (blk.rows(), blk.cols()),
            });
        }
    }
    let mut a = ComplexMatrix::zeros(m * b, m * b);
    for i in 0..m {
        for j in 0..m {
            a.set_block(i, j, &blocks[i + (m - 1) - j]);
        }
    }
    Ok(a)
}

/// A permutation of `{0, .., n-1}`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPermutation {
    images: Vec<usize>,
}

impl IndexPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument("images must form a bijection"));
            }
            seen[i] = true;
        }
        Ok(IndexPermutation { images })
    }

    /// Order reversal `i -> n-1-i` (1-based: `i -> n+1-i`).
    pub fn reversal(n: usize) -> Self {
        IndexPermutation {
            images: (0..n).map(|i| n - 1 - i).collect(),
        }
    }

    /// Reversal within each of `count` contiguous blocks of length `block`:
    /// the disjoint product of per-block reversals.
    pub fn block_reversal(block: usize, count: usize) -> Self {
        let mut images = Vec::with_capacity(block * count);
        for m in 0..count {
            for r in 0..block {
                images.push(m * block + (block - 1 - r));
            }
        }
        IndexPermutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_involution(&self) -> bool {
        (0..self.len()).all(|i| self.images[self.images[i]] == i)
    }
}

/// Apply the row and column permutations induced by `sigma`:
/// `out_ij = A_{sigma(i), sigma(j)}`. A permutation similarity, so the
/// spectrum and characteristic polynomial are preserved.
pub fn permute_rows_cols(a: &ComplexMatrix, sigma: &IndexPermutation) -> Result<ComplexMatrix> {
    let n = a.require_square()?;
    if sigma.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: sigma.len(),
        });
    }
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = a[(sigma.image(i), sigma.image(j))];
        }
    }
    Ok(out)
}

/// Does the full-reversal permutation reproduce the transpose? True exactly
/// (bit level) for Toeplitz matrices, since both sides equal `a_{j-i}`.
pub fn transpose_identity_check(a: &ComplexMatrix) -> Result<bool> {
    let n = a.require_square()?;
    let sigma = IndexPermutation::reversal(n);
    Ok(permute_rows_cols(a, &sigma)? == a.transpose())
}

/// Does the blockwise-reversal permutation reproduce the partial transpose
/// on a `(d1*d2)`-square matrix? True exactly for fully Toeplitz input;
/// fails in general for block-Toeplitz matrices whose blocks are not
/// themselves Toeplitz.
pub fn pt_identity_check(a: &ComplexMatrix, d1: usize, d2: usize) -> Result<bool> {
    let pt = a.partial_transpose(d1, d2)?;
    let sigma = IndexPermutation::block_reversal(d2, d1);
    Ok(permute_rows_cols(a, &sigma)? == pt)
}

/// Positivity verdict of the partial transpose (the PPT test).
pub fn ppt_verdict(
    s: &ComplexMatrix,
    d1: usize,
    d2: usize,
    tol: &Tolerance,
) -> Result<PositivityVerdict> {
    check_p2_eigen(&s.partial_transpose(d1, d2)?, tol)
}

/// The `3 x 3` block-Toeplitz positive matrix written directly from a PSD
/// block `A` and two contractions: blocks `A`, `H G1 H`,
/// `H (G1^2 + D_{G1*} G2 D_{G1}) H` along the top row with `H = A^(1/2)`,
/// completed by Hermitian symmetry and the Toeplitz structure.
pub fn block_toeplitz_from_params(
    a: &ComplexMatrix,
    g1: &Contraction,
    g2: &Contraction,
    tol: &Tolerance,
) -> Result<ComplexMatrix> {
    let b = a.require_square()?;
    if g1.dim() != b || g2.dim() != b {
        return Err(Error::ShapeMismatch {
            expected: (b, b),
            got: (g1.dim(), g1.dim()),
        });
    }
    let h = matrix_sqrt_psd(a, tol)?;
    let first = h.matmul(g1.matrix()).matmul(&h);
    let inner = g1
        .matrix()
        .matmul(g1.matrix())
        .add(&g1.defect_adjoint().matmul(g2.matrix()).matmul(&g1.defect()));
    let second = h.matmul(&inner).matmul(&h);

    let mut out = ComplexMatrix::zeros(3 * b, 3 * b);
    for k in 0..3 {
        out.set_block(k, k, &h.matmul(&h).hermitized());
    }
    out.set_block(0, 1, &first);
    out.set_block(1, 2, &first);
    out.set_block(1, 0, &first.adjoint());
    out.set_block(2, 1, &first.adjoint());
    out.set_block(0, 2, &second);
    out.set_block(2, 0, &second.adjoint());
    Ok(out)
}

/// The parameter-transpose route to positivity of the partial transpose:
/// extract the block parameters of a positive block-Toeplitz matrix,
/// transpose every root and contraction entrywise, reconstruct, and compare
/// against the partial transpose.
pub fn param_transpose_check(b: &ComplexMatrix, block: usize, tol: &Tolerance) -> Result<bool> {
    let n = b.require_square()?;
    if block == 0 || n % block != 0 {
        return Err(Error::InvalidArgument(
            "matrix dimension must be a multiple of the block size",
        ));
    }
    let d = n / block;
    let params = schur::extract(b, block, RootChoice::PositiveSqrt, tol)?;
    let transposed = params.transpose_entries();
    let rebuilt = schur::reconstruct(&transposed);
    let pt = b.partial_transpose(d, block)?;
    Ok(rebuilt.max_abs_diff(&pt) <= 1e-8 * b.fro_norm().max(1.0))
}

/// Parameters of a Toeplitz positive matrix depend only on the index
/// difference; this helper exposes that single-index family for reuse.
pub fn single_index_params(
    root: &ComplexMatrix,
    symbols: &[Contraction],
    count: usize,
) -> Result<SchurParameterSet> {
    let block = root.require_square()?;
    if symbols.len() + 1 < count {
        return Err(Error::LengthMismatch {
            expected: count - 1,
            got: symbols.len(),
        });
    }
    let roots = alloc::vec![root.clone(); count];
    let mut gammas = Vec::new();
    for k in 0..count {
        for j in k + 1..count {
            gammas.push(((k, j), symbols[j - k - 1].clone()));
        }
    }
    SchurParameterSet::new(block, roots, gammas)
}
