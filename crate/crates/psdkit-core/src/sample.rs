//! Seeded random fixtures shared by the property tests, the Monte-Carlo
//! positivity check and the self-test suite. Everything is a pure function
//! of the supplied generator, so a fixed seed reproduces fixtures exactly.

use alloc::vec::Vec;

use core::f64::consts::PI;
// f64 math in no_std builds; std test builds resolve the same calls
// inherently and see this import as unused.
#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;

use crate::channel::KrausSet;
use crate::linalg::{herm_eig, matrix_sqrt_psd, operator_norm};
use crate::matrix::{Complex64, ComplexMatrix, Tolerance};
use crate::schur::{Contraction, SchurParameterSet};

/// Standard normal via Box–Muller.
pub fn standard_normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

/// Complex number with independent standard normal parts.
pub fn complex_normal(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(standard_normal(rng), standard_normal(rng))
}

/// Uniform draw from the closed disc of the given radius.
pub fn complex_in_disc(rng: &mut impl Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    let theta = 2.0 * PI * rng.gen::<f64>();
    Complex64::new(r * theta.cos(), r * theta.sin())
}

/// Uniform draw from the unit circle.
pub fn complex_on_circle(rng: &mut impl Rng) -> Complex64 {
    let theta = 2.0 * PI * rng.gen::<f64>();
    Complex64::new(theta.cos(), theta.sin())
}

/// Matrix with iid complex normal entries.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    let data: Vec<Complex64> = (0..rows * cols).map(|_| complex_normal(rng)).collect();
    ComplexMatrix::new(rows, cols, data)
}

/// Haar-ish unit vector (normalized complex normal draw).
pub fn random_unit_vector(rng: &mut impl Rng, d: usize) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..d).map(|_| complex_normal(rng)).collect();
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.iter().map(|z| z / norm).collect();
        }
    }
}

/// Random Hermitian matrix `(A + A*) / 2`.
pub fn random_hermitian(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    random_matrix(rng, d, d).hermitized()
}

/// Random PSD Gram matrix `M* M` (full rank almost surely).
pub fn random_psd(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    let m = random_matrix(rng, d, d);
    m.adjoint().matmul(&m).hermitized()
}

/// Hermitian matrix that is decisively indefinite: a Gram matrix shifted by
/// the midpoint of its spectrum.
pub fn random_shifted_indefinite(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    let g = random_psd(rng, d);
    let eig = herm_eig(&g, &Tolerance::default()).expect("gram matrix is hermitian");
    let shift = 0.5 * (eig.min() + eig.max());
    let mut out = g;
    for i in 0..d {
        out[(i, i)] -= Complex64::new(shift, 0.0);
    }
    out
}

/// Unitary matrix from modified Gram-Schmidt on a random matrix, with one
/// re-orthogonalization pass.
pub fn random_unitary(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    let m = random_matrix(rng, d, d);
    let mut cols: Vec<Vec<Complex64>> = (0..d).map(|j| m.col(j)).collect();
    for j in 0..d {
        for _ in 0..2 {
            for i in 0..j {
                let proj: Complex64 = cols[i]
                    .iter()
                    .zip(&cols[j])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                for k in 0..d {
                    let qi = cols[i][k];
                    cols[j][k] -= proj * qi;
                }
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut cols[j] {
            *z /= norm;
        }
    }
    let mut u = ComplexMatrix::zeros(d, d);
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            u[(i, j)] = z;
        }
    }
    u
}

/// Full-rank mixed density matrix: normalized Gram matrix.
pub fn random_density(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    let g = random_psd(rng, d);
    let tr = g.trace().re;
    g.scale_real(1.0 / tr)
}

/// Rank-one density matrix `v v*` for a random unit vector.
pub fn random_pure_density(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    let v = random_unit_vector(rng, d);
    let mut out = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            out[(i, j)] = v[i] * v[j].conj();
        }
    }
    out.hermitized()
}

/// Square contraction with operator norm uniform in `(0, max_norm]`.
pub fn random_contraction(rng: &mut impl Rng, dim: usize, max_norm: f64) -> Contraction {
    let m = random_matrix(rng, dim, dim);
    let sigma = operator_norm(&m);
    let target = max_norm * rng.gen::<f64>();
    Contraction::new(m.scale_real(target / sigma), &Tolerance::default())
        .expect("scaled matrix is contractive")
}

/// Scalar parameter set: positive roots in `[0.2, 1.5)` and contractions
/// drawn from the disc of radius `max_norm`.
pub fn random_scalar_params(rng: &mut impl Rng, d: usize, max_norm: f64) -> SchurParameterSet {
    let roots: Vec<f64> = (0..d).map(|_| 0.2 + 1.3 * rng.gen::<f64>()).collect();
    let mut gammas = Vec::new();
    for k in 0..d {
        for j in k + 1..d {
            gammas.push(((k, j), complex_in_disc(rng, max_norm)));
        }
    }
    SchurParameterSet::scalar(&roots, gammas).expect("valid scalar parameters")
}

/// Scalar parameter set with every contraction on the unit circle; the
/// encoded matrix has rank one.
pub fn random_circle_params(rng: &mut impl Rng, d: usize) -> SchurParameterSet {
    let roots: Vec<f64> = (0..d).map(|_| 0.2 + 1.3 * rng.gen::<f64>()).collect();
    let mut gammas = Vec::new();
    for k in 0..d {
        for j in k + 1..d {
            gammas.push(((k, j), complex_on_circle(rng)));
        }
    }
    SchurParameterSet::scalar(&roots, gammas).expect("valid circle parameters")
}

/// Block parameter set with PSD-rooted diagonals and interior contractions.
pub fn random_block_params(
    rng: &mut impl Rng,
    d: usize,
    block: usize,
    max_norm: f64,
) -> SchurParameterSet {
    let roots: Vec<ComplexMatrix> = (0..d)
        .map(|_| {
            matrix_sqrt_psd(&random_psd(rng, block), &Tolerance::default())
                .expect("gram matrix is PSD")
        })
        .collect();
    let mut gammas = Vec::new();
    for k in 0..d {
        for j in k + 1..d {
            gammas.push(((k, j), random_contraction(rng, block, max_norm)));
        }
    }
    SchurParameterSet::new(block, roots, gammas).expect("valid block parameters")
}

/// Positive scalar Toeplitz matrix generated from single-index parameters
/// `Gamma_{kj} = g_{j-k}` over a constant diagonal; the diagonal-invariance
/// is audited and regenerated on the (never observed) chance of failure.
pub fn random_toeplitz_psd(rng: &mut impl Rng, n: usize, max_norm: f64) -> ComplexMatrix {
    loop {
        let root = 0.5 + rng.gen::<f64>();
        let symbols: Vec<Complex64> = (1..n).map(|_| complex_in_disc(rng, max_norm)).collect();
        let roots = alloc::vec![root; n];
        let mut gammas = Vec::new();
        for k in 0..n {
            for j in k + 1..n {
                gammas.push(((k, j), symbols[j - k - 1]));
            }
        }
        let params =
            SchurParameterSet::scalar(&roots, gammas).expect("valid Toeplitz parameters");
        let s = crate::schur::reconstruct(&params);
        if toeplitz_deviation(&s, 1) <= 1e-10 * s.max_abs().max(1.0) {
            return s;
        }
    }
}

/// Positive block-Toeplitz matrix with a common PSD diagonal block and
/// single-index block contractions.
pub fn random_block_toeplitz_psd(
    rng: &mut impl Rng,
    blocks: usize,
    block: usize,
    max_norm: f64,
) -> ComplexMatrix {
    loop {
        let a = random_psd(rng, block);
        let root = matrix_sqrt_psd(&a, &Tolerance::default()).expect("gram matrix is PSD");
        let symbols: Vec<Contraction> = (1..blocks)
            .map(|_| random_contraction(rng, block, max_norm))
            .collect();
        let roots = alloc::vec![root; blocks];
        let mut gammas = Vec::new();
        for k in 0..blocks {
            for j in k + 1..blocks {
                gammas.push(((k, j), symbols[j - k - 1].clone()));
            }
        }
        let params =
            SchurParameterSet::new(block, roots, gammas).expect("valid block parameters");
        let s = crate::schur::reconstruct(&params);
        if toeplitz_deviation(&s, block) <= 1e-10 * s.max_abs().max(1.0) {
            return s;
        }
    }
}

/// Largest deviation from (block-)diagonal invariance: `max |A_{k,j} -
/// A_{k+1,j+1}|` over block indices.
pub fn toeplitz_deviation(s: &ComplexMatrix, block: usize) -> f64 {
    let d = s.rows() / block;
    let mut dev = 0.0_f64;
    for k in 0..d.saturating_sub(1) {
        for j in 0..d.saturating_sub(1) {
            let a = s.block(k, j, block);
            let b = s.block(k + 1, j + 1, block);
            dev = dev.max(a.max_abs_diff(&b));
        }
    }
    dev
}

/// Kraus set of `r` random operators, normalized so the channel is roughly
/// trace-scale.
pub fn random_kraus(rng: &mut impl Rng, d_in: usize, d_out: usize, r: usize) -> KrausSet {
    let ops: Vec<ComplexMatrix> = (0..r)
        .map(|_| random_matrix(rng, d_out, d_in).scale_real(1.0 / (r as f64).sqrt()))
        .collect();
    KrausSet::new(d_in, d_out, ops).expect("well-shaped Kraus operators")
}

/// Random PSD Choi matrix of the given rank (as a Gram matrix of `rank`
/// random stacked columns).
pub fn random_choi_psd(
    rng: &mut impl Rng,
    d_in: usize,
    d_out: usize,
    rank: usize,
) -> ComplexMatrix {
    let n = d_in * d_out;
    let mut s = ComplexMatrix::zeros(n, n);
    for _ in 0..rank {
        let v: Vec<Complex64> = (0..n).map(|_| complex_normal(rng)).collect();
        for i in 0..n {
            for j in 0..n {
                s[(i, j)] += v[i] * v[j].conj();
            }
        }
    }
    s.hermitized()
}

/// Six non-negative pure-dephasing rates for a four-level system, uniform in
/// `[0, scale)` in the order (12, 13, 14, 23, 24, 34).
pub fn random_dephasing4(rng: &mut impl Rng, scale: f64) -> [f64; 6] {
    [
        scale * rng.gen::<f64>(),
        scale * rng.gen::<f64>(),
        scale * rng.gen::<f64>(),
        scale * rng.gen::<f64>(),
        scale * rng.gen::<f64>(),
        scale * rng.gen::<f64>(),
    ]
}

/// Non-negative rate matrix with zero diagonal (population rates).
pub fn random_rate_matrix(rng: &mut impl Rng, n: usize, scale: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[(i, j)] = Complex64::new(scale * rng.gen::<f64>(), 0.0);
            }
        }
    }
    m
}
