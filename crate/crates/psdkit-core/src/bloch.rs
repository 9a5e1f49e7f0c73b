//! Generalized Gell-Mann bases and Bloch coordinates.
//!
//! A trace-one Hermitian `rho` in dimension `d` is written as
//! `rho = (1/d)(I + sum_i beta_i lambda_i)` over an orthogonal traceless
//! Hermitian basis with `Tr(lambda_i lambda_j) = 2 delta_ij`; for `d = 2`
//! the basis is exactly the Pauli matrices. The coordinates `beta` determine
//! Hermiticity and trace but not positivity, which must be checked
//! separately.
//!
//! The anticommutators of the basis close over the identity and the basis
//! itself, `{lambda_k, lambda_l} = (4/d) delta_kl I + 2 sum_i d_kli
//! lambda_i`, with a fully symmetric tensor `d_kli` (the factor 2 fixes the
//! usual d=3 values such as `d_118 = 1/sqrt(3)` and is what makes the
//! pure-state identities below hold exactly; see the tests for the
//! brute-force calibration of this normalization). The induced product
//! `(x cup y)_i = sum_jk d_ijk x_j y_k` governs squares: a state is pure
//! exactly when `<beta, beta> = (d^2 - d)/2` and `(d - 2) beta = beta cup
//! beta`, and every square `rho = H^2` of a Hermitian
//! `H = (1/d)(kappa I + sum beta0_i lambda_i)` with an admissible `beta0` is
//! automatically a density matrix.

use alloc::vec;
use alloc::vec::Vec;

// f64 math in no_std builds; std test builds resolve the same calls
// inherently and see this import as unused.
#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::{Complex64, ComplexMatrix, Tolerance};
use crate::positivity::check_p2_eigen;
use crate::{Error, Result};

/// Orthogonal traceless Hermitian basis of `d x d` matrices, ordered:
/// symmetric pair matrices by `(k, j)` lexicographic, then antisymmetric in
/// the same pair order, then the diagonal ladder.
#[derive(Debug, Clone)]
pub struct GellMannBasis {
    d: usize,
    lambdas: Vec<ComplexMatrix>,
}

impl GellMannBasis {
    pub fn dim(&self) -> usize {
        self.d
    }

    /// Number of basis elements, `d^2 - 1`.
    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    pub fn lambda(&self, i: usize) -> &ComplexMatrix {
        &self.lambdas[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &ComplexMatrix> {
        self.lambdas.iter()
    }
}

/// Construct the generalized Gell-Mann basis in dimension `d >= 2`.
pub fn gellmann(d: usize) -> Result<GellMannBasis> {
    if d < 2 {
        return Err(Error::InvalidArgument(
            "the basis requires dimension at least 2",
        ));
    }
    let mut lambdas = Vec::with_capacity(d * d - 1);
    // Symmetric: E_kj + E_jk.
    for k in 0..d {
        for j in k + 1..d {
            let mut m = ComplexMatrix::zeros(d, d);
            m[(k, j)] = Complex64::new(1.0, 0.0);
            m[(j, k)] = Complex64::new(1.0, 0.0);
            lambdas.push(m);
        }
    }
    // Antisymmetric: (E_kj - E_jk) / i.
    for k in 0..d {
        for j in k + 1..d {
            let mut m = ComplexMatrix::zeros(d, d);
            m[(k, j)] = Complex64::new(0.0, -1.0);
            m[(j, k)] = Complex64::new(0.0, 1.0);
            lambdas.push(m);
        }
    }
    // Diagonal ladder: sqrt(2/(l(l-1))) diag(1, .., 1, 1-l, 0, .., 0).
    for l in 2..=d {
        let norm = (2.0 / (l as f64 * (l as f64 - 1.0))).sqrt();
        let mut m = ComplexMatrix::zeros(d, d);
        for i in 0..l - 1 {
            m[(i, i)] = Complex64::new(norm, 0.0);
        }
        m[(l - 1, l - 1)] = Complex64::new(norm * (1.0 - l as f64), 0.0);
        lambdas.push(m);
    }
    Ok(GellMannBasis { d, lambdas })
}

/// Bloch coordinates of a trace-one Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    d: usize,
    beta: Vec<f64>,
}

impl BlochVector {
    pub fn new(d: usize, beta: Vec<f64>) -> Result<Self> {
        if beta.len() != d * d - 1 {
            return Err(Error::LengthMismatch {
                expected: d * d - 1,
                got: beta.len(),
            });
        }
        Ok(BlochVector { d, beta })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn coords(&self) -> &[f64] {
        &self.beta
    }

    pub fn norm_sqr(&self) -> f64 {
        self.beta.iter().map(|x| x * x).sum()
    }
}

/// Coordinates `beta_j = (d/2) Tr(rho lambda_j)` of a trace-one Hermitian
/// matrix.
pub fn to_bloch(rho: &ComplexMatrix, basis: &GellMannBasis, tol: &Tolerance) -> Result<BlochVector> {
    let n = rho.require_hermitian(tol)?;
    if n != basis.dim() {
        return Err(Error::ShapeMismatch {
            expected: (basis.dim(), basis.dim()),
            got: (rho.rows(), rho.cols()),
        });
    }
    let tr = rho.trace().re;
    if (tr - 1.0).abs() > tol.scaled(rho.max_abs()) {
        return Err(Error::InvalidArgument("input must have trace 1"));
    }
    let d = basis.dim() as f64;
    let beta = basis
        .iter()
        .map(|l| 0.5 * d * rho.matmul(l).trace().re)
        .collect();
    BlochVector::new(basis.dim(), beta)
}

/// `rho = (1/d)(I + sum_i beta_i lambda_i)` — Hermitian with trace one;
/// positivity is the caller's problem.
pub fn from_bloch(beta: &BlochVector, basis: &GellMannBasis) -> Result<ComplexMatrix> {
    if beta.dim() != basis.dim() {
        return Err(Error::LengthMismatch {
            expected: basis.len(),
            got: beta.coords().len(),
        });
    }
    let d = basis.dim();
    let mut m = ComplexMatrix::identity(d);
    for (x, l) in beta.coords().iter().zip(basis.iter()) {
        m = m.add(&l.scale_real(*x));
    }
    Ok(m.scale_real(1.0 / d as f64).hermitized())
}

/// Fully symmetric structure tensor `d_kli = (1/4) Tr({lambda_k, lambda_l}
/// lambda_i)` of the anticommutator algebra.
#[derive(Debug, Clone)]
pub struct StructureTensor {
    d: usize,
    m: usize,
    entries: Vec<f64>,
}

impl StructureTensor {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, k: usize, l: usize, i: usize) -> f64 {
        self.entries[(k * self.m + l) * self.m + i]
    }

    /// The induced symmetric bilinear product
    /// `(x cup y)_i = sum_jk d_ijk x_j y_k`.
    pub fn cup(&self, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.m || y.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                got: if x.len() != self.m { x.len() } else { y.len() },
            });
        }
        let mut out = vec![0.0; self.m];
        for j in 0..self.m {
            if x[j] == 0.0 {
                continue;
            }
            for k in 0..self.m {
                let w = x[j] * y[k];
                if w == 0.0 {
                    continue;
                }
                for i in 0..self.m {
                    // d_ijk = d_jki by full symmetry; stored as (j, k, i).
                    out[i] += self.get(j, k, i) * w;
                }
            }
        }
        Ok(out)
    }
}

/// Compute the structure tensor of a basis by tracing anticommutators.
pub fn structure_tensor(basis: &GellMannBasis) -> StructureTensor {
    let m = basis.len();
    let mut entries = vec![0.0; m * m * m];
    for k in 0..m {
        for l in k..m {
            let anti = basis
                .lambda(k)
                .matmul(basis.lambda(l))
                .add(&basis.lambda(l).matmul(basis.lambda(k)));
            for i in 0..m {
                let v = 0.25 * anti.matmul(basis.lambda(i)).trace().re;
                entries[(k * m + l) * m + i] = v;
                entries[(l * m + k) * m + i] = v;
            }
        }
    }
    StructureTensor {
        d: basis.dim(),
        m,
        entries,
    }
}

/// Pure-state test: `<beta, beta> = (d^2 - d)/2` and
/// `(d - 2) beta = beta cup beta`, both within `tol` scaled to the condition
/// magnitude.
pub fn is_pure(
    beta: &BlochVector,
    basis: &GellMannBasis,
    tensor: &StructureTensor,
    tol: &Tolerance,
) -> Result<bool> {
    if beta.dim() != basis.dim() || tensor.dim() != basis.dim() {
        return Err(Error::InvalidArgument(
            "Bloch vector, basis and tensor dimensions must agree",
        ));
    }
    let d = basis.dim() as f64;
    let target = 0.5 * (d * d - d);
    let thr = tol.scaled(target);
    if (beta.norm_sqr() - target).abs() > thr {
        return Ok(false);
    }
    let cup = tensor.cup(beta.coords(), beta.coords())?;
    let dev = beta
        .coords()
        .iter()
        .zip(&cup)
        .fold(0.0_f64, |m, (b, c)| m.max(((d - 2.0) * b - c).abs()));
    Ok(dev <= thr)
}

/// A density matrix produced from a free vector, together with its Bloch
/// coordinates and the scalar `kappa` completing the Hermitian root.
#[derive(Debug, Clone)]
pub struct Representation {
    pub rho: ComplexMatrix,
    pub beta: BlochVector,
    pub kappa: f64,
}

/// Square-root representation of density matrices: any `beta0` with
/// `|beta0|^2 <= d^2/2` yields `rho = H^2` for
/// `H = (1/d)(kappa I + sum beta0_i lambda_i)` with
/// `kappa = +sqrt((d^2 - 2|beta0|^2)/d)`, and `rho` is automatically a
/// density matrix with coordinates
/// `beta = (2 kappa/d) beta0 + (beta0 cup beta0)/d`.
pub fn represent_from_beta0(
    beta0: &[f64],
    basis: &GellMannBasis,
    tensor: &StructureTensor,
    tol: &Tolerance,
) -> Result<Representation> {
    let d = basis.dim();
    if beta0.len() != basis.len() {
        return Err(Error::LengthMismatch {
            expected: basis.len(),
            got: beta0.len(),
        });
    }
    let norm_sqr: f64 = beta0.iter().map(|x| x * x).sum();
    let limit = 0.5 * (d * d) as f64;
    if norm_sqr > limit + tol.scaled(limit) {
        return Err(Error::NormBound {
            got: norm_sqr,
            limit,
        });
    }
    let df = d as f64;
    let kappa = (((df * df - 2.0 * norm_sqr) / df).max(0.0)).sqrt();

    let mut h = ComplexMatrix::identity(d).scale_real(kappa);
    for (x, l) in beta0.iter().zip(basis.iter()) {
        h = h.add(&l.scale_real(*x));
    }
    let h = h.scale_real(1.0 / df);
    let rho = h.matmul(&h).hermitized();

    let cup = tensor.cup(beta0, beta0)?;
    let beta: Vec<f64> = beta0
        .iter()
        .zip(&cup)
        .map(|(b0, c)| 2.0 * kappa / df * b0 + c / df)
        .collect();

    // The construction guarantees positivity; verify rather than assume.
    let verdict = check_p2_eigen(&rho, tol)?;
    if !verdict.is_psd {
        return Err(Error::NotPsd {
            witness: match verdict.witness {
                Some(crate::positivity::Witness::Eigenvalue(w)) => w,
                _ => f64::NAN,
            },
            index: None,
        });
    }
    Ok(Representation {
        rho,
        beta: BlochVector::new(d, beta)?,
        kappa,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::herm_eig;
    use crate::sample;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn d2_basis_is_pauli() {
        let basis = gellmann(2).unwrap();
        assert_eq!(basis.len(), 3);
        let sx = ComplexMatrix::from_rows(&[
            std::vec![c(0.0, 0.0), c(1.0, 0.0)],
            std::vec![c(1.0, 0.0), c(0.0, 0.0)],
        ]);
        let sy = ComplexMatrix::from_rows(&[
            std::vec![c(0.0, 0.0), c(0.0, -1.0)],
            std::vec![c(0.0, 1.0), c(0.0, 0.0)],
        ]);
        let sz = ComplexMatrix::diag_real(&[1.0, -1.0]);
        assert_eq!(basis.lambda(0), &sx);
        assert_eq!(basis.lambda(1), &sy);
        assert_eq!(basis.lambda(2), &sz);
    }

    #[test]
    fn d3_diagonal_ladder() {
        let basis = gellmann(3).unwrap();
        assert_eq!(basis.len(), 8);
        // Last element: diag(1, 1, -2)/sqrt(3).
        let h3 = basis.lambda(7);
        let s = 1.0 / 3.0_f64.sqrt();
        assert!(h3.approx_eq(&ComplexMatrix::diag_real(&[s, s, -2.0 * s]), 1e-15));
    }

    #[test]
    fn orthogonality_and_tracelessness() {
        for d in 2..=6 {
            let basis = gellmann(d).unwrap();
            for i in 0..basis.len() {
                assert!(basis.lambda(i).trace().norm() <= 1e-12);
                assert!(basis.lambda(i).hermitian_deviation() <= 1e-12);
                for j in 0..basis.len() {
                    let tr = basis.lambda(i).matmul(basis.lambda(j)).trace().re;
                    let expect = if i == j { 2.0 } else { 0.0 };
                    assert!(
                        (tr - expect).abs() <= 1e-12,
                        "orthogonality failed at d={d}, ({i},{j})"
                    );
                }
            }
        }
        assert!(gellmann(1).is_err());
    }

    #[test]
    fn bloch_round_trip() {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 2..=5 {
            let basis = gellmann(d).unwrap();
            // Maximally mixed state has zero coordinates.
            let beta = to_bloch(
                &ComplexMatrix::identity(d).scale_real(1.0 / d as f64),
                &basis,
                &tol,
            )
            .unwrap();
            assert!(beta.norm_sqr() <= 1e-20);

            let rho = sample::random_density(&mut rng, d);
            let beta = to_bloch(&rho, &basis, &tol).unwrap();
            let back = from_bloch(&beta, &basis).unwrap();
            assert!(back.max_abs_diff(&rho) <= 1e-10);
        }
    }

    #[test]
    fn qubit_north_pole() {
        let tol = Tolerance::default();
        let basis = gellmann(2).unwrap();
        let rho = ComplexMatrix::diag_real(&[1.0, 0.0]);
        let beta = to_bloch(&rho, &basis, &tol).unwrap();
        assert!(beta.coords()[0].abs() < 1e-14);
        assert!(beta.coords()[1].abs() < 1e-14);
        assert!((beta.coords()[2] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn structure_tensor_vanishes_for_qubits() {
        let basis = gellmann(2).unwrap();
        let t = structure_tensor(&basis);
        for k in 0..3 {
            for l in 0..3 {
                for i in 0..3 {
                    assert!(t.get(k, l, i).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn structure_tensor_d3_known_value_and_symmetry() {
        let basis = gellmann(3).unwrap();
        let t = structure_tensor(&basis);
        // d_118 = 1/sqrt(3) in the conventional ordering; our index 0 is
        // lambda_1 (first symmetric) and index 7 the last diagonal.
        assert!((t.get(0, 0, 7) - 1.0 / 3.0_f64.sqrt()).abs() <= 1e-12);
        for k in 0..8 {
            for l in 0..8 {
                for i in 0..8 {
                    assert!((t.get(k, l, i) - t.get(l, k, i)).abs() <= 1e-14);
                }
            }
        }
    }

    #[test]
    fn anticommutator_reconstruction() {
        // {l_k, l_l} = (4/d) delta_kl I + 2 sum_i d_kli l_i.
        for d in 2..=4 {
            let basis = gellmann(d).unwrap();
            let t = structure_tensor(&basis);
            let m = basis.len();
            for k in 0..m {
                for l in 0..m {
                    let anti = basis
                        .lambda(k)
                        .matmul(basis.lambda(l))
                        .add(&basis.lambda(l).matmul(basis.lambda(k)));
                    let mut rebuilt = if k == l {
                        ComplexMatrix::identity(d).scale_real(4.0 / d as f64)
                    } else {
                        ComplexMatrix::zeros(d, d)
                    };
                    for i in 0..m {
                        rebuilt = rebuilt.add(&basis.lambda(i).scale_real(2.0 * t.get(k, l, i)));
                    }
                    assert!(
                        anti.max_abs_diff(&rebuilt) <= 1e-10,
                        "anticommutator mismatch at d={d}, ({k},{l})"
                    );
                }
            }
        }
    }

    #[test]
    fn calibration_of_the_tensor_normalization() {
        // Brute-force check fixing the factor-2 normalization: with
        // d_kli = (1/4) Tr({l_k, l_l} l_i), random pure states at d = 3
        // satisfy (d-2) beta = beta cup beta; with the un-halved tensor
        // (1/2) Tr(..), they do not.
        let tol = Tolerance::default();
        let basis = gellmann(3).unwrap();
        let t = structure_tensor(&basis);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let rho = sample::random_pure_density(&mut rng, 3);
            let beta = to_bloch(&rho, &basis, &tol).unwrap();
            let cup = t.cup(beta.coords(), beta.coords()).unwrap();
            let mut dev_halved = 0.0_f64;
            let mut dev_unhalved = 0.0_f64;
            for (b, c_) in beta.coords().iter().zip(&cup) {
                dev_halved = dev_halved.max((b - c_).abs());
                dev_unhalved = dev_unhalved.max((b - 2.0 * c_).abs());
            }
            assert!(dev_halved <= 1e-9, "chosen normalization must satisfy the identity");
            assert!(
                dev_unhalved > 1e-3,
                "doubled normalization must fail the identity"
            );
        }
    }

    #[test]
    fn cup_trivial_cases() {
        let basis = gellmann(3).unwrap();
        let t = structure_tensor(&basis);
        let zero = std::vec![0.0; 8];
        let y: Vec<f64> = (0..8).map(|i| i as f64).collect();
        assert!(t.cup(&zero, &y).unwrap().iter().all(|&v| v == 0.0));

        // Spot value against a brute-force triple loop.
        let x: Vec<f64> = (0..8).map(|i| (i as f64 * 0.37).sin()).collect();
        let got = t.cup(&x, &y).unwrap();
        for i in 0..8 {
            let mut want = 0.0;
            for j in 0..8 {
                for k in 0..8 {
                    want += t.get(i, j, k) * x[j] * y[k];
                }
            }
            assert!((got[i] - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn basis_state_purity_conditions_hold_tightly() {
        // rho = diag(1, 0, 0): both printed conditions to 1e-10.
        let tol = Tolerance::default();
        let basis = gellmann(3).unwrap();
        let t = structure_tensor(&basis);
        let rho = ComplexMatrix::diag_real(&[1.0, 0.0, 0.0]);
        let beta = to_bloch(&rho, &basis, &tol).unwrap();
        assert!((beta.norm_sqr() - 3.0).abs() <= 1e-10);
        let cup = t.cup(beta.coords(), beta.coords()).unwrap();
        for (b, q) in beta.coords().iter().zip(&cup) {
            assert!((b - q).abs() <= 1e-10);
        }
    }

    #[test]
    fn purity_verdicts() {
        let tol = Tolerance::new(1e-9).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for d in [2, 3, 4] {
            let basis = gellmann(d).unwrap();
            let t = structure_tensor(&basis);
            for _ in 0..25 {
                let pure = sample::random_pure_density(&mut rng, d);
                let beta = to_bloch(&pure, &basis, &Tolerance::default()).unwrap();
                assert!(is_pure(&beta, &basis, &t, &tol).unwrap(), "pure at d={d}");

                let mixed = sample::random_density(&mut rng, d);
                let beta = to_bloch(&mixed, &basis, &Tolerance::default()).unwrap();
                assert!(!is_pure(&beta, &basis, &t, &tol).unwrap(), "mixed at d={d}");
            }
            // Maximally mixed fails the norm condition outright.
            let beta = to_bloch(
                &ComplexMatrix::identity(d).scale_real(1.0 / d as f64),
                &basis,
                &Tolerance::default(),
            )
            .unwrap();
            assert!(!is_pure(&beta, &basis, &t, &tol).unwrap());
        }
    }

    #[test]
    fn representation_at_the_origin() {
        // beta0 = 0: kappa^2 = d and rho is maximally mixed.
        let tol = Tolerance::default();
        for d in 2..=4 {
            let basis = gellmann(d).unwrap();
            let t = structure_tensor(&basis);
            let rep = represent_from_beta0(&std::vec![0.0; d * d - 1], &basis, &t, &tol).unwrap();
            assert!((rep.kappa * rep.kappa - d as f64).abs() <= 1e-12);
            assert!(rep
                .rho
                .approx_eq(&ComplexMatrix::identity(d).scale_real(1.0 / d as f64), 1e-12));
            assert!(rep.beta.norm_sqr() <= 1e-20);
        }
    }

    #[test]
    fn representation_yields_density_matrices() {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for d in [2, 3, 4] {
            let basis = gellmann(d).unwrap();
            let t = structure_tensor(&basis);
            let m = basis.len();
            let limit = (0.5 * (d * d) as f64).sqrt();
            for _ in 0..30 {
                // Uniform direction, radius within the admissible ball.
                let dir: Vec<f64> = (0..m).map(|_| sample::standard_normal(&mut rng)).collect();
                let norm: f64 = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
                let r = limit * rng.gen::<f64>();
                let beta0: Vec<f64> = dir.iter().map(|x| x / norm * r).collect();

                let rep = represent_from_beta0(&beta0, &basis, &t, &tol).unwrap();
                // rho equals H^2, is PSD, has trace 1.
                assert!((rep.rho.trace().re - 1.0).abs() <= 1e-10);
                let eig = herm_eig(&rep.rho, &tol).unwrap();
                assert!(eig.min() >= -1e-10);
                // The advertised coordinates match the actual state.
                let beta = to_bloch(&rep.rho, &basis, &tol).unwrap();
                for (a, b) in beta.coords().iter().zip(rep.beta.coords()) {
                    assert!((a - b).abs() <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn representation_rejects_inadmissible_norm() {
        let tol = Tolerance::default();
        let basis = gellmann(2).unwrap();
        let t = structure_tensor(&basis);
        // |beta0|^2 = 3 > d^2/2 = 2.
        let err = represent_from_beta0(&[1.0, 1.0, 1.0], &basis, &t, &tol).unwrap_err();
        assert!(matches!(err, Error::NormBound { .. }));
    }

    #[test]
    fn state_norm_bound_holds() {
        // <beta, beta> <= (d^2 - d)/2 for every density matrix.
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for d in 2..=5 {
            let basis = gellmann(d).unwrap();
            let bound = 0.5 * ((d * d - d) as f64);
            for _ in 0..20 {
                let rho = sample::random_density(&mut rng, d);
                let beta = to_bloch(&rho, &basis, &tol).unwrap();
                assert!(beta.norm_sqr() <= bound + 1e-9);
            }
        }
    }
}
