//! Seeded self-test: runs the randomized invariant suite of every module
//! and emits a JSON report. The same seed produces a byte-identical report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use psdkit_core::channel::{self, ChoiRoot};
use psdkit_core::linalg::{charpoly_coeffs, det_lu, herm_eig, pinv};
use psdkit_core::positivity::{check_p2_eigen, consensus};
use psdkit_core::relax::{self, DephasingRates4};
use psdkit_core::sample;
use psdkit_core::schur::{self, RootChoice};
use psdkit_core::toeplitz;
use psdkit_core::{bloch, ComplexMatrix, Tolerance};

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub worst: String,
}

#[derive(Debug, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub checks: Vec<CheckReport>,
    pub all_passed: bool,
}

struct Check {
    name: &'static str,
    cases: usize,
    failures: usize,
    worst: f64,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: 0,
            worst: 0.0,
        }
    }

    /// Record one case with its deviation against a threshold.
    fn case(&mut self, deviation: f64, threshold: f64) {
        self.cases += 1;
        if !(deviation <= threshold) {
            self.failures += 1;
        }
        if deviation > self.worst || self.worst.is_nan() {
            self.worst = deviation;
        }
    }

    fn require(&mut self, ok: bool) {
        self.case(if ok { 0.0 } else { 1.0 }, 0.5);
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            worst: format!("{:.3e}", self.worst),
        }
    }
}

/// Run every module's randomized invariants under the given seed.
pub fn run(seed: u64) -> SelftestReport {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    // Eigendecomposition residuals and the trace identity.
    let mut c = Check::new("linalg.herm_eig");
    for trial in 0..40 {
        let d = 2 + trial % 7;
        let h = sample::random_hermitian(&mut rng, d);
        let norm = h.fro_norm().max(1.0);
        match herm_eig(&h, &tol) {
            Ok(eig) => {
                c.case(eig.assemble(|w| w).max_abs_diff(&h), 1e-9 * norm);
                let sum: f64 = eig.values.iter().sum();
                c.case((sum - h.trace().re).abs(), 1e-9 * norm);
            }
            Err(_) => c.require(false),
        }
    }
    checks.push(c.finish());

    // Determinant and characteristic-coefficient oracles.
    let mut c = Check::new("linalg.charpoly_det");
    for trial in 0..30 {
        let d = 2 + trial % 5;
        let h = sample::random_hermitian(&mut rng, d);
        let scale = h.fro_norm().max(1.0).powi(d as i32);
        match (charpoly_coeffs(&h), det_lu(&h), herm_eig(&h, &tol)) {
            (Ok(b), Ok(det), Ok(eig)) => {
                let prod: f64 = eig.values.iter().product();
                c.case((det.re - prod).abs(), 1e-8 * scale);
                // b_d is the determinant itself.
                c.case((b[d - 1] - prod).abs(), 1e-8 * scale);
            }
            _ => c.require(false),
        }
    }
    checks.push(c.finish());

    // Penrose identities.
    let mut c = Check::new("linalg.pinv");
    for trial in 0..20 {
        let (r, co) = [(4, 4), (5, 3), (3, 5)][trial % 3];
        let m = sample::random_matrix(&mut rng, r, co);
        let scale = m.fro_norm().max(1.0);
        match pinv(&m, &tol) {
            Ok(p) => {
                c.case(m.matmul(&p).matmul(&m).max_abs_diff(&m), 1e-8 * scale);
                c.case(p.matmul(&m).matmul(&p).max_abs_diff(&p), 1e-8 * scale);
            }
            Err(_) => c.require(false),
        }
    }
    checks.push(c.finish());

    // The five decidable positivity oracles must agree.
    let mut c = Check::new("positivity.consensus");
    for trial in 0..120 {
        let d = 2 + trial % 7;
        let m = if trial % 2 == 0 {
            sample::random_psd(&mut rng, d)
        } else {
            sample::random_shifted_indefinite(&mut rng, d)
        };
        match consensus(&m, &tol) {
            Ok(rep) => c.require(rep.consistent && rep.is_psd() == Some(trial % 2 == 0)),
            Err(_) => c.require(false),
        }
    }
    checks.push(c.finish());

    // Lattice reconstruction is PSD; extraction round-trips; the
    // determinant formula matches LU.
    let mut c = Check::new("schur.lattice");
    for trial in 0..40 {
        let d = 2 + trial % 6;
        let params = sample::random_scalar_params(&mut rng, d, 1.0);
        let s = schur::reconstruct(&params);
        match herm_eig(&s, &tol) {
            Ok(eig) => c.case(-eig.min().min(0.0), 1e-9 * s.fro_norm().max(1.0)),
            Err(_) => c.require(false),
        }
        let lhs = schur::determinant_formula(&params);
        let rhs = det_lu(&s).map(|z| z.re).unwrap_or(f64::NAN);
        let denom = lhs.abs().max(rhs.abs()).max(1e-12);
        c.case((lhs - rhs).abs() / denom, 1e-8);
    }
    for trial in 0..30 {
        let d = 2 + trial % 5;
        let s = sample::random_psd(&mut rng, d);
        match schur::extract(&s, 1, RootChoice::PositiveSqrt, &tol) {
            Ok(p) => c.case(
                schur::reconstruct(&p).max_abs_diff(&s),
                1e-8 * s.fro_norm().max(1.0),
            ),
            Err(_) => c.require(false),
        }
    }
    checks.push(c.finish());

    // Bloch layer: basis orthogonality, purity criteria, the square-root
    // representation.
    let mut c = Check::new("bloch.states");
    for d in 2..=4usize {
        let basis = bloch::gellmann(d).expect("basis");
        let tensor = bloch::structure_tensor(&basis);
        let mut ortho_dev = 0.0_f64;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let tr = basis.lambda(i).matmul(basis.lambda(j)).trace().re;
                let expect = if i == j { 2.0 } else { 0.0 };
                ortho_dev = ortho_dev.max((tr - expect).abs());
            }
        }
        c.case(ortho_dev, 1e-12);
        let ptol = Tolerance::new(1e-9).expect("const");
        for _ in 0..15 {
            let pure = sample::random_pure_density(&mut rng, d);
            let beta = bloch::to_bloch(&pure, &basis, &tol).expect("bloch");
            c.require(bloch::is_pure(&beta, &basis, &tensor, &ptol).unwrap_or(false));
            let mixed = sample::random_density(&mut rng, d);
            let beta = bloch::to_bloch(&mixed, &basis, &tol).expect("bloch");
            c.require(!bloch::is_pure(&beta, &basis, &tensor, &ptol).unwrap_or(true));

            let dir: Vec<f64> = (0..basis.len())
                .map(|_| sample::standard_normal(&mut rng))
                .collect();
            let norm: f64 = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
            let limit = (0.5 * (d * d) as f64).sqrt();
            let r = limit * rng.gen::<f64>();
            let beta0: Vec<f64> = dir.iter().map(|x| x / norm * r).collect();
            match bloch::represent_from_beta0(&beta0, &basis, &tensor, &tol) {
                Ok(rep) => {
                    c.case((rep.rho.trace().re - 1.0).abs(), 1e-10);
                    let back = bloch::to_bloch(&rep.rho, &basis, &tol).expect("bloch");
                    let dev = back
                        .coords()
                        .iter()
                        .zip(rep.beta.coords())
                        .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
                    c.case(dev, 1e-9);
                }
                Err(_) => c.require(false),
            }
        }
    }
    checks.push(c.finish());

    // Channel layer: Choi assembly routes agree, round trips hold, the
    // partial-trace verdicts match the Kraus sums.
    let mut c = Check::new("channel.choi_kraus");
    for trial in 0..30 {
        let (d_in, d_out) = [(2, 2), (2, 3), (3, 2)][trial % 3];
        let k = sample::random_kraus(&mut rng, d_in, d_out, 1 + trial % 3);
        let s = channel::choi_from_kraus(&k);
        let s2 = channel::choi_from_kraus_outer(&k);
        c.case(s.matrix().max_abs_diff(s2.matrix()), 1e-10);
        match channel::kraus_from_choi(&s, ChoiRoot::Cholesky, &tol) {
            Ok(k2) => {
                let s3 = channel::choi_from_kraus(&k2);
                c.case(
                    s3.matrix().max_abs_diff(s.matrix()),
                    1e-8 * s.matrix().fro_norm().max(1.0),
                );
            }
            Err(_) => c.require(false),
        }
        let tp_direct = k
            .tp_sum()
            .max_abs_diff(&ComplexMatrix::identity(d_in))
            <= tol.scaled(1.0);
        let unital_direct = k
            .unital_sum()
            .max_abs_diff(&ComplexMatrix::identity(d_out))
            <= tol.scaled(1.0);
        c.require(channel::is_tp(&s, &tol).unwrap_or(!tp_direct) == tp_direct);
        c.require(channel::is_unital(&s, &tol).unwrap_or(!unital_direct) == unital_direct);
    }
    checks.push(c.finish());

    // Toeplitz layer: PPT both for scalar and block instances, permutation
    // identity, parameter transposition.
    let mut c = Check::new("toeplitz.ppt");
    for trial in 0..25 {
        let n = 4 + trial % 9;
        let s = sample::random_toeplitz_psd(&mut rng, n, 0.95);
        let mut checked_split = false;
        for d1 in 2..n {
            if n % d1 != 0 || n / d1 < 2 {
                continue;
            }
            let d2 = n / d1;
            match toeplitz::ppt_verdict(&s, d1, d2, &tol) {
                Ok(v) => c.require(v.is_psd),
                Err(_) => c.require(false),
            }
            checked_split = true;
        }
        if checked_split {
            c.require(toeplitz::transpose_identity_check(&s).unwrap_or(false));
        }
    }
    for trial in 0..10 {
        let blocks = 2 + trial % 3;
        let bsize = 2 + trial % 2;
        let s = sample::random_block_toeplitz_psd(&mut rng, blocks, bsize, 0.85);
        match toeplitz::ppt_verdict(&s, blocks, bsize, &tol) {
            Ok(v) => c.require(v.is_psd),
            Err(_) => c.require(false),
        }
        c.require(toeplitz::param_transpose_check(&s, bsize, &tol).unwrap_or(false));
    }
    checks.push(c.finish());

    // Relaxation constraints: the inequality chain is the eigenvalue test.
    let mut c = Check::new("relax.cp_n4");
    for _ in 0..200 {
        let d = DephasingRates4::new(sample::random_dephasing4(&mut rng, 1.0))
            .expect("non-negative rates");
        let rep = relax::cp_constraints_n4(&d, &tol);
        let eig = check_p2_eigen(&relax::b_as_matrix(&rep.b), &tol);
        c.require(eig.map(|e| e.is_psd == rep.verdict).unwrap_or(false));
        c.require(relax::inequality_identity_check(&d, &tol));
    }
    checks.push(c.finish());

    let all_passed = checks.iter().all(|c| c.failures == 0);
    SelftestReport {
        seed,
        checks,
        all_passed,
    }
}
