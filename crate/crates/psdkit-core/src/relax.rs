//! Dissipative generators for N-level open systems and the
//! complete-positivity constraints on four-level relaxation rates.
//!
//! The dissipator acts on column-stacked density matrices through an
//! `N^2 x N^2` matrix whose only non-zero entries are set by the population
//! rates `gamma_{kn}` (from level `n` to level `k`) and the total dephasing
//! rates `Gamma_{kn} = Gamma^p_{kn} + Gamma^d_{kn}`; the population columns
//! sum to zero exactly, which is probability conservation.
//!
//! For `N = 4`, complete positivity of the evolution reduces to positivity
//! of a real symmetric `3 x 3` matrix `B` built from the pure-dephasing
//! rates. Positivity of `B` is decided through its Schur parameters
//! `g12, g23, g13`: the diagonal must be non-negative and each parameter
//! must lie in `[-1, 1]`, which expands into quadratic inequalities in the
//! rates for the nearest-neighbour parameters and a determinant inequality
//! for `g13`.

// f64 math in no_std builds; std test builds resolve the same calls
// inherently and see this import as unused.
#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use crate::matrix::{Complex64, ComplexMatrix, Tolerance};
use crate::{Error, Result};

/// Population and dephasing rates of an `N`-level system. `gamma[k][n]` is
/// the population relaxation rate from level `n` to level `k`; the two
/// dephasing families are symmetric with zero diagonal, and the effective
/// dephasing is their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct RelaxationRates {
    n: usize,
    gamma: Vec<f64>,
    gamma_p: Vec<f64>,
    gamma_d: Vec<f64>,
}

impl RelaxationRates {
    pub fn new(n: usize, gamma: Vec<f64>, gamma_p: Vec<f64>, gamma_d: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("need at least one level"));
        }
        for (name, m) in [("gamma", &gamma), ("gamma_p", &gamma_p), ("gamma_d", &gamma_d)] {
            if m.len() != n * n {
                return Err(Error::LengthMismatch {
                    expected: n * n,
                    got: m.len(),
                });
            }
            for k in 0..n {
                if m[k * n + k] != 0.0 {
                    return Err(Error::InvalidArgument("rate matrices have zero diagonal"));
                }
                for l in 0..n {
                    let v = m[k * n + l];
                    if !(v >= 0.0) {
                        return Err(Error::NegativeRate { value: v });
                    }
                    if name != "gamma" && m[k * n + l] != m[l * n + k] {
                        return Err(Error::InvalidArgument(
                            "dephasing rates must be symmetric",
                        ));
                    }
                }
            }
        }
        Ok(RelaxationRates {
            n,
            gamma,
            gamma_p,
            gamma_d,
        })
    }

    /// Population-only system: both dephasing families zero.
    pub fn from_population(n: usize, gamma: Vec<f64>) -> Result<Self> {
        let zeros = alloc::vec![0.0; n * n];
        Self::new(n, gamma, zeros.clone(), zeros)
    }

    pub fn levels(&self) -> usize {
        self.n
    }

    pub fn gamma(&self, k: usize, n: usize) -> f64 {
        self.gamma[k * self.n + n]
    }

    pub fn gamma_p(&self, k: usize, n: usize) -> f64 {
        self.gamma_p[k * self.n + n]
    }

    pub fn gamma_d(&self, k: usize, n: usize) -> f64 {
        self.gamma_d[k * self.n + n]
    }

    /// Effective dephasing `Gamma = Gamma^p + Gamma^d`.
    pub fn total_dephasing(&self, k: usize, n: usize) -> f64 {
        self.gamma_p(k, n) + self.gamma_d(k, n)
    }

    /// The six pure-dephasing rates of a four-level system.
    pub fn dephasing4(&self) -> Result<DephasingRates4> {
        if self.n != 4 {
            return Err(Error::InvalidArgument(
                "the complete-positivity constraints are implemented for four levels only",
            ));
        }
        DephasingRates4::new([
            self.gamma_d(0, 1),
            self.gamma_d(0, 2),
            self.gamma_d(0, 3),
            self.gamma_d(1, 2),
            self.gamma_d(1, 3),
            self.gamma_d(2, 3),
        ])
    }
}

/// Dissipator matrix on stacked density matrices. With the composite index
/// `(m, n) -> m + n*N` (0-based), the non-zero entries are
/// `-Gamma_{mn}` on coherence diagonals, `gamma_{ml}` coupling population
/// `(l,l)` into `(m,m)`, and `-sum_k gamma_{km}` on population diagonals.
pub fn build_ld(rates: &RelaxationRates) -> ComplexMatrix {
    let n = rates.levels();
    let idx = |m: usize, l: usize| m + l * n;
    let mut ld = ComplexMatrix::zeros(n * n, n * n);
    for m in 0..n {
        for l in 0..n {
            if m != l {
                // Coherence decay.
                let i = idx(m, l);
                ld[(i, i)] = Complex64::new(-rates.total_dephasing(m, l), 0.0);
                // Population transfer l -> m.
                ld[(idx(m, m), idx(l, l))] = Complex64::new(rates.gamma(m, l), 0.0);
            }
        }
        // Population loss; summed in ascending order so the column sums over
        // population indices cancel exactly.
        let mut loss = 0.0;
        for k in 0..n {
            if k != m {
                loss += rates.gamma(k, m);
            }
        }
        ld[(idx(m, m), idx(m, m))] = Complex64::new(-loss, 0.0);
    }
    ld
}

/// The six pure-dephasing rates of a four-level system, in the order
/// `(12, 13, 14, 23, 24, 34)` (1-based level pairs).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingRates4 {
    rates: [f64; 6],
}

impl DephasingRates4 {
    pub fn new(rates: [f64; 6]) -> Result<Self> {
        for &v in &rates {
            if !(v >= 0.0) {
                return Err(Error::NegativeRate { value: v });
            }
        }
        Ok(DephasingRates4 { rates })
    }

    pub fn rates(&self) -> &[f64; 6] {
        &self.rates
    }

    pub fn g12(&self) -> f64 {
        self.rates[0]
    }
    pub fn g13(&self) -> f64 {
        self.rates[1]
    }
    pub fn g14(&self) -> f64 {
        self.rates[2]
    }
    pub fn g23(&self) -> f64 {
        self.rates[3]
    }
    pub fn g24(&self) -> f64 {
        self.rates[4]
    }
    pub fn g34(&self) -> f64 {
        self.rates[5]
    }
}

/// Half the sum of the six pure-dephasing rates.
pub fn gamma_tot(d: &DephasingRates4) -> f64 {
    0.5 * d.rates.iter().sum::<f64>()
}

/// The real symmetric `3 x 3` matrix whose positivity is equivalent to
/// complete positivity of the four-level dissipative evolution:
/// diagonal `Gamma_tot` minus the three pair sums, off-diagonal half the
/// pair differences.
pub fn b_matrix(d: &DephasingRates4) -> [[f64; 3]; 3] {
    let t = gamma_tot(d);
    let b11 = t - (d.g13() + d.g24());
    let b22 = t - (d.g14() + d.g23());
    let b33 = t - (d.g12() + d.g34());
    let b12 = 0.5 * (d.g12() - d.g34());
    let b13 = 0.5 * (d.g14() - d.g23());
    let b23 = 0.5 * (d.g13() - d.g24());
    [[b11, b12, b13], [b12, b22, b23], [b13, b23, b33]]
}

/// Outcome of the four-level complete-positivity check: the matrix `B`, the
/// diagonal verdicts, the three Schur parameters (zero on degenerate
/// branches), the values of the three expanded inequalities, and the final
/// verdict equivalent to `B >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct CpReport {
    pub b: [[f64; 3]; 3],
    pub diag_ok: [bool; 3],
    pub g12: f64,
    pub g23: f64,
    pub g13: f64,
    /// Values of the expanded `g12`, `g23` and determinant (`g13`)
    /// inequalities; each must be non-negative.
    pub inequality_values: [f64; 3],
    /// True when a vanishing diagonal entry made a parameter undetermined
    /// (it is reported as zero by convention).
    pub degenerate: bool,
    pub verdict: bool,
}

/// The expanded seven-term forms of the `g12` and `g23` membership
/// conditions as printed inequalities in the rates, and the determinant
/// inequality for `g13`.
fn expanded_inequalities(d: &DephasingRates4) -> [f64; 3] {
    let (x12, x13, x14, x23, x24, x34) =
        (d.g12(), d.g13(), d.g14(), d.g23(), d.g24(), d.g34());
    let sq = |x: f64| x * x;
    let e12 = 4.0 * x12 * x34 - sq(x13 - x14) - sq(x13 - x23) + sq(x13 - x24) + sq(x14 - x23)
        - sq(x14 - x24)
        - sq(x23 - x24);
    let e23 = 4.0 * x13 * x24 - sq(x12 - x14) - sq(x12 - x23) + sq(x12 - x34) + sq(x14 - x23)
        - sq(x14 - x34)
        - sq(x23 - x34);
    let b = b_matrix(d);
    let det = b[0][0] * b[1][1] * b[2][2] + 2.0 * b[0][1] * b[0][2] * b[1][2]
        - b[0][0] * b[1][2] * b[1][2]
        - b[1][1] * b[0][2] * b[0][2]
        - b[2][2] * b[0][1] * b[0][1];
    [e12, e23, det]
}

/// Complete-positivity constraints for a four-level system.
///
/// `B` is positive iff its diagonal is non-negative and the Schur parameters
/// `g12, g23, g13` lie in `[-1, 1]`; the latter conditions are evaluated
/// through their expanded polynomial forms, which stay meaningful when a
/// square root would be undefined. A vanishing diagonal entry forces its row
/// and column to vanish (checked directly — for a vanishing middle entry
/// this includes the outer `{1,3}` minor, which the determinant inequality
/// no longer controls), and the undetermined parameters are reported as
/// zero.
pub fn cp_constraints_n4(d: &DephasingRates4, tol: &Tolerance) -> CpReport {
    let b = b_matrix(d);
    let scale = gamma_tot(d).max(1.0);
    let thr = tol.eps() * scale;
    let thr2 = tol.eps() * scale * scale;
    let thr3 = tol.eps() * scale * scale * scale;

    let diag_ok = [b[0][0] >= -thr, b[1][1] >= -thr, b[2][2] >= -thr];
    let ineq = expanded_inequalities(d);

    let mut degenerate = false;
    let mut live = [false; 3];
    for i in 0..3 {
        live[i] = b[i][i] > thr;
    }

    let g12 = if live[0] && live[1] {
        b[0][1] / (b[0][0].sqrt() * b[1][1].sqrt())
    } else {
        degenerate = true;
        0.0
    };
    let g23 = if live[1] && live[2] {
        b[1][2] / (b[1][1].sqrt() * b[2][2].sqrt())
    } else {
        degenerate = true;
        0.0
    };
    let d12 = (1.0 - g12 * g12).max(0.0).sqrt();
    let d23 = (1.0 - g23 * g23).max(0.0).sqrt();
    let g13 = if live[0] && live[2] && d12 * d23 > 1e-12 {
        (b[0][2] / (b[0][0].sqrt() * b[2][2].sqrt()) - g12 * g23) / (d12 * d23)
    } else {
        if live[0] && live[2] {
            degenerate = true;
        }
        0.0
    };

    // A vanishing diagonal entry of a positive matrix kills its row and
    // column; verify that directly on the degenerate branches.
    let col_thr = (thr * scale).sqrt().max(thr);
    let mut degenerate_ok = true;
    for i in 0..3 {
        if !live[i] {
            for j in 0..3 {
                if j != i && b[i][j].abs() > col_thr {
                    degenerate_ok = false;
                }
            }
        }
    }
    if !live[1] && b[0][0] * b[2][2] - b[0][2] * b[0][2] < -thr2 {
        degenerate_ok = false;
    }

    let verdict = diag_ok.iter().all(|&ok| ok)
        && ineq[0] >= -thr2
        && ineq[1] >= -thr2
        && ineq[2] >= -thr3
        && degenerate_ok;

    CpReport {
        b,
        diag_ok,
        g12,
        g23,
        g13,
        inequality_values: ineq,
        degenerate,
        verdict,
    }
}

/// Algebraic cross-check of the expanded inequalities: the printed
/// seven-term `g12` form equals both `4 G12 G34 - (G14 + G23 - G13 - G24)^2`
/// and `4 (b11 b22 - b12^2)`, and the `g23` form likewise pairs with
/// `(b22, b33, b23)`. Returns true when all routes agree within
/// `tol * scale^2`.
pub fn inequality_identity_check(d: &DephasingRates4, tol: &Tolerance) -> bool {
    let b = b_matrix(d);
    let ineq = expanded_inequalities(d);
    let scale = gamma_tot(d).max(1.0);
    let thr = tol.scaled(scale * scale);
    let sq = |x: f64| x * x;

    let compact12 = 4.0 * d.g12() * d.g34() - sq(d.g14() + d.g23() - d.g13() - d.g24());
    let minor12 = 4.0 * (b[0][0] * b[1][1] - sq(b[0][1]));
    let compact23 = 4.0 * d.g13() * d.g24() - sq(d.g14() + d.g23() - d.g12() - d.g34());
    let minor23 = 4.0 * (b[1][1] * b[2][2] - sq(b[1][2]));

    (ineq[0] - compact12).abs() <= thr
        && (ineq[0] - minor12).abs() <= thr
        && (ineq[1] - compact23).abs() <= thr
        && (ineq[1] - minor23).abs() <= thr
}

/// `B` as a complex matrix (for the eigenvalue and Schur-extraction
/// cross-checks).
pub fn b_as_matrix(b: &[[f64; 3]; 3]) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = Complex64::new(b[i][j], 0.0);
        }
    }
    m
}
