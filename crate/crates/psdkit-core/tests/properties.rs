//! Structural invariants checked over generated inputs: exact index
//! identities (stacking, partial transpose, permutations), Kronecker-product
//! oracles for the partial operations, and contractivity of the lattice
//! pieces.

use proptest::prelude::*;

use psdkit_core::linalg::operator_norm;
use psdkit_core::matrix::Factor;
use psdkit_core::schur::{julia, Contraction};
use psdkit_core::toeplitz::{
    build_toeplitz, hermitian_symbols, pt_identity_check, transpose_identity_check,
};
use psdkit_core::{Complex64, ComplexMatrix, Tolerance};

fn complex_entry() -> impl Strategy<Value = Complex64> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec(complex_entry(), rows * cols)
        .prop_map(move |data| ComplexMatrix::new(rows, cols, data))
}

fn square(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(n, n)
}

proptest! {
    #[test]
    fn vec_unvec_round_trip_is_bit_exact(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let v = m.vec();
        let back = ComplexMatrix::unvec(v.col(0).as_slice(), m.rows(), m.cols()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn partial_transpose_is_an_exact_involution(m in square(6)) {
        for (d1, d2) in [(2usize, 3usize), (3, 2), (1, 6), (6, 1)] {
            let pt = m.partial_transpose(d1, d2).unwrap();
            prop_assert_eq!(pt.partial_transpose(d1, d2).unwrap(), m.clone());
        }
    }

    #[test]
    fn kronecker_oracles_for_partial_operations(a in square(2), b in square(3)) {
        let m = a.kron(&b);
        // Tr_second(A (x) B) = Tr(B) * A.
        let t2 = m.partial_trace(2, 3, Factor::Second).unwrap();
        prop_assert!(t2.max_abs_diff(&a.scale(b.trace())) <= 1e-9 * m.max_abs().max(1.0));
        // Tr_first(A (x) B) = Tr(A) * B.
        let t1 = m.partial_trace(2, 3, Factor::First).unwrap();
        prop_assert!(t1.max_abs_diff(&b.scale(a.trace())) <= 1e-9 * m.max_abs().max(1.0));
        // (A (x) B)^PT = A (x) B^T.
        let pt = m.partial_transpose(2, 3).unwrap();
        prop_assert!(pt.max_abs_diff(&a.kron(&b.transpose())) == 0.0);
    }

    #[test]
    fn toeplitz_permutation_identities(upper in proptest::collection::vec(complex_entry(), 6)) {
        // Hermitian 6x6 Toeplitz from the first row.
        let mut syms = upper.clone();
        syms[0] = Complex64::new(syms[0].re, 0.0);
        let a = build_toeplitz(&hermitian_symbols(&syms)).unwrap();
        prop_assert!(transpose_identity_check(&a).unwrap());
        prop_assert!(pt_identity_check(&a, 2, 3).unwrap());
        prop_assert!(pt_identity_check(&a, 3, 2).unwrap());
    }

    #[test]
    fn julia_operator_is_unitary_for_disc_values(re in -0.999f64..0.999, im in -0.999f64..0.999) {
        let z = Complex64::new(re, im);
        prop_assume!(z.norm() < 1.0);
        let u = julia(&Contraction::scalar(z).unwrap());
        let gram = u.adjoint().matmul(&u);
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(2)) <= 1e-9);
        prop_assert!((operator_norm(&u) - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn hermitized_matrices_pass_the_gate(m in square(4)) {
        let h = m.hermitized();
        prop_assert!(h.require_hermitian(&Tolerance::default()).is_ok());
        prop_assert_eq!(h.hermitian_deviation(), 0.0);
    }
}
