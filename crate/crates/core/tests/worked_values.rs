//! Worked values, each recomputed through an independent route: explicit
//! matrices, numerical eigenvectors, and `tr(P·ρ)`.

use fuzzybit::borel::{BorelSet, QubitClass};
use fuzzybit::gates::{apply_cnot, apply_not, apply_sqrt_not, Gate};
use fuzzybit::linalg::{
    conjugate, hermitian_eigen, matrix_exp, partial_trace_second, tensor_product, trace_product,
    ComplexMatrix, Projector, C64,
};
use fuzzybit::qubit::{
    eigenvalues2, membership_pure_angle, membership_qubit, orthogonality_violation, Observable2,
    QubitState,
};
use fuzzybit::qutrit::{entangled_basis_change, is_qutrit, nonlocal_transform, QutritBloch};
use fuzzybit::twoqubit::{
    bloch_from_density, membership_pure_two, membership_two, trace_out, Bell, BlochMatrix,
    PureTwoQubit, Subsystem,
};

const Z: [f64; 3] = [0.0, 0.0, 1.0];
const X: [f64; 3] = [1.0, 0.0, 0.0];

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// `½(I + 2ρ·σ)` built entry by entry.
fn qubit_density(v: [f64; 3]) -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        &[c(0.5 + v[2]), C64::new(v[0], -v[1])],
        &[C64::new(v[0], v[1]), c(0.5 - v[2])],
    ])
    .unwrap()
}

/// Projector onto the top eigenvector of `a·σ`, via the numerical eigensolver.
fn top_projector(a: [f64; 3]) -> Projector {
    let m = ComplexMatrix::pauli(1).scale_real(a[0])
        + ComplexMatrix::pauli(2).scale_real(a[1])
        + ComplexMatrix::pauli(3).scale_real(a[2]);
    let e = hermitian_eigen(&m).unwrap();
    Projector::new(e.projector_where(|i, _| i == 1)).unwrap()
}

fn pure(v: &[C64]) -> ComplexMatrix {
    ComplexMatrix::outer(v, v)
}

#[test]
fn qubit_membership_at_tilted_state() {
    let rho = [0.3, 0.0, 0.2];
    let oracle = trace_product(&top_projector(X), &qubit_density(rho)).unwrap();
    assert!((oracle - 0.8).abs() < 1e-12);
    let f = membership_qubit(&X, &QubitState::new(rho).unwrap(), QubitClass::Plus).unwrap();
    assert!((f - oracle).abs() < 1e-12);
}

#[test]
fn pure_angle_third_of_pi() {
    let a = std::f64::consts::FRAC_PI_3;
    let psi = [c(a.cos()), c(a.sin())];
    let oracle = trace_product(&top_projector(Z), &pure(&psi)).unwrap();
    assert!((oracle - 0.25).abs() < 1e-12);
    assert!((membership_pure_angle(a) - oracle).abs() < 1e-12);
}

#[test]
fn eigenvalues_of_shifted_observable() {
    let obs = Observable2::new(2.0, [1.0, 2.0, 2.0]).unwrap();
    let numeric = hermitian_eigen(&obs.matrix()).unwrap().values;
    let (lo, hi) = eigenvalues2(&obs);
    assert!((lo - numeric[0]).abs() < 1e-12 && (hi - numeric[1]).abs() < 1e-12);
    assert!((lo + 1.0).abs() < 1e-12 && (hi - 5.0).abs() < 1e-12);
    let e: BorelSet = "[10,11)".parse().unwrap();
    assert_eq!(obs.classify(&e), QubitClass::Empty);
}

#[test]
fn orthogonality_witness_exceeds_one() {
    let w = orthogonality_violation(&Z, &X).unwrap();
    let d = qubit_density(w.bloch());
    let sum = trace_product(&top_projector(Z), &d).unwrap() + trace_product(&top_projector(X), &d).unwrap();
    assert!(sum > 1.0 + 0.2);
}

#[test]
fn pauli_product_spectrum() {
    let m = tensor_product(&ComplexMatrix::pauli(1), &ComplexMatrix::pauli(2)).unwrap();
    let v = hermitian_eigen(&m).unwrap().values;
    for (x, y) in v.iter().zip([-1.0, -1.0, 1.0, 1.0]) {
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn matrix_exponential_against_series() {
    let t11 = ComplexMatrix::pauli2(1, 1).scale(C64::new(0.0, 0.5));
    let x = t11.scale_real(0.3);
    let mut term = ComplexMatrix::identity(4);
    let mut sum = ComplexMatrix::identity(4);
    for k in 1..=20 {
        term = (term * x).scale_real(1.0 / k as f64);
        sum = sum + term;
    }
    assert!((matrix_exp(&x).unwrap() - sum).max_abs() < 1e-12);
}

fn bloch_by_traces(rho: &ComplexMatrix) -> [[f64; 4]; 4] {
    let mut m = [[0.0; 4]; 4];
    for (mu, row) in m.iter_mut().enumerate() {
        for (nu, x) in row.iter_mut().enumerate() {
            *x = (ComplexMatrix::pauli2(mu, nu) * *rho).trace().re;
        }
    }
    m
}

#[test]
fn bloch_matrices_of_reference_states() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let bell = pure(&[c(h), c(0.0), c(0.0), c(h)]);
    let bm = bloch_from_density(&bell).unwrap();
    assert!(bm.max_abs_diff(&BlochMatrix::from_rows(&bloch_by_traces(&bell)).unwrap()) < 1e-12);
    assert!(bm.is_locally_maximally_mixed(1e-12));
    for (i, d) in [1.0, -1.0, 1.0].iter().enumerate() {
        assert!((bm.corr[i][i] - d).abs() < 1e-12);
    }
    let ket00 = pure(&[c(1.0), c(0.0), c(0.0), c(0.0)]);
    let bm = bloch_from_density(&ket00).unwrap();
    assert_eq!(bm.s, Z);
    assert_eq!(bm.r, Z);
    assert!((bm.corr[2][2] - 1.0).abs() < 1e-12);
    assert!(bm.corr[0][0].abs() < 1e-12 && bm.corr[1][1].abs() < 1e-12);
}

#[test]
fn partial_trace_of_product() {
    let q1 = QubitState::new([0.1, -0.2, 0.3]).unwrap();
    let q2 = QubitState::new([0.0, 0.4, -0.1]).unwrap();
    let rho = tensor_product(&qubit_density(q1.bloch()), &qubit_density(q2.bloch())).unwrap();
    let first = partial_trace_second(&rho);
    let bm = bloch_from_density(&rho).unwrap();
    let marginal = trace_out(&bm, Subsystem::First);
    assert!((qubit_density(marginal.bloch()) - first).max_abs() < 1e-12);
}

#[test]
fn two_qubit_memberships_on_bell_and_product() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let bell = pure(&[c(h), c(0.0), c(0.0), c(h)]);
    let pp = Projector::new(tensor_product(top_projector(Z).matrix(), top_projector(Z).matrix()).unwrap()).unwrap();
    let oracle = trace_product(&pp, &bell).unwrap();
    assert!((oracle - 0.5).abs() < 1e-12);
    let bm = Bell::PhiPlus.bloch();
    let f = membership_two(&Z, &Z, &bm, QubitClass::Plus, QubitClass::Plus).unwrap();
    assert!((f - oracle).abs() < 1e-12);
    let mixed = membership_two(&X, &Z, &BlochMatrix::maximally_mixed(), QubitClass::Plus, QubitClass::Plus).unwrap();
    assert!((mixed - 0.25).abs() < 1e-15);
    let psi = PureTwoQubit::from_vector(&[c(h), c(0.0), c(0.0), c(h)]).unwrap();
    assert!((membership_pure_two(&psi, &Z).unwrap() - oracle).abs() < 1e-12);
}

#[test]
fn entangled_basis_sends_singlet_to_last_slot() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = pure(&[c(0.0), c(h), c(-h), c(0.0)]);
    let d = entangled_basis_change(&singlet).unwrap();
    let expected = ComplexMatrix::from_real_diagonal(&[0.0, 0.0, 0.0, 1.0]);
    assert!((d - expected).max_abs() < 1e-12);
    let triplet = pure(&[c(0.0), c(h), c(h), c(0.0)]);
    let t = is_qutrit(&bloch_from_density(&triplet).unwrap());
    assert!(t.bloch_condition && t.entangled_condition);
}

#[test]
fn torus_at_quarter_turn() {
    // r3′ = R12 and R12′ = −r3 under the conjugation oracle
    let psi = [c(0.6), c(0.0), c(0.0), C64::new(0.0, 0.8)];
    let q = QutritBloch::new(bloch_from_density(&pure(&psi)).unwrap()).unwrap();
    let u = {
        let g = ComplexMatrix::pauli2(2, 2).scale(C64::new(0.0, 0.5 * std::f64::consts::FRAC_PI_2));
        matrix_exp(&g).unwrap()
    };
    let oracle = bloch_from_density(&conjugate(&u, &pure(&psi))).unwrap();
    let t = nonlocal_transform(&q, std::f64::consts::FRAC_PI_2, 0.0);
    let before = q.coords();
    let after = t.coords();
    assert!((after[2] - before[6]).abs() < 1e-12);
    assert!((after[6] + before[2]).abs() < 1e-12);
    assert!(t.bloch().max_abs_diff(&oracle) < 1e-12);
}

#[test]
fn gates_against_explicit_conjugation() {
    let q = QubitState::new([0.1, 0.2, -0.3]).unwrap();
    let sx = ComplexMatrix::pauli(1);
    let not = QubitState::from_density(&conjugate(&sx, &qubit_density(q.bloch()))).unwrap();
    assert!(fuzzybit::vec3::max_abs_diff(&apply_not(&q).bloch(), &not.bloch()) < 1e-12);

    let half = |a: f64, b: f64| C64::new(a, b).scale(0.5);
    let printed = ComplexMatrix::from_rows(&[&[half(1.0, 1.0), half(1.0, -1.0)], &[half(1.0, -1.0), half(1.0, 1.0)]]).unwrap();
    // the printed matrix squares to σ₁ and its adjoint realizes the coordinate map
    assert!((printed * printed - sx).max_abs() < 1e-15);
    let image = QubitState::from_density(&conjugate(&printed.adjoint(), &qubit_density(q.bloch()))).unwrap();
    assert!(fuzzybit::vec3::max_abs_diff(&apply_sqrt_not(&q).bloch(), &image.bloch()) < 1e-12);
    assert_eq!(apply_sqrt_not(&QubitState::new([0.0, 0.0, 0.5]).unwrap()).bloch(), [0.0, 0.5, 0.0]);

    let ket10 = pure(&[c(0.0), c(0.0), c(1.0), c(0.0)]);
    let ket11 = pure(&[c(0.0), c(0.0), c(0.0), c(1.0)]);
    let out = apply_cnot(&bloch_from_density(&ket10).unwrap());
    assert!(out.max_abs_diff(&bloch_from_density(&ket11).unwrap()) < 1e-12);
    assert!((conjugate(&Gate::Cnot.unitary(), &ket10) - ket11).max_abs() < 1e-15);

    // CNOT on (H⊗I)|00⟩ gives Φ⁺
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let plus0 = pure(&[c(h), c(0.0), c(h), c(0.0)]);
    let bell = apply_cnot(&bloch_from_density(&plus0).unwrap());
    assert!(bell.max_abs_diff(&Bell::PhiPlus.bloch()) < 1e-12);
}
