//! NOT, √NOT and CNOT as exact maps on Bloch coordinates, each paired with
//! the unitary it comes from.
//!
//! The coordinate maps only permute and negate entries, so they are exact in
//! floating point; the unitaries serve as conjugation oracles.

use std::fmt;
use std::str::FromStr;

use crate::borel::QubitClass;
use crate::error::{Error, Result};
use crate::fuzzylogic::{MembershipFunctional, State};
use crate::linalg::{conjugate, exp_i, ComplexMatrix, C64};
use crate::qubit::{membership_qubit, QubitState};
use crate::report::{format_number, format_vector, Check, Report};
use crate::sampling;
use crate::tolerance::Tolerances;
use crate::twoqubit::{bloch_from_density, membership_two, random_bloch, BlochMatrix};
use crate::vec3::{self, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Not,
    SqrtNot,
    Cnot,
}

impl Gate {
    pub const ALL: [Gate; 3] = [Gate::Not, Gate::SqrtNot, Gate::Cnot];

    pub fn name(self) -> &'static str {
        match self {
            Gate::Not => "not",
            Gate::SqrtNot => "sqrt-not",
            Gate::Cnot => "cnot",
        }
    }

    /// Number of qubits acted on.
    pub fn arity(self) -> usize {
        match self {
            Gate::Cnot => 2,
            _ => 1,
        }
    }

    /// `σ₁`; the adjoint of `½[[1+i, 1−i], [1−i, 1+i]]`; and
    /// `|0⟩⟨0|⊗I + |1⟩⟨1|⊗σ₁`.
    pub fn unitary(self) -> ComplexMatrix {
        match self {
            Gate::Not => ComplexMatrix::pauli(1),
            Gate::SqrtNot => {
                let p = C64::new(0.5, 0.5);
                let m = C64::new(0.5, -0.5);
                ComplexMatrix::from_rows(&[&[p, m], &[m, p]])
                    .expect("finite")
                    .adjoint()
            }
            Gate::Cnot => ComplexMatrix::from_real_rows(&[
                &[1.0, 0.0, 0.0, 0.0],
                &[0.0, 1.0, 0.0, 0.0],
                &[0.0, 0.0, 0.0, 1.0],
                &[0.0, 0.0, 1.0, 0.0],
            ])
            .expect("finite"),
        }
    }

    /// Applies the coordinate map to a state of matching arity.
    pub fn apply(self, state: &State) -> Result<State> {
        match (self, state) {
            (Gate::Not, State::Qubit(q)) => Ok(State::Qubit(apply_not(q))),
            (Gate::SqrtNot, State::Qubit(q)) => Ok(State::Qubit(apply_sqrt_not(q))),
            (Gate::Cnot, State::TwoQubit(bm)) => Ok(State::TwoQubit(apply_cnot(bm))),
            _ => Err(Error::UniverseMismatch),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "not" => Ok(Gate::Not),
            "sqrt-not" | "sqrt_not" | "sqrtnot" => Ok(Gate::SqrtNot),
            "cnot" => Ok(Gate::Cnot),
            other => Err(Error::Parse(format!(
                "unknown gate `{other}` (expected not, sqrt-not or cnot)"
            ))),
        }
    }
}

/// Half turn about `x₁`: `(ρ₁, ρ₂, ρ₃) → (ρ₁, −ρ₂, −ρ₃)`.
pub fn apply_not(q: &QubitState) -> QubitState {
    let [x, y, z] = q.bloch();
    QubitState::new([x, -y, -z]).expect("rotations preserve the ball")
}

/// Quarter turn about `x₁`: `(ρ₁, ρ₂, ρ₃) → (ρ₁, ρ₃, −ρ₂)`.
pub fn apply_sqrt_not(q: &QubitState) -> QubitState {
    let [x, y, z] = q.bloch();
    QubitState::new([x, z, -y]).expect("rotations preserve the ball")
}

/// CNOT with the first qubit as control, as a signed permutation of `r_μν`.
pub fn apply_cnot(bm: &BlochMatrix) -> BlochMatrix {
    let r = bm.rows();
    let e = |m: usize, n: usize| r[m][n];
    BlochMatrix::new_unchecked(
        [e(1, 1), e(2, 1), e(3, 0)],
        [e(0, 1), e(3, 2), e(3, 3)],
        [
            [e(1, 0), e(2, 3), -e(2, 2)],
            [e(2, 0), -e(1, 3), e(1, 2)],
            [e(3, 1), e(0, 2), e(0, 3)],
        ],
    )
}

/// Rotation by `θ` about `x₁` in the sense of √NOT: identity at 0, √NOT at
/// `π/2`, NOT at `π`.
pub fn rotation_about_x(theta: f64, q: &QubitState) -> QubitState {
    let [x, y, z] = q.bloch();
    let (s, c) = theta.sin_cos();
    QubitState::new([x, y * c + z * s, z * c - y * s]).expect("rotations preserve the ball")
}

/// `exp(iθσ₁/2)`, the unitary behind [`rotation_about_x`].
pub fn rotation_unitary(theta: f64) -> ComplexMatrix {
    exp_i(theta / 2.0, &ComplexMatrix::pauli(1)).expect("finite")
}

/// `f(gate(ρ))`.
pub fn membership_after_gate(
    gate: Gate,
    f: &MembershipFunctional,
    state: &State,
) -> Result<f64> {
    f.evaluate(&gate.apply(state)?)
}

fn qubit_oracle(u: &ComplexMatrix, q: &QubitState) -> QubitState {
    QubitState::from_density(&conjugate(u, &q.density_matrix())).expect("unitary image is a state")
}

/// All three coordinate maps against conjugation by their unitaries.
pub fn gate_oracle_check(samples: usize, seed: u64, tol: &Tolerances) -> Report {
    let mut report = Report::with_seed(seed);
    let unitarity = Gate::ALL
        .iter()
        .map(|g| g.unitary().unitarity_deviation())
        .fold(0.0, f64::max);
    report.push(Check::from_margin("gate-unitarity", 1e-14 - unitarity));

    let mut err = [0.0_f64; 3];
    let mut square = 0.0_f64;
    let (u_not, u_sqrt, u_cnot) = (
        Gate::Not.unitary(),
        Gate::SqrtNot.unitary(),
        Gate::Cnot.unitary(),
    );
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed, i as u64);
        let q = QubitState::new(sampling::bloch_ball_point(&mut rng)).expect("inside the ball");
        err[0] = err[0].max(vec3::max_abs_diff(
            &apply_not(&q).bloch(),
            &qubit_oracle(&u_not, &q).bloch(),
        ));
        err[1] = err[1].max(vec3::max_abs_diff(
            &apply_sqrt_not(&q).bloch(),
            &qubit_oracle(&u_sqrt, &q).bloch(),
        ));
        // exact identity, no tolerance
        if apply_sqrt_not(&apply_sqrt_not(&q)) != apply_not(&q) {
            square = square.max(1.0);
        }
        let bm = random_bloch(&mut rng);
        let oracle = bloch_from_density(&conjugate(&u_cnot, &bm.density_matrix()))
            .expect("unitary image is a state");
        err[2] = err[2].max(apply_cnot(&bm).max_abs_diff(&oracle));
    }
    for (g, e) in Gate::ALL.iter().zip(err) {
        report.push(Check::from_margin(format!("gate-{g}-oracle"), tol.oracle - e));
    }
    report.push(Check::new("gate-sqrt-not-squared-is-not", square == 0.0, -square));
    report
}

/// CNOT with `â = b̂ = ẑ` permutes the four memberships:
/// `++ → ++`, `+− → +−`, `−+ → −−`, `−− → −+`.
pub const CNOT_TABLE: [((QubitClass, QubitClass), (QubitClass, QubitClass)); 4] = {
    use QubitClass::{Minus, Plus};
    [
        ((Plus, Plus), (Plus, Plus)),
        ((Plus, Minus), (Plus, Minus)),
        ((Minus, Plus), (Minus, Minus)),
        ((Minus, Minus), (Minus, Plus)),
    ]
};

/// Checks [`CNOT_TABLE`] on sampled states. The `ẑ`-coordinates
/// `(s₃, r₃, R₃₃)` go to `(s₃, R₃₃, r₃)` exactly; the memberships agree up to
/// the order of floating-point additions.
pub fn cnot_table_check(samples: usize, seed: u64) -> Report {
    let z = [0.0, 0.0, 1.0];
    let mut report = Report::with_seed(seed);
    let mut coords_exact = true;
    let mut worst = 0.0_f64;
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed, i as u64);
        let bm = random_bloch(&mut rng);
        let out = apply_cnot(&bm);
        coords_exact &= out.s[2] == bm.s[2] && out.r[2] == bm.corr[2][2] && out.corr[2][2] == bm.r[2];
        for ((pa, pb), (qa, qb)) in CNOT_TABLE {
            let after = membership_two(&z, &z, &out, pa, pb).expect("unit axes");
            let before = membership_two(&z, &z, &bm, qa, qb).expect("unit axes");
            worst = worst.max((after - before).abs());
        }
    }
    report.push(Check::new(
        "cnot-table-coordinates",
        coords_exact,
        if coords_exact { 0.0 } else { -1.0 },
    ));
    report.push(Check::from_margin("cnot-table-memberships", 1e-15 - worst));
    report
}

/// NOT coincides with the fuzzy complement for `â = ±ẑ` and differs for `â = x̂`.
pub fn not_vs_complement_check(samples: usize, seed: u64) -> Report {
    let z = [0.0, 0.0, 1.0];
    let x = [1.0, 0.0, 0.0];
    let mut report = Report::with_seed(seed);
    let mut states = vec![
        QubitState::new([0.3, 0.0, 0.2]).expect("inside the ball"),
        QubitState::maximally_mixed(),
    ];
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed, i as u64);
        states.push(QubitState::new(sampling::bloch_ball_point(&mut rng)).expect("inside the ball"));
    }
    let mut eq = 0.0_f64;
    let mut best = (0.0_f64, 0usize);
    for (k, q) in states.iter().enumerate() {
        for axis in [z, vec3::neg(&z)] {
            let after = membership_qubit(&axis, &apply_not(q), QubitClass::Plus).expect("unit");
            let comp = 1.0 - membership_qubit(&axis, q, QubitClass::Plus).expect("unit");
            eq = eq.max((after - comp).abs());
        }
        let after = membership_qubit(&x, &apply_not(q), QubitClass::Plus).expect("unit");
        let comp = 1.0 - membership_qubit(&x, q, QubitClass::Plus).expect("unit");
        if (after - comp).abs() > best.0 {
            best = ((after - comp).abs(), k);
        }
    }
    report.push(Check::from_margin("not-equals-complement-z", 1e-15 - eq));
    let q = states[best.1];
    let witness = format!(
        "rho={} f(NOT rho)={} 1-f(rho)={}",
        format_vector(&q.bloch(), false),
        format_number(membership_qubit(&x, &apply_not(&q), QubitClass::Plus).expect("unit"), false),
        format_number(1.0 - membership_qubit(&x, &q, QubitClass::Plus).expect("unit"), false)
    );
    report.push(Check::new("not-differs-from-complement-x", best.0 > 1e-12, best.0).with_witness(witness));
    report
}

/// One row of the continuity table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuityRow {
    pub theta: f64,
    pub membership: f64,
}

/// `f_â(R(θ)ρ)` on a uniform grid of `θ ∈ [0, π]`.
pub fn continuity_table(axis: &Vec3, q: &QubitState, steps: usize) -> Result<Vec<ContinuityRow>> {
    let n = steps.max(1);
    (0..=n)
        .map(|k| {
            let theta = std::f64::consts::PI * k as f64 / n as f64;
            let f = membership_qubit(axis, &rotation_about_x(theta, q), QubitClass::Plus)?;
            Ok(ContinuityRow {
                theta,
                membership: f,
            })
        })
        .collect()
}

/// The rotation family interpolates identity, √NOT and NOT, matches its
/// unitary, and moves every membership value by at most `|Δθ|/2`.
pub fn continuity_check(samples: usize, seed: u64, steps: usize, tol: &Tolerances) -> Report {
    use std::f64::consts::{FRAC_PI_2, PI};
    let mut report = Report::with_seed(seed);
    let mut endpoints = 0.0_f64;
    let mut oracle = 0.0_f64;
    let mut lipschitz = f64::NEG_INFINITY;
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed, i as u64);
        let q = QubitState::new(sampling::bloch_ball_point(&mut rng)).expect("inside the ball");
        let axis = sampling::unit_vector(&mut rng);
        for (theta, target) in [(0.0, q), (FRAC_PI_2, apply_sqrt_not(&q)), (PI, apply_not(&q))] {
            endpoints = endpoints.max(vec3::max_abs_diff(
                &rotation_about_x(theta, &q).bloch(),
                &target.bloch(),
            ));
        }
        let theta = PI * (i as f64 + 0.5) / samples as f64;
        oracle = oracle.max(vec3::max_abs_diff(
            &rotation_about_x(theta, &q).bloch(),
            &qubit_oracle(&rotation_unitary(theta), &q).bloch(),
        ));
        let table = continuity_table(&axis, &q, steps).expect("unit axis");
        let dtheta = PI / steps.max(1) as f64;
        for w in table.windows(2) {
            lipschitz = lipschitz.max((w[1].membership - w[0].membership).abs() - 0.5 * dtheta);
        }
    }
    report.push(Check::from_margin("rotation-endpoints", 1e-15 - endpoints));
    report.push(Check::from_margin("rotation-oracle", tol.oracle - oracle));
    report.push(Check::from_margin("rotation-continuity", tol.fuzzy - lipschitz));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twoqubit::{Bell, PureTwoQubit};

    fn q(v: Vec3) -> QubitState {
        QubitState::new(v).unwrap()
    }

    #[test]
    fn not_examples() {
        assert_eq!(apply_not(&q([0.0, 0.0, 0.5])).bloch(), [0.0, -0.0, -0.5]);
        assert_eq!(apply_not(&q([0.5, 0.0, 0.0])).bloch(), [0.5, -0.0, -0.0]);
    }

    #[test]
    fn sqrt_not_examples() {
        let s = q([0.1, -0.2, 0.3]);
        assert_eq!(apply_sqrt_not(&apply_sqrt_not(&s)), apply_not(&s));
        assert_eq!(apply_sqrt_not(&q([0.0, 0.0, 0.5])).bloch(), [0.0, 0.5, -0.0]);
        let u = Gate::SqrtNot.unitary();
        assert!((u * u - Gate::Not.unitary()).max_abs() < 1e-15);
    }

    #[test]
    fn cnot_examples() {
        let ket10 = PureTwoQubit::from_vector(&[
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
        ])
        .unwrap();
        let ket11 = PureTwoQubit::from_vector(&[
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(apply_cnot(&ket10.bloch()).max_abs_diff(&ket11.bloch()) == 0.0);
        assert_eq!(apply_cnot(&BlochMatrix::maximally_mixed()), BlochMatrix::maximally_mixed());

        // (H⊗I)|00⟩ has s = x̂, r = ẑ, R = x̂ẑᵀ
        let plus0 = BlochMatrix::product(&q([0.5, 0.0, 0.0]), &q([0.0, 0.0, 0.5]));
        let bell = apply_cnot(&plus0);
        assert!(bell.max_abs_diff(&Bell::PhiPlus.bloch()) < 1e-15);
    }

    #[test]
    fn oracles() {
        let r = gate_oracle_check(500, 3, &Tolerances::DEFAULT);
        assert!(r.all_passed(), "{r}");
        let r = cnot_table_check(500, 4);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn not_versus_complement() {
        let r = not_vs_complement_check(300, 5);
        assert!(r.all_passed(), "{r}");
        let x = [1.0, 0.0, 0.0];
        let s = q([0.3, 0.0, 0.2]);
        let f = MembershipFunctional::qubit(x);
        let after = membership_after_gate(Gate::Not, &f, &State::Qubit(s)).unwrap();
        assert!((after - 0.8).abs() < 1e-15);
        assert!((1.0 - f.evaluate(&State::Qubit(s)).unwrap() - 0.2).abs() < 1e-15);
    }

    #[test]
    fn continuous_square_root() {
        let r = continuity_check(200, 6, 64, &Tolerances::DEFAULT);
        assert!(r.all_passed(), "{r}");
        let table = continuity_table(&[0.0, 0.0, 1.0], &q([0.0, 0.0, 0.5]), 2).unwrap();
        let f: Vec<f64> = table.iter().map(|r| r.membership).collect();
        assert!((f[0] - 1.0).abs() < 1e-15 && (f[1] - 0.5).abs() < 1e-15 && f[2].abs() < 1e-15);
    }

    #[test]
    fn arity_mismatch() {
        let s = State::TwoQubit(BlochMatrix::maximally_mixed());
        assert!(Gate::Not.apply(&s).is_err());
        assert_eq!("sqrt-not".parse::<Gate>().unwrap(), Gate::SqrtNot);
        assert!("hadamard".parse::<Gate>().is_err());
    }
}
