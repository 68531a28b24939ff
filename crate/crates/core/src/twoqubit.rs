//! Two qubits in Bloch-matrix coordinates `r_μν = tr(ρ·σ_μ⊗σ_ν)`.
//!
//! Row 0 of the matrix is `(1, r)` with `r` the second qubit's local vector;
//! column 0 is `(1, s)` with `s` the first qubit's. The remaining 3×3 block is
//! the correlation matrix `R`. At this scale `|s|, |r| ≤ 1` and a qubit
//! marginal has Bloch vector `s/2`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::borel::QubitClass;
use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigen, partial_trace_first, partial_trace_second, tensor_product, trace_product,
    ComplexMatrix, Projector, C64,
};
use crate::qubit::{class_projector, QubitState};
use crate::report::{Check, Report};
use crate::sampling;
use crate::tolerance::Tolerances;
use crate::vec3::{self, Vec3};

pub type Mat3 = [[f64; 3]; 3];

/// Two-qubit state as its Bloch matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochMatrix {
    pub s: Vec3,
    pub r: Vec3,
    pub corr: Mat3,
}

impl BlochMatrix {
    /// Builds and validates: the reconstructed density matrix must be positive
    /// and the local and correlation bounds must hold.
    pub fn new(s: Vec3, r: Vec3, corr: Mat3) -> Result<Self> {
        let bm = Self { s, r, corr };
        bm.validate()?;
        Ok(bm)
    }

    pub(crate) fn new_unchecked(s: Vec3, r: Vec3, corr: Mat3) -> Self {
        Self { s, r, corr }
    }

    pub fn maximally_mixed() -> Self {
        Self::new_unchecked([0.0; 3], [0.0; 3], [[0.0; 3]; 3])
    }

    /// `ρ₁ ⊗ ρ₂`: local vectors twice the qubit Bloch vectors, `R = s·rᵀ`.
    pub fn product(first: &QubitState, second: &QubitState) -> Self {
        let s = vec3::scale(&first.bloch(), 2.0);
        let r = vec3::scale(&second.bloch(), 2.0);
        let mut corr = [[0.0; 3]; 3];
        for (i, row) in corr.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = s[i] * r[j];
            }
        }
        Self::new_unchecked(s, r, corr)
    }

    /// The full 4×4 array with `r₀₀ = 1`.
    pub fn rows(&self) -> [[f64; 4]; 4] {
        let mut m = [[0.0; 4]; 4];
        m[0][0] = 1.0;
        for k in 0..3 {
            m[0][k + 1] = self.r[k];
            m[k + 1][0] = self.s[k];
            for l in 0..3 {
                m[k + 1][l + 1] = self.corr[k][l];
            }
        }
        m
    }

    /// Inverse of [`rows`](Self::rows); `m[0][0]` must be 1.
    pub fn from_rows(m: &[[f64; 4]; 4]) -> Result<Self> {
        if m.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        if (m[0][0] - 1.0).abs() > Tolerances::DEFAULT.oracle {
            return Err(Error::InvalidBlochMatrix(format!(
                "r00 = {} must equal 1",
                m[0][0]
            )));
        }
        let mut s = [0.0; 3];
        let mut r = [0.0; 3];
        let mut corr = [[0.0; 3]; 3];
        for k in 0..3 {
            r[k] = m[0][k + 1];
            s[k] = m[k + 1][0];
            for l in 0..3 {
                corr[k][l] = m[k + 1][l + 1];
            }
        }
        Self::new(s, r, corr)
    }

    /// Entry `r_μν`.
    pub fn entry(&self, mu: usize, nu: usize) -> f64 {
        self.rows()[mu][nu]
    }

    /// `ρ = ¼ Σ r_μν σ_μ⊗σ_ν`.
    pub fn density_matrix(&self) -> ComplexMatrix {
        let rows = self.rows();
        let mut rho = ComplexMatrix::zeros(4);
        for (mu, row) in rows.iter().enumerate() {
            for (nu, &c) in row.iter().enumerate() {
                if c != 0.0 {
                    rho = rho + ComplexMatrix::pauli2(mu, nu).scale_real(0.25 * c);
                }
            }
        }
        rho
    }

    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_eigen(&self.density_matrix())
            .map(|e| e.values[0])
            .unwrap_or(f64::NEG_INFINITY)
    }

    fn validate(&self) -> Result<()> {
        let flat = self.rows();
        if flat.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let report = inequality_suite(self);
        if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
            return Err(Error::InvalidBlochMatrix(format!(
                "{} violated by {}",
                bad.name, -bad.margin
            )));
        }
        Ok(())
    }

    pub fn is_locally_maximally_mixed(&self, tol: f64) -> bool {
        vec3::norm(&self.s) <= tol && vec3::norm(&self.r) <= tol
    }

    /// `tr(RᵀR)`.
    pub fn corr_frobenius_sq(&self) -> f64 {
        self.corr.iter().flatten().map(|x| x * x).sum()
    }

    pub fn max_abs_diff(&self, other: &BlochMatrix) -> f64 {
        let a = self.rows();
        let b = other.rows();
        a.iter()
            .flatten()
            .zip(b.iter().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for BlochMatrix {
    /// Four whitespace-separated rows, shortest round-trip representation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|x| format!("{}", x + 0.0)).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for BlochMatrix {
    type Err = Error;

    /// Exactly four non-blank lines of four reals each.
    fn from_str(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != 4 {
            return Err(Error::Parse(format!(
                "Bloch matrix needs 4 rows, found {}",
                lines.len()
            )));
        }
        let mut m = [[0.0; 4]; 4];
        for (i, line) in lines.iter().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected 4",
                    i + 1,
                    fields.len()
                )));
            }
            for (j, field) in fields.iter().enumerate() {
                m[i][j] = field
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| Error::Parse(format!("bad number `{field}` in row {}", i + 1)))?;
            }
        }
        Self::from_rows(&m)
    }
}

/// `r_μν = Re tr(ρ·σ_μ⊗σ_ν)` of a density matrix.
pub fn bloch_from_density(rho: &ComplexMatrix) -> Result<BlochMatrix> {
    check_density(rho)?;
    let mut m = [[0.0; 4]; 4];
    for (mu, row) in m.iter_mut().enumerate() {
        for (nu, c) in row.iter_mut().enumerate() {
            *c = (ComplexMatrix::pauli2(mu, nu) * *rho).trace().re;
        }
    }
    let mut s = [0.0; 3];
    let mut r = [0.0; 3];
    let mut corr = [[0.0; 3]; 3];
    for k in 0..3 {
        r[k] = m[0][k + 1];
        s[k] = m[k + 1][0];
        for l in 0..3 {
            corr[k][l] = m[k + 1][l + 1];
        }
    }
    Ok(BlochMatrix::new_unchecked(s, r, corr))
}

fn check_density(rho: &ComplexMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let tol = Tolerances::DEFAULT;
    let dev = rho.hermitian_deviation();
    if dev > tol.hermitian {
        return Err(Error::NotHermitian(dev));
    }
    let tr = rho.trace().re;
    if (tr - 1.0).abs() > tol.oracle {
        return Err(Error::InvalidDensity(format!("trace {tr} differs from 1")));
    }
    let min = hermitian_eigen(rho)?.values[0];
    if min < -tol.positivity {
        return Err(Error::InvalidDensity(format!("negative eigenvalue {min}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Marginal state: Bloch vector `s/2` for the first qubit, `r/2` for the second.
pub fn trace_out(bm: &BlochMatrix, keep: Subsystem) -> QubitState {
    let v = match keep {
        Subsystem::First => bm.s,
        Subsystem::Second => bm.r,
    };
    QubitState::new(vec3::scale(&v, 0.5)).expect("valid Bloch matrix has |s|, |r| <= 1")
}

/// Marginal computed by a numerical partial trace.
pub fn trace_out_oracle(bm: &BlochMatrix, keep: Subsystem) -> Result<QubitState> {
    let rho = bm.density_matrix();
    let reduced = match keep {
        Subsystem::First => partial_trace_second(&rho),
        Subsystem::Second => partial_trace_first(&rho),
    };
    QubitState::from_density(&reduced)
}

/// A qubit class projector as `c₀·I + c·σ`.
fn class_coefficients(axis: &Vec3, class: QubitClass) -> (f64, Vec3) {
    match class {
        QubitClass::Empty => (0.0, [0.0; 3]),
        QubitClass::Both => (1.0, [0.0; 3]),
        QubitClass::Plus => (0.5, vec3::scale(axis, 0.5)),
        QubitClass::Minus => (0.5, vec3::scale(axis, -0.5)),
    }
}

fn check_unit(axis: &Vec3) -> Result<()> {
    let n = vec3::norm(axis);
    if (n - 1.0).abs() > Tolerances::DEFAULT.unit_axis {
        return Err(Error::NotUnit(n));
    }
    Ok(())
}

/// Membership function of the question `P_A^{εA} ⊗ P_B^{εB}`.
///
/// With `P = p₀I + p·σ` and `Q = q₀I + q·σ` this is
/// `p₀q₀ + q₀ s·p + p₀ r·q + pᵀRq`, which gives `¼(1 + s·â + r·b̂ + âᵀRb̂)` for
/// `++` and `½(1 + s·â)` when the second factor is the identity.
pub fn membership_two(
    a: &Vec3,
    b: &Vec3,
    bm: &BlochMatrix,
    class_a: QubitClass,
    class_b: QubitClass,
) -> Result<f64> {
    if class_a.separates() {
        check_unit(a)?;
    }
    if class_b.separates() {
        check_unit(b)?;
    }
    let (p0, p) = class_coefficients(a, class_a);
    let (q0, q) = class_coefficients(b, class_b);
    Ok(p0 * q0 + q0 * vec3::dot(&bm.s, &p) + p0 * vec3::dot(&bm.r, &q)
        + vec3::bilinear(&p, &bm.corr, &q))
}

/// `tr((P_A ⊗ P_B)·ρ)` on 4×4 matrices.
pub fn membership_two_oracle(
    a: &Vec3,
    b: &Vec3,
    bm: &BlochMatrix,
    class_a: QubitClass,
    class_b: QubitClass,
) -> Result<f64> {
    let pa = class_projector(a, class_a);
    let pb = class_projector(b, class_b);
    let p = Projector::new(tensor_product(pa.matrix(), pb.matrix())?)?;
    trace_product(&p, &bm.density_matrix())
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bell {
    /// `(|00⟩ + |11⟩)/√2`
    PhiPlus,
    /// `(|00⟩ − |11⟩)/√2`
    PhiMinus,
    /// `(|01⟩ + |10⟩)/√2`
    PsiPlus,
    /// `(|01⟩ − |10⟩)/√2`, the singlet.
    PsiMinus,
}

impl Bell {
    pub const ALL: [Bell; 4] = [Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus];

    pub fn state(self) -> PureTwoQubit {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let (a, b, c, d) = match self {
            Bell::PhiPlus => (h, 0.0, 0.0, h),
            Bell::PhiMinus => (h, 0.0, 0.0, -h),
            Bell::PsiPlus => (0.0, h, h, 0.0),
            Bell::PsiMinus => (0.0, h, -h, 0.0),
        };
        PureTwoQubit::new([
            [C64::new(a, 0.0), C64::new(b, 0.0)],
            [C64::new(c, 0.0), C64::new(d, 0.0)],
        ])
        .expect("normalized")
    }

    pub fn bloch(self) -> BlochMatrix {
        self.state().bloch()
    }
}

/// Pure two-qubit state `Σ λ_ij |ij⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureTwoQubit {
    pub lambda: [[C64; 2]; 2],
}

impl PureTwoQubit {
    pub fn new(lambda: [[C64; 2]; 2]) -> Result<Self> {
        let n2: f64 = lambda.iter().flatten().map(|z| z.norm_sqr()).sum();
        if !n2.is_finite() {
            return Err(Error::NonFinite);
        }
        if (n2 - 1.0).abs() > Tolerances::DEFAULT.oracle {
            return Err(Error::NotNormalized(n2));
        }
        Ok(Self { lambda })
    }

    /// Amplitudes in the order `|00⟩, |01⟩, |10⟩, |11⟩`.
    pub fn from_vector(v: &[C64]) -> Result<Self> {
        if v.len() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: v.len(),
            });
        }
        Self::new([[v[0], v[1]], [v[2], v[3]]])
    }

    pub fn vector(&self) -> [C64; 4] {
        let l = self.lambda;
        [l[0][0], l[0][1], l[1][0], l[1][1]]
    }

    pub fn density_matrix(&self) -> ComplexMatrix {
        let v = self.vector();
        ComplexMatrix::outer(&v, &v)
    }

    pub fn bloch(&self) -> BlochMatrix {
        bloch_from_density(&self.density_matrix()).expect("pure states are valid")
    }

    /// `λ = ⟨φ|σ|φ⟩` for the unnormalized conditional state
    /// `φ = λ₁|0⟩ + λ₂|1⟩` of the second qubit, `λ₁ = λ₀₀`, `λ₂ = λ₀₁`.
    pub fn lambda_vector(&self) -> Vec3 {
        let l1 = self.lambda[0][0];
        let l2 = self.lambda[0][1];
        let cross = l1.conj() * l2;
        [2.0 * cross.re, 2.0 * cross.im, l1.norm_sqr() - l2.norm_sqr()]
    }
}

/// `½(|λ₁|² + |λ₂|² + b̂·λ)`: the `++` membership of a pure state with `â = ẑ`.
pub fn membership_pure_two(psi: &PureTwoQubit, b: &Vec3) -> Result<f64> {
    check_unit(b)?;
    let l1 = psi.lambda[0][0];
    let l2 = psi.lambda[0][1];
    Ok(0.5 * (l1.norm_sqr() + l2.norm_sqr() + vec3::dot(b, &psi.lambda_vector())))
}

/// `⟨ψ|P_ẑ⁺ ⊗ P_b̂⁺|ψ⟩`.
pub fn membership_pure_two_oracle(psi: &PureTwoQubit, b: &Vec3) -> Result<f64> {
    let pa = class_projector(&[0.0, 0.0, 1.0], QubitClass::Plus);
    let pb = class_projector(b, QubitClass::Plus);
    let p = Projector::new(tensor_product(pa.matrix(), pb.matrix())?)?;
    trace_product(&p, &psi.density_matrix())
}

/// Every necessary condition on a Bloch matrix, with margins `bound − value`.
pub fn inequality_suite(bm: &BlochMatrix) -> Report {
    let tol = Tolerances::DEFAULT;
    let mut report = Report::new();
    let bound = 1.0 + tol.bloch_bound;
    report.push(Check::from_margin("local-s", bound - vec3::norm(&bm.s)));
    report.push(Check::from_margin("local-r", bound - vec3::norm(&bm.r)));
    let entry = bm.corr.iter().flatten().map(|x| x.abs()).fold(0.0, f64::max);
    report.push(Check::from_margin("corr-entries", bound - entry));
    let row = bm.corr.iter().map(vec3::norm).fold(0.0, f64::max);
    report.push(Check::from_margin("corr-rows", bound - row));
    let col = (0..3)
        .map(|j| vec3::norm(&[bm.corr[0][j], bm.corr[1][j], bm.corr[2][j]]))
        .fold(0.0, f64::max);
    report.push(Check::from_margin("corr-columns", bound - col));
    let total = bm.corr_frobenius_sq() + vec3::dot(&bm.s, &bm.s) + vec3::dot(&bm.r, &bm.r);
    report.push(Check::from_margin(
        "trace-bound",
        3.0 + tol.bloch_trace_bound - total,
    ));
    report.push(Check::from_margin(
        "positivity",
        bm.min_eigenvalue() + tol.positivity,
    ));
    report
}

/// Random density matrices `GG†/tr` checked against [`inequality_suite`];
/// one line per inequality with the worst margin over the sweep.
pub fn positivity_sweep(samples: usize, seed: u64) -> Report {
    let mut report = Report::with_seed(seed);
    let mut worst: Vec<(String, f64, Option<usize>)> = Vec::new();
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed, i as u64);
        let rho = sampling::density_matrix(&mut rng, 4);
        let bm = match bloch_from_density(&rho) {
            Ok(bm) => bm,
            Err(e) => {
                report.push(Check::new("sample-density", false, f64::NAN).with_witness(format!(
                    "sample={i} {e}"
                )));
                continue;
            }
        };
        for (k, c) in inequality_suite(&bm).checks.into_iter().enumerate() {
            if worst.len() <= k {
                worst.push((c.name.clone(), c.margin, Some(i)));
            } else if c.margin < worst[k].1 {
                worst[k].1 = c.margin;
                worst[k].2 = Some(i);
            }
        }
    }
    for (name, margin, at) in worst {
        let mut check = Check::from_margin(format!("sweep-{name}"), margin);
        if margin < 0.0 {
            check = check.with_witness(format!("sample={}", at.unwrap_or(0)));
        }
        report.push(check);
    }
    report
}

/// Random valid Bloch matrix drawn through a random density matrix.
pub fn random_bloch<R: Rng + ?Sized>(rng: &mut R) -> BlochMatrix {
    bloch_from_density(&sampling::density_matrix(rng, 4)).expect("sampled density is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::membership_qubit;

    const Z: Vec3 = [0.0, 0.0, 1.0];

    fn ket00() -> PureTwoQubit {
        PureTwoQubit::from_vector(&[
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ])
        .unwrap()
    }

    #[test]
    fn bloch_matrix_examples() {
        let mixed = bloch_from_density(&ComplexMatrix::identity(4).scale_real(0.25)).unwrap();
        assert_eq!(mixed, BlochMatrix::maximally_mixed());

        let zz = ket00().bloch();
        assert_eq!(zz.s, Z);
        assert_eq!(zz.r, Z);
        assert_eq!(zz.corr, [[0.0; 3], [0.0; 3], [0.0, 0.0, 1.0]]);

        let bell = Bell::PhiPlus.bloch();
        assert!(bell.is_locally_maximally_mixed(1e-15));
        let expected = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        for (row, exp) in bell.corr.iter().zip(&expected) {
            for (x, y) in row.iter().zip(exp) {
                assert!((x - y).abs() < 1e-15);
            }
        }
        let singlet = Bell::PsiMinus.bloch();
        for i in 0..3 {
            assert!((singlet.corr[i][i] + 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn density_round_trip() {
        let mut rng = sampling::rng_for(21, 0);
        for _ in 0..100 {
            let rho = sampling::density_matrix(&mut rng, 4);
            let bm = bloch_from_density(&rho).unwrap();
            assert!((bm.density_matrix() - rho).max_abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_invalid_densities() {
        let rho = ComplexMatrix::from_real_diagonal(&[1.0, 0.5, -0.5, 0.0]);
        assert!(bloch_from_density(&rho).is_err());
        let rho = ComplexMatrix::from_real_diagonal(&[0.5, 0.5, 0.5, 0.0]);
        assert!(bloch_from_density(&rho).is_err());
        // s = r = ẑ with R = 0 is not a state
        assert!(BlochMatrix::new(Z, Z, [[0.0; 3]; 3]).is_err());
    }

    #[test]
    fn marginals() {
        let bell = Bell::PhiPlus.bloch();
        assert_eq!(trace_out(&bell, Subsystem::First).bloch(), [0.0; 3]);
        assert_eq!(trace_out(&ket00().bloch(), Subsystem::Second).bloch(), [0.0, 0.0, 0.5]);

        let mut rng = sampling::rng_for(22, 0);
        for _ in 0..100 {
            let q1 = QubitState::new(sampling::bloch_ball_point(&mut rng)).unwrap();
            let q2 = QubitState::new(sampling::bloch_ball_point(&mut rng)).unwrap();
            let bm = BlochMatrix::product(&q1, &q2);
            let m1 = trace_out(&bm, Subsystem::First);
            let o1 = trace_out_oracle(&bm, Subsystem::First).unwrap();
            assert!(vec3::max_abs_diff(&m1.bloch(), &q1.bloch()) < 1e-12);
            assert!(vec3::max_abs_diff(&o1.bloch(), &q1.bloch()) < 1e-12);
            let o2 = trace_out_oracle(&bm, Subsystem::Second).unwrap();
            assert!(vec3::max_abs_diff(&o2.bloch(), &q2.bloch()) < 1e-12);
        }
    }

    #[test]
    fn membership_examples() {
        use QubitClass::*;
        let a = [0.6, 0.0, 0.8];
        let b = [0.0, 1.0, 0.0];
        let mixed = BlochMatrix::maximally_mixed();
        assert_eq!(membership_two(&a, &b, &mixed, Plus, Plus).unwrap(), 0.25);
        let bell = Bell::PhiPlus.bloch();
        assert!((membership_two(&Z, &Z, &bell, Plus, Plus).unwrap() - 0.5).abs() < 1e-15);
        let zz = ket00().bloch();
        assert_eq!(membership_two(&Z, &Z, &zz, Plus, Plus).unwrap(), 1.0);
        assert_eq!(membership_two(&Z, &Z, &zz, Both, Empty).unwrap(), 0.0);
        assert_eq!(membership_two(&Z, &Z, &zz, Both, Both).unwrap(), 1.0);
    }

    #[test]
    fn six_types_match_oracle() {
        let mut rng = sampling::rng_for(23, 0);
        for _ in 0..300 {
            let bm = random_bloch(&mut rng);
            let a = sampling::unit_vector(&mut rng);
            let b = sampling::unit_vector(&mut rng);
            for ca in QubitClass::ALL {
                for cb in QubitClass::ALL {
                    let f = membership_two(&a, &b, &bm, ca, cb).unwrap();
                    let o = membership_two_oracle(&a, &b, &bm, ca, cb).unwrap();
                    assert!((f - o).abs() < 1e-12, "{ca}{cb}: {f} vs {o}");
                    assert!((-1e-12..=1.0 + 1e-12).contains(&f));
                }
            }
        }
    }

    #[test]
    fn resolution_of_identity_and_marginal_consistency() {
        use QubitClass::*;
        let mut rng = sampling::rng_for(24, 0);
        for _ in 0..300 {
            let bm = random_bloch(&mut rng);
            let a = sampling::unit_vector(&mut rng);
            let b = sampling::unit_vector(&mut rng);
            let sum: f64 = [(Plus, Plus), (Plus, Minus), (Minus, Plus), (Minus, Minus)]
                .iter()
                .map(|&(x, y)| membership_two(&a, &b, &bm, x, y).unwrap())
                .sum();
            assert!((sum - 1.0).abs() < 1e-12);
            let type5 = membership_two(&a, &b, &bm, Plus, Both).unwrap();
            let marginal = membership_qubit(&a, &trace_out(&bm, Subsystem::First), Plus).unwrap();
            assert!((type5 - marginal).abs() < 1e-12);
            let type5b = membership_two(&a, &b, &bm, Both, Plus).unwrap();
            let marginal_b =
                membership_qubit(&b, &trace_out(&bm, Subsystem::Second), Plus).unwrap();
            assert!((type5b - marginal_b).abs() < 1e-12);
            let pp = membership_two(&a, &b, &bm, Plus, Plus).unwrap();
            assert!(pp + membership_two(&a, &b, &bm, Plus, Minus).unwrap() <= 1.0 + 1e-12);
            assert!(pp + membership_two(&a, &b, &bm, Minus, Minus).unwrap() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn non_unit_axes_are_rejected() {
        let bm = BlochMatrix::maximally_mixed();
        let r = membership_two(&[0.0, 0.0, 2.0], &Z, &bm, QubitClass::Plus, QubitClass::Plus);
        assert!(matches!(r, Err(Error::NotUnit(_))));
    }

    #[test]
    fn pure_state_form() {
        let b = [0.0, 0.6, 0.8];
        assert_eq!(membership_pure_two(&ket00(), &Z).unwrap(), 1.0);
        let bell = Bell::PhiPlus.state();
        assert!((membership_pure_two(&bell, &Z).unwrap() - 0.5).abs() < 1e-15);
        let one_one = PureTwoQubit::from_vector(&[C64::new(0.0, 0.0); 3]
            .iter()
            .copied()
            .chain([C64::new(1.0, 0.0)])
            .collect::<Vec<_>>())
        .unwrap();
        assert_eq!(membership_pure_two(&one_one, &b).unwrap(), 0.0);

        let mut rng = sampling::rng_for(25, 0);
        for _ in 0..500 {
            let psi = PureTwoQubit::from_vector(&sampling::pure_state(&mut rng, 4)).unwrap();
            let b = sampling::unit_vector(&mut rng);
            let f = membership_pure_two(&psi, &b).unwrap();
            let o = membership_pure_two_oracle(&psi, &b).unwrap();
            assert!((f - o).abs() < 1e-12);
        }
    }

    #[test]
    fn inequalities() {
        let mixed = inequality_suite(&BlochMatrix::maximally_mixed());
        assert!(mixed.all_passed());
        let bell = Bell::PhiPlus.bloch();
        assert!(inequality_suite(&bell).all_passed());
        assert!((bell.corr_frobenius_sq() - 3.0).abs() < 1e-12);
        let sweep = positivity_sweep(300, 1);
        assert!(sweep.all_passed(), "{sweep}");
    }

    #[test]
    fn file_format() {
        let bell = Bell::PhiPlus.bloch();
        let text = bell.to_string();
        let back: BlochMatrix = text.parse().unwrap();
        assert_eq!(back, bell);
        assert!("1 0 0 0\n0 0 0 0\n0 0 0 0".parse::<BlochMatrix>().is_err());
        assert!("2 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0".parse::<BlochMatrix>().is_err());
        assert!("1 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0".parse::<BlochMatrix>().is_err());
        assert!("1 0 0 x\n0 0 0 0\n0 0 0 0\n0 0 0 0".parse::<BlochMatrix>().is_err());
        let mixed: BlochMatrix = "1 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n".parse().unwrap();
        assert_eq!(mixed, BlochMatrix::maximally_mixed());
    }
}
