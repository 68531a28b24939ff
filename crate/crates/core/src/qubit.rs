//! The qubit: Bloch-ball states, Pauli-coefficient observables and their
//! membership functions `f_â(ρ) = 1/2 + â·ρ`.

use std::fmt;
use std::str::FromStr;

use crate::borel::{classify, BorelSet, QubitClass};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, trace_product, ComplexMatrix, Projector, C64};
use crate::tolerance::Tolerances;
use crate::vec3::{self, Vec3};

/// Qubit state `ρ = I/2 + ρ·σ` stored by its Bloch vector, `|ρ| ≤ 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    bloch: Vec3,
}

impl QubitState {
    /// Rejects vectors outside the ball of radius 1/2 instead of projecting them.
    pub fn new(bloch: Vec3) -> Result<Self> {
        if bloch.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n2 = vec3::dot(&bloch, &bloch);
        if n2 > 0.25 + Tolerances::DEFAULT.bloch_ball {
            return Err(Error::OutsideBlochBall { norm: n2.sqrt() });
        }
        Ok(Self { bloch })
    }

    pub fn maximally_mixed() -> Self {
        Self { bloch: [0.0; 3] }
    }

    /// State of the normalized vector `ψ₀|0⟩ + ψ₁|1⟩`.
    pub fn from_amplitudes(psi0: C64, psi1: C64) -> Result<Self> {
        let n2 = psi0.norm_sqr() + psi1.norm_sqr();
        if (n2 - 1.0).abs() > Tolerances::DEFAULT.oracle {
            return Err(Error::NotNormalized(n2));
        }
        // ρ₁₀ = ψ₁ψ₀* = ρ₁ + iρ₂
        let off = psi1 * psi0.conj();
        Self::new([off.re, off.im, 0.5 * (psi0.norm_sqr() - psi1.norm_sqr())])
    }

    /// Reads the Bloch vector off a 2×2 density matrix.
    pub fn from_density(rho: &ComplexMatrix) -> Result<Self> {
        if rho.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
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
        let off = rho[(1, 0)];
        Self::new([off.re, off.im, 0.5 * (rho[(0, 0)].re - rho[(1, 1)].re)])
    }

    pub fn bloch(&self) -> Vec3 {
        self.bloch
    }

    pub fn radius(&self) -> f64 {
        vec3::norm(&self.bloch)
    }

    pub fn is_pure(&self) -> bool {
        (self.radius() - 0.5).abs() <= Tolerances::DEFAULT.purity
    }

    /// `I/2 + ρ·σ`.
    pub fn density_matrix(&self) -> ComplexMatrix {
        let [x, y, z] = self.bloch;
        ComplexMatrix::from_rows(&[
            &[C64::new(0.5 + z, 0.0), C64::new(x, -y)],
            &[C64::new(x, y), C64::new(0.5 - z, 0.0)],
        ])
        .expect("finite 2x2")
    }
}

impl fmt::Display for QubitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // + 0.0 turns -0 into 0
        let [x, y, z] = self.bloch.map(|v| v + 0.0);
        write!(f, "{x},{y},{z}")
    }
}

impl FromStr for QubitState {
    type Err = Error;

    /// `x,y,z`, optionally prefixed with `rho=`, separated by commas or whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix("rho=").unwrap_or(body);
        Self::new(parse_vec3(body)?)
    }
}

/// Parses three reals separated by commas and/or whitespace.
pub fn parse_vec3(s: &str) -> Result<Vec3> {
    let parts: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected three components, got `{s}`")));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::Parse(format!("bad number `{p}`")))?;
    }
    Ok(v)
}

/// Self-adjoint operator `A = a₀·I + a·σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observable2 {
    pub a0: f64,
    pub avec: Vec3,
}

impl Observable2 {
    pub fn new(a0: f64, avec: Vec3) -> Result<Self> {
        if !a0.is_finite() || avec.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { a0, avec })
    }

    pub fn matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::identity(2).scale_real(self.a0);
        for (k, ak) in self.avec.iter().enumerate() {
            m = m + ComplexMatrix::pauli(k + 1).scale_real(*ak);
        }
        m
    }

    /// Unit vector `a/|a|`; `None` for the degenerate observable `a₀·I`.
    pub fn axis(&self) -> Option<Vec3> {
        vec3::normalized(&self.avec)
    }

    /// Class of `e` relative to this observable's eigenvalues.
    pub fn classify(&self, e: &BorelSet) -> QubitClass {
        let (lo, hi) = eigenvalues2(self);
        classify(e, &[lo, hi]).qubit_class()
    }
}

impl FromStr for Observable2 {
    type Err = Error;

    /// `a0;a1,a2,a3`.
    fn from_str(s: &str) -> Result<Self> {
        let (a0, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("observable `{s}` must read `a0;a1,a2,a3`")))?;
        let a0 = a0
            .trim()
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad a0 `{a0}`")))?;
        Self::new(a0, parse_vec3(rest)?)
    }
}

/// `(a₀ − |a|, a₀ + |a|)`.
pub fn eigenvalues2(a: &Observable2) -> (f64, f64) {
    let n = vec3::norm(&a.avec);
    (a.a0 - n, a.a0 + n)
}

/// Projector of a qubit class along a unit axis: `0`, `I`, or `(I ± â·σ)/2`.
pub fn class_projector(axis: &Vec3, class: QubitClass) -> Projector {
    let sign = match class {
        QubitClass::Empty => return Projector::zero(2),
        QubitClass::Both => return Projector::identity(2),
        QubitClass::Plus => 1.0,
        QubitClass::Minus => -1.0,
    };
    let mut m = ComplexMatrix::identity(2);
    for (k, ak) in axis.iter().enumerate() {
        m = m + ComplexMatrix::pauli(k + 1).scale_real(sign * ak);
    }
    Projector::new(m.scale_real(0.5)).expect("unit axis gives a projector")
}

/// Spectral projector `P_A^E` onto the eigenvectors of `A` with eigenvalue in `E`.
pub fn spectral_projector(a: &Observable2, e: &BorelSet) -> Projector {
    let class = a.classify(e);
    match a.axis() {
        Some(axis) => class_projector(&axis, class),
        None => {
            // degenerate eigenvalues collapse to a single class
            assert!(!class.separates(), "a0*I has a single eigenvalue");
            class_projector(&[0.0, 0.0, 1.0], class)
        }
    }
}

fn check_unit(axis: &Vec3) -> Result<()> {
    let n = vec3::norm(axis);
    if (n - 1.0).abs() > Tolerances::DEFAULT.unit_axis {
        return Err(Error::NotUnit(n));
    }
    Ok(())
}

/// Membership function of a qubit question along `â`:
/// `0`, `1`, `1/2 + â·ρ` or `1/2 − â·ρ` by class.
pub fn membership_qubit(axis: &Vec3, rho: &QubitState, class: QubitClass) -> Result<f64> {
    let sign = match class {
        QubitClass::Empty => return Ok(0.0),
        QubitClass::Both => return Ok(1.0),
        QubitClass::Plus => 1.0,
        QubitClass::Minus => -1.0,
    };
    check_unit(axis)?;
    Ok(0.5 + sign * vec3::dot(axis, &rho.bloch))
}

/// `tr(P·ρ)` with the class projector, computed on 2×2 matrices.
pub fn membership_qubit_oracle(axis: &Vec3, rho: &QubitState, class: QubitClass) -> Result<f64> {
    if class.separates() {
        check_unit(axis)?;
    }
    trace_product(&class_projector(axis, class), &rho.density_matrix())
}

/// Real pure state `cos α|0⟩ + sin α|1⟩`.
pub fn pure_state_at_angle(alpha: f64) -> QubitState {
    QubitState::from_amplitudes(C64::new(alpha.cos(), 0.0), C64::new(alpha.sin(), 0.0))
        .expect("unit amplitudes")
}

/// `cos²α`: the `E₊` membership along ẑ of the state `cos α|0⟩ + sin α|1⟩`.
pub fn membership_pure_angle(alpha: f64) -> f64 {
    alpha.cos().powi(2)
}

/// `f_â + f_b̂ ≤ 1` on every state iff `â = −b̂`.
pub fn orthogonal_pair(a: &Vec3, b: &Vec3) -> bool {
    vec3::max_abs_diff(a, &vec3::neg(b)) <= Tolerances::DEFAULT.unit_axis
}

/// A pure state along `(â + b̂)/|â + b̂|` where `f_â + f_b̂ = 1 + |â + b̂|/2 > 1`.
/// `None` when the pair is orthogonal.
pub fn orthogonality_violation(a: &Vec3, b: &Vec3) -> Option<QubitState> {
    if orthogonal_pair(a, b) {
        return None;
    }
    let dir = vec3::normalized(&vec3::add(a, b))?;
    QubitState::new(vec3::scale(&dir, 0.5)).ok()
}

/// Eigenvalues computed numerically, for cross-checking [`eigenvalues2`].
pub fn eigenvalues2_numeric(a: &Observable2) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(&a.matrix())?.values)
}
