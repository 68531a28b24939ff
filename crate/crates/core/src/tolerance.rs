//! Numerical tolerances, collected in one record.

use crate::error::{Error, Result};

/// Every threshold used by validators, oracles and sweeps.
///
/// Constructors validate against [`Tolerances::DEFAULT`]; the report-producing
/// checks take a `&Tolerances` so a caller can tighten or loosen a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Entrywise hermiticity of projectors and observables.
    pub hermitian: f64,
    /// Entrywise idempotence `P·P = P`.
    pub idempotent: f64,
    /// Eigen-pair residual and unitarity of the eigenvector matrix.
    pub eigen: f64,
    /// Eigenvalue threshold separating the kernel from the range in lattice operations.
    pub subspace: f64,
    /// Largest tolerated imaginary part of `tr(P·ρ)`.
    pub trace_imag: f64,
    /// Eigenvalues closer than this are merged.
    pub eigen_dedup: f64,
    /// Slack on the Bloch-ball radius `|ρ| ≤ 1/2`.
    pub bloch_ball: f64,
    /// A qubit state is pure when `|ρ|` is within this of `1/2`.
    pub purity: f64,
    /// Deviation of an axis norm from one.
    pub unit_axis: f64,
    /// Smallest admissible eigenvalue of a reconstructed two-qubit density matrix.
    pub positivity: f64,
    /// Slack on the local-vector and correlation-matrix bounds.
    pub bloch_bound: f64,
    /// Slack on `tr(RᵀR) + |s|² + |r|² ≤ 3`.
    pub bloch_trace_bound: f64,
    /// Qutrit symmetry conditions and entangled-basis zero block.
    pub qutrit: f64,
    /// Closed form versus trace or conjugation oracle.
    pub oracle: f64,
    /// Closed-form torus action versus exponential-conjugation oracle.
    pub torus: f64,
    /// Step for centered finite differences.
    pub fd_step: f64,
    /// Agreement of finite differences with analytic vector fields.
    pub fd_agreement: f64,
    /// Sup-norm slack for fuzzy inclusion, disjointness and equality on samples.
    pub fuzzy: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        hermitian: 1e-12,
        idempotent: 1e-10,
        eigen: 1e-10,
        subspace: 1e-8,
        trace_imag: 1e-12,
        eigen_dedup: 1e-12,
        bloch_ball: 1e-12,
        purity: 1e-10,
        unit_axis: 1e-12,
        positivity: 1e-10,
        bloch_bound: 1e-10,
        bloch_trace_bound: 1e-9,
        qutrit: 1e-10,
        oracle: 1e-12,
        torus: 1e-10,
        fd_step: 1e-5,
        fd_agreement: 1e-8,
        fuzzy: 1e-12,
    };
}

impl Tolerances {
    /// Overrides one field by name, e.g. `set("oracle", 1e-10)`.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value >= 0.0) {
            return Err(Error::Parse(format!("tolerance `{name}` must be a non-negative number")));
        }
        let slot = match name {
            "hermitian" => &mut self.hermitian,
            "idempotent" => &mut self.idempotent,
            "eigen" => &mut self.eigen,
            "subspace" => &mut self.subspace,
            "trace_imag" => &mut self.trace_imag,
            "eigen_dedup" => &mut self.eigen_dedup,
            "bloch_ball" => &mut self.bloch_ball,
            "purity" => &mut self.purity,
            "unit_axis" => &mut self.unit_axis,
            "positivity" => &mut self.positivity,
            "bloch_bound" => &mut self.bloch_bound,
            "bloch_trace_bound" => &mut self.bloch_trace_bound,
            "qutrit" => &mut self.qutrit,
            "oracle" => &mut self.oracle,
            "torus" => &mut self.torus,
            "fd_step" => &mut self.fd_step,
            "fd_agreement" => &mut self.fd_agreement,
            "fuzzy" => &mut self.fuzzy,
            other => return Err(Error::Parse(format!("unknown tolerance `{other}`"))),
        };
        *slot = value;
        Ok(())
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
