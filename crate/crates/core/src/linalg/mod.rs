//! Dense complex linear algebra at dimensions 2 and 4.
//!
//! This is the ground truth the closed-form membership formulas are checked
//! against: Pauli products, hermitian eigen-decomposition, the matrix
//! exponential, and the projector lattice with `tr(P·ρ)` as the probability of
//! a yes-no question.

mod eigen;
mod expm;
mod lattice;
mod matrix;

pub use eigen::{dedup_sorted, hermitian_eigen, HermitianEigen};
pub use expm::{exp_i, matrix_exp};
pub use lattice::{
    distributivity_witness, orthocomplement, orthomodular_check, random_projector,
    subspace_join, subspace_meet, DistributivityWitness, Projector,
};
pub use matrix::{
    partial_trace_first, partial_trace_second, tensor_product, tensor_vec, ComplexMatrix, C64,
};

use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// `Re tr(P·ρ)`, the probability that the question `P` is answered yes in state `ρ`.
///
/// An imaginary part above tolerance means one of the inputs is not hermitian.
pub fn trace_product(p: &Projector, rho: &ComplexMatrix) -> Result<f64> {
    if p.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: rho.dim(),
        });
    }
    let t = (*p.matrix() * *rho).trace();
    if t.im.abs() > Tolerances::DEFAULT.trace_imag {
        return Err(Error::ImaginaryTrace(t.im));
    }
    Ok(t.re)
}

/// `U·ρ·U†`.
pub fn conjugate(u: &ComplexMatrix, rho: &ComplexMatrix) -> ComplexMatrix {
    *u * *rho * u.adjoint()
}
