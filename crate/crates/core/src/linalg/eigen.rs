//! Cyclic Jacobi eigen-solver for small hermitian matrices.

use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

const MAX_SWEEPS: usize = 64;

/// Full eigensystem of a hermitian matrix.
///
/// Eigenvalues are ascending; column `i` of `vectors` is the eigenvector of
/// `values[i]`. The columns are orthonormal, including inside degenerate
/// eigenspaces.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// Eigenvector for `values[i]`.
    pub fn vector(&self, i: usize) -> Vec<C64> {
        self.vectors.column(i)
    }

    /// Distinct eigenvalues, merging any two closer than `tol`.
    pub fn distinct_values(&self, tol: f64) -> Vec<f64> {
        dedup_sorted(&self.values, tol)
    }

    /// Projector onto the span of the eigenvectors whose index satisfies `keep`.
    pub fn projector_where(&self, keep: impl Fn(usize, f64) -> bool) -> ComplexMatrix {
        let n = self.vectors.dim();
        let mut p = ComplexMatrix::zeros(n);
        for (i, &l) in self.values.iter().enumerate() {
            if keep(i, l) {
                let v = self.vector(i);
                p = p + ComplexMatrix::outer(&v, &v);
            }
        }
        p
    }

    /// Largest residual `|A·v_i − λ_i·v_i|` over entries and eigenpairs.
    pub fn residual(&self, a: &ComplexMatrix) -> f64 {
        let mut worst = 0.0_f64;
        for (i, &l) in self.values.iter().enumerate() {
            let v = self.vector(i);
            for (av, vv) in a.apply(&v).iter().zip(&v) {
                worst = worst.max((av - vv * l).norm());
            }
        }
        worst
    }
}

/// Merges ascending values that lie within `tol` of the previous kept value.
pub fn dedup_sorted(values: &[f64], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(values.len());
    for &v in values {
        match out.last() {
            Some(&last) if (v - last).abs() <= tol => {}
            _ => out.push(v),
        }
    }
    out
}

/// Eigen-decomposition of a hermitian matrix by cyclic complex Jacobi rotations.
pub fn hermitian_eigen(a: &ComplexMatrix) -> Result<HermitianEigen> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let dev = a.hermitian_deviation();
    if dev > Tolerances::DEFAULT.hermitian {
        return Err(Error::NotHermitian(dev));
    }
    let n = a.dim();
    // symmetrize so rounding in the input cannot leak into the rotations
    let mut m = (*a + a.adjoint()).scale_real(0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);

    let mut converged = false;
    let mut previous = f64::INFINITY;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
            .map(|(p, q)| m[(p, q)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        // stop at roundoff level, or when a sweep no longer makes progress
        if off <= 1e-16 * scale || (off >= previous && off <= 1e-13 * scale) {
            converged = true;
            break;
        }
        previous = off;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (k, &i) in order.iter().enumerate() {
        vectors.set_column(k, &v.column(i));
    }
    Ok(HermitianEigen { values, vectors })
}

/// One Jacobi step annihilating the `(p, q)` entry: `m ← U†·m·U`, `v ← v·U`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // U = diag(1, e^{-iφ}) on (p, q) followed by a real rotation
    let n = m.dim();
    let mut u = ComplexMatrix::identity(n);
    let ph = phase.conj();
    u[(p, p)] = C64::new(c, 0.0);
    u[(p, q)] = C64::new(s, 0.0);
    u[(q, p)] = ph * (-s);
    u[(q, q)] = ph * c;

    *m = u.adjoint() * *m * u;
    m[(p, q)] = C64::new(0.0, 0.0);
    m[(q, p)] = C64::new(0.0, 0.0);
    for i in 0..n {
        m[(i, i)] = C64::new(m[(i, i)].re, 0.0);
    }
    *v = *v * u;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::tensor_product;

    fn observable(a0: f64, a: [f64; 3]) -> ComplexMatrix {
        let mut m = ComplexMatrix::identity(2).scale_real(a0);
        for (k, ak) in a.iter().enumerate() {
            m = m + ComplexMatrix::pauli(k + 1).scale_real(*ak);
        }
        m
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn sigma3_spectrum() {
        let e = hermitian_eigen(&ComplexMatrix::pauli(3)).unwrap();
        assert_eq!(e.values, vec![-1.0, 1.0]);
    }

    #[test]
    fn sigma3_tensor_sigma3_has_doubly_degenerate_spectrum() {
        let c = tensor_product(&ComplexMatrix::pauli(3), &ComplexMatrix::pauli(3)).unwrap();
        let e = hermitian_eigen(&c).unwrap();
        assert!(close(&e.values, &[-1.0, -1.0, 1.0, 1.0], 1e-15));
        assert_eq!(e.distinct_values(1e-12), vec![-1.0, 1.0]);
    }

    #[test]
    fn sigma1_tensor_sigma2_spectrum() {
        // σ₁⊗σ₂ squares to the identity and is traceless, so ±1 each twice
        let c = ComplexMatrix::pauli2(1, 2);
        let e = hermitian_eigen(&c).unwrap();
        assert!(close(&e.values, &[-1.0, -1.0, 1.0, 1.0], 1e-14));
        assert!(e.residual(&c) < 1e-10);
        assert!(e.vectors.unitarity_deviation() < 1e-10);
    }

    #[test]
    fn pauli_observable_eigenvalues() {
        // |a| = 3, so λ± = 2 ± 3
        let a = observable(2.0, [1.0, 2.0, 2.0]);
        let e = hermitian_eigen(&a).unwrap();
        assert!(close(&e.values, &[-1.0, 5.0], 1e-13));
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eigen(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn complex_four_by_four() {
        let a = ComplexMatrix::pauli2(1, 2).scale_real(0.3)
            + ComplexMatrix::pauli2(2, 3).scale_real(-1.1)
            + ComplexMatrix::pauli2(0, 2).scale_real(0.7)
            + ComplexMatrix::pauli2(3, 0).scale_real(0.2);
        let e = hermitian_eigen(&a).unwrap();
        assert!(e.residual(&a) < 1e-12);
        assert!(e.vectors.unitarity_deviation() < 1e-12);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let tr: f64 = e.values.iter().sum();
        assert!(tr.abs() < 1e-13);
    }

    #[test]
    fn degenerate_identity_multiple() {
        let e = hermitian_eigen(&ComplexMatrix::identity(4).scale_real(2.5)).unwrap();
        assert_eq!(e.distinct_values(1e-12), vec![2.5]);
        assert!(e.vectors.unitarity_deviation() < 1e-15);
    }
}
