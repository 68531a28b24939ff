//! The lattice of subspaces of C² and C⁴, represented by orthogonal projectors.

use super::eigen::hermitian_eigen;
use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::sampling;
use crate::tolerance::Tolerances;

/// Orthogonal projector onto a subspace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projector {
    matrix: ComplexMatrix,
}

impl Projector {
    /// Validates hermiticity and idempotence against the default tolerances.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let tol = Tolerances::DEFAULT;
        let herm = matrix.hermitian_deviation();
        if herm > tol.hermitian {
            return Err(Error::NotHermitian(herm));
        }
        let idem = (matrix * matrix - matrix).max_abs();
        if idem > tol.idempotent {
            return Err(Error::NotIdempotent(idem));
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_matrix_unchecked(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_matrix_unchecked(ComplexMatrix::zeros(dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_matrix_unchecked(ComplexMatrix::identity(dim))
    }

    /// Projector onto the span of `vectors`. Linearly dependent inputs are
    /// dropped during Gram-Schmidt.
    pub fn onto_span(dim: usize, vectors: &[Vec<C64>]) -> Result<Self> {
        let mut basis: Vec<Vec<C64>> = Vec::new();
        for v in vectors {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            let mut w = v.clone();
            // two passes of modified Gram-Schmidt for stability
            for _ in 0..2 {
                for b in &basis {
                    let c: C64 = b.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
                    for (wi, bi) in w.iter_mut().zip(b) {
                        *wi -= c * bi;
                    }
                }
            }
            let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let scale = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-10 * scale.max(1.0) {
                basis.push(w.into_iter().map(|z| z / norm).collect());
            }
        }
        let mut m = ComplexMatrix::zeros(dim);
        for b in &basis {
            m = m + ComplexMatrix::outer(b, b);
        }
        Ok(Self::from_matrix_unchecked(m))
    }

    /// Projector onto the line spanned by a real vector.
    pub fn onto_real_line(v: &[f64]) -> Result<Self> {
        let c: Vec<C64> = v.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::onto_span(v.len(), &[c])
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Dimension of the range.
    pub fn rank(&self) -> usize {
        self.matrix.trace().re.round() as usize
    }

    /// Range inclusion `range(self) ⊆ range(other)`, i.e. `other·self = self`.
    pub fn leq(&self, other: &Projector, tol: f64) -> bool {
        (other.matrix * self.matrix - self.matrix).max_abs() <= tol
    }

    /// Frobenius distance between the two projectors.
    pub fn distance(&self, other: &Projector) -> f64 {
        (self.matrix - other.matrix).frobenius_norm()
    }
}

fn same_dim(p: &Projector, q: &Projector) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(())
}

/// Projector onto `range(P) ∩ range(Q)`: the eigenvalue-2 eigenspace of `P + Q`.
pub fn subspace_meet(p: &Projector, q: &Projector) -> Result<Projector> {
    same_dim(p, q)?;
    let eig = hermitian_eigen(&(p.matrix + q.matrix))?;
    let tol = Tolerances::DEFAULT.subspace;
    Ok(Projector::from_matrix_unchecked(
        eig.projector_where(|_, l| l >= 2.0 - tol),
    ))
}

/// Projector onto `range(P) + range(Q)`: the support of `P + Q`.
pub fn subspace_join(p: &Projector, q: &Projector) -> Result<Projector> {
    same_dim(p, q)?;
    let eig = hermitian_eigen(&(p.matrix + q.matrix))?;
    let tol = Tolerances::DEFAULT.subspace;
    Ok(Projector::from_matrix_unchecked(
        eig.projector_where(|_, l| l > tol),
    ))
}

/// `I − P`.
pub fn orthocomplement(p: &Projector) -> Projector {
    Projector::from_matrix_unchecked(ComplexMatrix::identity(p.dim()) - p.matrix)
}

/// Random subspace of the given rank.
pub fn random_projector<R: rand::Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> Projector {
    let vs = sampling::gaussian_vectors(rng, dim, rank);
    Projector::onto_span(dim, &vs).expect("dimensions agree")
}

/// Samples comparable pairs `P ≤ Q` (with `Q = P ∨ R` for random `P`, `R`)
/// and checks `Q = P ∨ (Q ∧ P⊥)`. The margin is `tol` minus the worst residual.
pub fn orthomodular_check(dim: usize, samples: usize, seed: u64, tol: &Tolerances) -> Check {
    let mut worst = 0.0_f64;
    let mut witness = None;
    for i in 0..samples {
        let mut rng = sampling::rng_for(seed ^ ((dim as u64) << 32), i as u64);
        let rank_p = 1 + (i % (dim - 1));
        let rank_r = 1 + (i / 3) % (dim - 1);
        let p = random_projector(&mut rng, dim, rank_p);
        let r = random_projector(&mut rng, dim, rank_r);
        let q = subspace_join(&p, &r).expect("same dimension");
        let rhs = subspace_join(&p, &subspace_meet(&q, &orthocomplement(&p)).expect("same dimension"))
            .expect("same dimension");
        let residual = q.distance(&rhs).max((q.matrix * p.matrix - p.matrix).max_abs());
        if residual > worst {
            worst = residual;
            witness = Some(format!("sample={i}"));
        }
    }
    let mut check = Check::from_margin(format!("orthomodular-dim{dim}"), tol.subspace - worst);
    if worst > tol.subspace {
        check = check.with_witness(witness.unwrap_or_default());
    }
    check
}

/// The triple `a = span(e₁)`, `b = span(e₂)`, `c = span(e₁+e₂)` in C².
#[derive(Debug, Clone, Copy)]
pub struct DistributivityWitness {
    /// `a ∧ (b ∨ c)`
    pub lhs: Projector,
    /// `(a ∧ b) ∨ (a ∧ c)`
    pub rhs: Projector,
    /// Frobenius norm of `lhs − rhs`.
    pub gap: f64,
}

pub fn distributivity_witness() -> DistributivityWitness {
    let a = Projector::onto_real_line(&[1.0, 0.0]).expect("dim 2");
    let b = Projector::onto_real_line(&[0.0, 1.0]).expect("dim 2");
    let c = Projector::onto_real_line(&[1.0, 1.0]).expect("dim 2");
    let lhs = subspace_meet(&a, &subspace_join(&b, &c).expect("dim 2")).expect("dim 2");
    let rhs = subspace_join(
        &subspace_meet(&a, &b).expect("dim 2"),
        &subspace_meet(&a, &c).expect("dim 2"),
    )
    .expect("dim 2");
    DistributivityWitness {
        lhs,
        rhs,
        gap: lhs.distance(&rhs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(v: &[f64]) -> Projector {
        Projector::onto_real_line(v).unwrap()
    }

    #[test]
    fn projector_validation() {
        assert!(Projector::new(ComplexMatrix::identity(2)).is_ok());
        let not_idem = ComplexMatrix::identity(2).scale_real(2.0);
        assert!(matches!(Projector::new(not_idem), Err(Error::NotIdempotent(_))));
        let not_herm = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(Projector::new(not_herm), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn complementation_laws() {
        let p = line(&[0.6, 0.8]);
        let pc = orthocomplement(&p);
        let meet = subspace_meet(&p, &pc).unwrap();
        let join = subspace_join(&p, &pc).unwrap();
        assert!(meet.matrix().max_abs() < 1e-12);
        assert!((*join.matrix() - ComplexMatrix::identity(2)).max_abs() < 1e-12);
    }

    #[test]
    fn distinct_lines_meet_in_origin() {
        let m = subspace_meet(&line(&[1.0, 0.0]), &line(&[1.0, 1.0])).unwrap();
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn meet_and_join_of_equal_subspaces() {
        let p = line(&[1.0, 2.0, 0.0, -1.0]);
        assert!(subspace_meet(&p, &p).unwrap().distance(&p) < 1e-12);
        assert!(subspace_join(&p, &p).unwrap().distance(&p) < 1e-12);
    }

    #[test]
    fn meet_below_join() {
        let mut rng = sampling::rng_for(11, 0);
        for _ in 0..200 {
            let p = random_projector(&mut rng, 4, 2);
            let q = random_projector(&mut rng, 4, 3);
            let meet = subspace_meet(&p, &q).unwrap();
            let join = subspace_join(&p, &q).unwrap();
            // two generic planes and a 3-space in C⁴ meet in a line and span everything
            assert_eq!(meet.rank(), 1);
            assert_eq!(join.rank(), 4);
            assert!(meet.leq(&p, 1e-8) && meet.leq(&q, 1e-8));
            assert!(p.leq(&join, 1e-8) && q.leq(&join, 1e-8));
        }
    }

    #[test]
    fn distributivity_fails_on_three_lines() {
        let w = distributivity_witness();
        assert!(w.lhs.distance(&line(&[1.0, 0.0])) < 1e-10);
        assert_eq!(w.rhs.rank(), 0);
        assert!(w.gap >= 0.99);
    }

    #[test]
    fn orthomodular_law_sampled() {
        let tol = Tolerances::DEFAULT;
        for dim in [2, 4] {
            let c = orthomodular_check(dim, 200, 5, &tol);
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let p = Projector::identity(2);
        let q = Projector::identity(4);
        assert!(subspace_meet(&p, &q).is_err());
        assert!(subspace_join(&p, &q).is_err());
    }
}
