use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// Dense complex square matrix of dimension 2 or 4, stored row-major.
///
/// Arithmetic operators panic on a dimension mismatch; the fallible entry
/// points ([`ComplexMatrix::from_rows`], [`tensor_product`]) return errors.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [C64; 16],
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim == 2 || dim == 4, "unsupported dimension {dim}");
        Self { dim, data: [ZERO; 16] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from rows; the row count fixes the dimension.
    pub fn from_rows(rows: &[&[C64]]) -> Result<Self> {
        let dim = rows.len();
        if dim != 2 && dim != 4 {
            return Err(Error::UnsupportedDimension(dim));
        }
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            for (j, z) in row.iter().enumerate() {
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite);
                }
                m[(i, j)] = *z;
            }
        }
        Ok(m)
    }

    /// Real matrix from rows.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let owned: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        let refs: Vec<&[C64]> = owned.iter().map(|r| r.as_slice()).collect();
        Self::from_rows(&refs)
    }

    pub fn from_diagonal(diag: &[C64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, z) in diag.iter().enumerate() {
            m[(i, i)] = *z;
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d: Vec<C64> = diag.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_diagonal(&d)
    }

    /// Outer product `|u⟩⟨v|`.
    pub fn outer(u: &[C64], v: &[C64]) -> Self {
        assert_eq!(u.len(), v.len());
        let mut m = Self::zeros(u.len());
        for i in 0..u.len() {
            for j in 0..v.len() {
                m[(i, j)] = u[i] * v[j].conj();
            }
        }
        m
    }

    /// The Pauli matrix `σ_μ`, `μ ∈ 0..4`, with `σ_0 = I`.
    pub fn pauli(mu: usize) -> Self {
        let rows: [[C64; 2]; 2] = match mu {
            0 => [[ONE, ZERO], [ZERO, ONE]],
            1 => [[ZERO, ONE], [ONE, ZERO]],
            2 => [[ZERO, -I], [I, ZERO]],
            3 => [[ONE, ZERO], [ZERO, -ONE]],
            _ => panic!("Pauli index {mu} out of range"),
        };
        let mut m = Self::zeros(2);
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j)] = rows[i][j];
            }
        }
        m
    }

    /// `σ_μ ⊗ σ_ν` in the ordered basis `|00⟩, |01⟩, |10⟩, |11⟩`.
    pub fn pauli2(mu: usize, nu: usize) -> Self {
        kron(&Self::pauli(mu), &Self::pauli(nu))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_finite(&self) -> bool {
        self.entries().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    fn entries(&self) -> impl Iterator<Item = &C64> {
        self.data[..self.dim * self.dim].iter()
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)];
            }
        }
        m
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let mut m = *self;
        for z in m.data[..self.dim * self.dim].iter_mut() {
            *z = f(*z);
        }
        m
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Induced 1-norm (largest column sum).
    pub fn one_norm(&self) -> f64 {
        (0..self.dim)
            .map(|j| (0..self.dim).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from `self = self†`.
    pub fn hermitian_deviation(&self) -> f64 {
        (*self - self.adjoint()).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Largest entrywise deviation of `self·self†` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        (*self * self.adjoint() - Self::identity(self.dim)).max_abs()
    }

    /// Commutator `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Hilbert–Schmidt inner product `tr(self† · other)`.
    pub fn hs_inner(&self, other: &Self) -> C64 {
        assert_eq!(self.dim, other.dim);
        self.entries()
            .zip(other.entries())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[C64]) {
        for (i, z) in v.iter().enumerate() {
            self[(i, j)] = *z;
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = *self;
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&x, &y| a[(x, col)].norm().total_cmp(&a[(y, col)].norm()))
                .unwrap_or(col);
            if a[(pivot, col)].norm() < f64::MIN_POSITIVE {
                return Err(Error::Singular);
            }
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let d = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= d;
                inv[(col, j)] /= d;
            }
            for row in 0..n {
                if row == col {
                    continue;
                }
                let f = a[(row, col)];
                if f == ZERO {
                    continue;
                }
                for j in 0..n {
                    let (ac, ic) = (a[(col, j)], inv[(col, j)]);
                    a[(row, j)] -= f * ac;
                    inv[(row, j)] -= f * ic;
                }
            }
        }
        Ok(inv)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &mut self.data[i * self.dim + j]
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in addition");
        let mut m = self;
        for (a, b) in m.data.iter_mut().zip(rhs.data.iter()) {
            *a += *b;
        }
        m
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in subtraction");
        let mut m = self;
        for (a, b) in m.data.iter_mut().zip(rhs.data.iter()) {
            *a -= *b;
        }
        m
    }
}

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in product");
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    m[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  [")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    m
}

/// Kronecker product of two 2×2 matrices in the ordered basis
/// `|00⟩ = |0⟩⊗|0⟩, |01⟩, |10⟩, |11⟩`.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    for m in [a, b] {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: m.dim(),
            });
        }
    }
    Ok(kron(a, b))
}

/// Tensor product of two 2-vectors.
pub fn tensor_vec(u: &[C64; 2], v: &[C64; 2]) -> [C64; 4] {
    [u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]]
}

/// Partial trace of a 4×4 operator over the second factor.
pub fn partial_trace_second(m: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(m.dim(), 4);
    let mut out = ComplexMatrix::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)];
        }
    }
    out
}

/// Partial trace of a 4×4 operator over the first factor.
pub fn partial_trace_first(m: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(m.dim(), 4);
    let mut out = ComplexMatrix::zeros(2);
    for k in 0..2 {
        for l in 0..2 {
            out[(k, l)] = m[(k, l)] + m[(2 + k, 2 + l)];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma3_tensor_sigma3_is_diagonal() {
        let c = tensor_product(&ComplexMatrix::pauli(3), &ComplexMatrix::pauli(3)).unwrap();
        let expected = ComplexMatrix::from_real_diagonal(&[1.0, -1.0, -1.0, 1.0]);
        assert_eq!(c, expected);
    }

    #[test]
    fn identity_tensor_identity() {
        let c = tensor_product(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2)).unwrap();
        assert_eq!(c, ComplexMatrix::identity(4));
    }

    #[test]
    fn tensor_rejects_four_by_four() {
        let err = tensor_product(&ComplexMatrix::identity(4), &ComplexMatrix::identity(2));
        assert!(matches!(err, Err(Error::DimensionMismatch { expected: 2, found: 4 })));
    }

    #[test]
    fn from_rows_rejects_bad_shapes() {
        let row = [ONE, ZERO, ZERO];
        assert!(matches!(
            ComplexMatrix::from_rows(&[&row, &row, &row]),
            Err(Error::UnsupportedDimension(3))
        ));
        let nan = [C64::new(f64::NAN, 0.0), ZERO];
        assert_eq!(
            ComplexMatrix::from_rows(&[&nan, &[ZERO, ONE]]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn pauli_algebra() {
        let (x, y, z) = (
            ComplexMatrix::pauli(1),
            ComplexMatrix::pauli(2),
            ComplexMatrix::pauli(3),
        );
        assert_eq!(x * y, z.scale(I));
        for s in [x, y, z] {
            assert_eq!(s * s, ComplexMatrix::identity(2));
            assert!(s.is_hermitian(0.0));
        }
        assert_eq!(ComplexMatrix::pauli2(1, 1).trace(), ZERO);
    }

    #[test]
    fn inverse_round_trip() {
        let m = ComplexMatrix::from_rows(&[
            &[ONE, I, ZERO, ONE],
            &[ZERO, ONE, ONE, ZERO],
            &[I, ZERO, ONE, ONE],
            &[ONE, ONE, I, C64::new(2.0, 0.0)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!((m * inv - ComplexMatrix::identity(4)).max_abs() < 1e-14);
        assert_eq!(ComplexMatrix::zeros(2).inverse(), Err(Error::Singular));
    }

    #[test]
    fn partial_traces_of_product() {
        let a = ComplexMatrix::from_real_rows(&[&[0.7, 0.1], &[0.1, 0.3]]).unwrap();
        let b = ComplexMatrix::from_real_rows(&[&[0.4, 0.2], &[0.2, 0.6]]).unwrap();
        let ab = tensor_product(&a, &b).unwrap();
        assert!((partial_trace_second(&ab) - a).max_abs() < 1e-15);
        assert!((partial_trace_first(&ab) - b).max_abs() < 1e-15);
    }
}
