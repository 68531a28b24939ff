use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};

const PADE_ORDER: usize = 8;

/// Matrix exponential by scaling and squaring with a diagonal `[8/8]` Padé approximant.
///
/// The input is scaled by `2^-s` until its 1-norm is at most 1/2, where the
/// truncation error of the approximant sits far below double precision.
pub fn matrix_exp(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = x.dim();
    let norm = x.one_norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let a = x.scale_real(0.5_f64.powi(squarings));

    let coeffs = pade_coefficients();
    let mut num = ComplexMatrix::identity(n).scale_real(coeffs[0]);
    let mut den = num;
    let mut power = ComplexMatrix::identity(n);
    for (k, &c) in coeffs.iter().enumerate().skip(1) {
        power = power * a;
        let term = power.scale_real(c);
        num = num + term;
        den = if k % 2 == 0 { den + term } else { den - term };
    }
    let mut result = den.inverse()? * num;
    for _ in 0..squarings {
        result = result * result;
    }
    if !result.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(result)
}

/// `c_k = (2m-k)! m! / ((2m)! k! (m-k)!)` for `k = 0..=m`.
fn pade_coefficients() -> [f64; PADE_ORDER + 1] {
    let m = PADE_ORDER;
    let mut c = [0.0; PADE_ORDER + 1];
    c[0] = 1.0;
    for k in 1..=m {
        c[k] = c[k - 1] * (m - k + 1) as f64 / (k * (2 * m - k + 1)) as f64;
    }
    c
}

/// `exp(i·θ·H)` for a hermitian generator `H`.
pub fn exp_i(theta: f64, h: &ComplexMatrix) -> Result<ComplexMatrix> {
    matrix_exp(&h.scale(C64::new(0.0, theta)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: plain Taylor series truncated at `order`.
    fn series(x: &ComplexMatrix, order: usize) -> ComplexMatrix {
        let mut sum = ComplexMatrix::identity(x.dim());
        let mut term = sum;
        for k in 1..=order {
            term = (term * *x).scale_real(1.0 / k as f64);
            sum = sum + term;
        }
        sum
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(
            matrix_exp(&ComplexMatrix::zeros(4)).unwrap(),
            ComplexMatrix::identity(4)
        );
    }

    #[test]
    fn half_period_pauli_rotation() {
        let x = ComplexMatrix::pauli(1).scale(C64::new(0.0, std::f64::consts::FRAC_PI_2));
        let expected = ComplexMatrix::pauli(1).scale(C64::new(0.0, 1.0));
        assert!((matrix_exp(&x).unwrap() - expected).max_abs() < 1e-15);
    }

    #[test]
    fn matches_series_on_cartan_generator() {
        let tau11 = ComplexMatrix::pauli2(1, 1).scale(C64::new(0.0, 0.5));
        let x = tau11.scale_real(0.3);
        let diff = (matrix_exp(&x).unwrap() - series(&x, 20)).max_abs();
        assert!(diff < 1e-12, "diff = {diff:e}");
    }

    #[test]
    fn large_norm_uses_squaring() {
        let h = ComplexMatrix::pauli2(1, 2).scale_real(3.0) + ComplexMatrix::pauli2(3, 0);
        let u = exp_i(7.5, &h).unwrap();
        assert!(u.unitarity_deviation() < 1e-12);
        // the two terms anticommute, so h² = 10·I and exp(iθh) = cos(θ√10) + i sin(θ√10) h/√10
        let w = 10f64.sqrt();
        let closed = ComplexMatrix::identity(4).scale_real((7.5 * w).cos())
            + h.scale(C64::new(0.0, (7.5 * w).sin() / w));
        assert!((u - closed).max_abs() < 1e-12);
    }

    #[test]
    fn rejects_non_finite() {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = C64::new(f64::INFINITY, 0.0);
        assert_eq!(matrix_exp(&m), Err(Error::NonFinite));
    }
}
