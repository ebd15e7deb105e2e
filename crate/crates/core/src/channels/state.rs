use num_complex::Complex;
use num_traits::One;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{is_psd, ComplexMatrix, Tolerance};
use crate::random::random_unit_vector;
use crate::scalar::Real;

/// Positive semidefinite Hermitian matrix of unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityState<T> {
    matrix: ComplexMatrix<T>,
}

impl<T: Real> DensityState<T> {
    /// Validates Hermiticity, unit trace and positivity within `tol`.
    pub fn new(matrix: ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<Self> {
        matrix.require_square()?;
        matrix.check_finite()?;
        let scale = matrix.frobenius_norm();
        let herm = matrix.hermiticity_deviation()?;
        if herm > tol.bound(scale) {
            return Err(Error::InvalidState(format!("not Hermitian (deviation {:e})", herm.as_f64())));
        }
        let tr = matrix.trace();
        if (tr - Complex::one()).norm() > tol.bound(T::one()) {
            return Err(Error::InvalidState(format!("trace {} + {}i is not 1", tr.re, tr.im)));
        }
        let psd = is_psd(&matrix, tol)?;
        if !psd.is_psd {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {:e}",
                psd.min_eigenvalue.as_f64()
            )));
        }
        Ok(Self { matrix })
    }

    /// Wraps a matrix the caller knows to be a state.
    pub fn new_unchecked(matrix: ComplexMatrix<T>) -> Self {
        Self { matrix }
    }

    /// `|v><v| / <v|v>`.
    pub fn pure(v: &[Complex<T>]) -> Result<Self> {
        let norm_sqr: T = v.iter().map(|z| z.norm_sqr()).sum();
        if v.is_empty() || norm_sqr.is_zero() {
            return Err(Error::InvalidState("zero vector".into()));
        }
        Ok(Self {
            matrix: ComplexMatrix::outer(v).scale(T::one() / norm_sqr),
        })
    }

    /// Computational basis projector `|k><k|` (0-indexed).
    pub fn basis(n: usize, k: usize) -> Self {
        Self {
            matrix: ComplexMatrix::unit(n, k, k),
        }
    }

    pub fn maximally_mixed(n: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(n).scale(T::one() / T::from_count(n)),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `Tr(S²)`.
    pub fn purity(&self) -> T {
        // Tr(S S) = Σ_ij S_ij S_ji = Σ |S_ij|² for Hermitian S
        self.matrix.data().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn is_pure(&self, tol: &Tolerance<T>) -> bool {
        tol.close(self.purity(), T::one())
    }
}

/// Haar random pure state from a normalized complex Gaussian vector.
pub fn random_pure_state<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> DensityState<T> {
    let v = random_unit_vector::<T, R>(n, rng);
    DensityState::new_unchecked(ComplexMatrix::outer(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::rng_for;

    #[test]
    fn random_pure_states_are_pure() {
        let tol = Tolerance::absolute(1e-12);
        let mut rng = rng_for(3, 0);
        for n in 2..7 {
            for _ in 0..20 {
                let s: DensityState<f64> = random_pure_state(n, &mut rng);
                assert!((s.matrix().trace().re - 1.0).abs() < 1e-12);
                assert!(s.is_pure(&tol));
                DensityState::new(s.matrix().clone(), &Tolerance::default()).unwrap();
            }
        }
    }

    #[test]
    fn fixed_seed_repeats_bit_identically() {
        let a: DensityState<f64> = random_pure_state(4, &mut rng_for(99, 5));
        let b: DensityState<f64> = random_pure_state(4, &mut rng_for(99, 5));
        assert_eq!(a, b);
    }

    #[test]
    fn validation_rejects_non_states() {
        let tol = Tolerance::default();
        let not_unit = ComplexMatrix::<f64>::identity(2);
        assert!(matches!(DensityState::new(not_unit, &tol), Err(Error::InvalidState(_))));
        let negative = ComplexMatrix::from_real_diagonal(&[1.5, -0.5]);
        assert!(matches!(DensityState::new(negative, &tol), Err(Error::InvalidState(_))));
        assert!(DensityState::new(ComplexMatrix::<f64>::unit(2, 0, 1), &tol).is_err());
        assert!(DensityState::<f64>::pure(&[]).is_err());
    }

    #[test]
    fn mixed_state_is_not_pure() {
        let s = DensityState::<f64>::maximally_mixed(3);
        assert!((s.purity() - 1.0 / 3.0).abs() < 1e-15);
        assert!(!s.is_pure(&Tolerance::default()));
        assert!(DensityState::<f64>::basis(3, 2).is_pure(&Tolerance::default()));
    }
}
