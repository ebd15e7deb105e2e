use num_complex::Complex;
use num_traits::Zero;

use super::state::DensityState;
use super::Channel;
use crate::basis::{cached_basis, Sector};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;

/// Channel acting diagonally on `ℰ`: the identity element is kept and the
/// `i`-th remaining element is multiplied by `t[i]` (order `x`, `y`, `z`).
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalChannel<T> {
    dim: usize,
    t: Vec<T>,
}

impl<T: Real> DiagonalChannel<T> {
    pub fn new(dim: usize, t: Vec<T>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension { dim, reason: "need n >= 2" });
        }
        if t.len() != dim * dim - 1 {
            return Err(Error::LengthMismatch {
                expected: dim * dim - 1,
                found: t.len(),
            });
        }
        if t.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("multipliers must be finite".into()));
        }
        Ok(Self { dim, t })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(dim, vec![T::one(); dim * dim - 1])
    }

    pub fn t(&self) -> &[T] {
        &self.t
    }

    /// Multiplier of the `index`-th (1-based) element of a sector.
    pub fn multiplier(&self, sector: Sector, index: usize) -> Option<T> {
        if sector == Sector::Identity {
            return (index == 1).then(T::one);
        }
        let basis = cached_basis::<T>(self.dim).ok()?;
        let range = basis.sector_range(sector);
        let pos = range.start + index.checked_sub(1)?;
        range.contains(&pos).then(|| self.t[pos - 1])
    }

    /// Adjoint with respect to `Tr(A B)`: the same multipliers.
    pub fn adjoint(&self) -> Self {
        self.clone()
    }

    pub fn to_superoperator(&self) -> ComplexMatrix<T> {
        let mut diag = Vec::with_capacity(self.dim * self.dim);
        diag.push(T::one());
        diag.extend_from_slice(&self.t);
        ComplexMatrix::from_real_diagonal(&diag)
    }
}

impl<T: Real> Channel<T> for DiagonalChannel<T> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        self.check_input(m)?;
        let basis = cached_basis::<T>(self.dim)?;
        let mut coeffs = basis.coefficients(m)?;
        for (c, &t) in coeffs.iter_mut().skip(1).zip(&self.t) {
            *c = if t.is_zero() { Complex::zero() } else { *c * t };
        }
        basis.combine(&coeffs)
    }
}

/// Decompose over `ℰ`, scale, reconstruct.
pub fn diagonal_apply<T: Real>(ch: &DiagonalChannel<T>, s: &DensityState<T>) -> Result<ComplexMatrix<T>> {
    ch.apply(s.matrix())
}

/// Matrix of the map in `ℰ`: `diag(1, t_1, ..., t_{n²-1})`.
pub fn to_superoperator<T: Real>(ch: &DiagonalChannel<T>) -> ComplexMatrix<T> {
    ch.to_superoperator()
}
