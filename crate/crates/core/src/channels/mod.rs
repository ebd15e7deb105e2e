//! Channel representations and their action on states.
//!
//! Every representation implements [`Channel`], the linear action on
//! arbitrary `n × n` matrices. Maps outside their CPTP parameter range are
//! still evaluated; positivity is only checked on request.

mod choi;
mod diagonal;
mod family;
mod kraus;
mod qubit;
mod repr;
mod state;

pub use choi::{to_choi, ChoiMatrix};
pub use diagonal::{diagonal_apply, to_superoperator, DiagonalChannel};
pub use family::{family_apply, family_to_diagonal, FamilyChannel, FamilyKind};
pub use kraus::{apply_kraus, kraus_from_family, KrausSet};
pub use qubit::{qubit_apply, qubit_norm_formula, qubit_paulis, stokes, QubitLambda, StokesVector};
pub use repr::{repr_coefficients, FormCoefficients, ReprCoefficients};
pub use state::{random_pure_state, DensityState};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;

/// A linear map on `n × n` complex matrices.
pub trait Channel<T: Real> {
    fn dim(&self) -> usize;

    /// Linear action on an arbitrary matrix (not only states).
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>>;

    fn check_input(&self, m: &ComplexMatrix<T>) -> Result<()> {
        let n = m.require_square()?;
        if n != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: format!("{0}x{0}", self.dim()),
                found: format!("{n}x{n}"),
            });
        }
        Ok(())
    }
}

impl<T: Real, C: Channel<T> + ?Sized> Channel<T> for &C {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        (**self).apply(m)
    }
}

/// Wraps a closure as a channel of fixed dimension.
pub struct FnChannel<F> {
    dim: usize,
    f: F,
}

impl<F> FnChannel<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<T: Real, F: Fn(&ComplexMatrix<T>) -> ComplexMatrix<T>> Channel<T> for FnChannel<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        self.check_input(m)?;
        Ok((self.f)(m))
    }
}

/// `S ↦ Tr(S)·I/n`.
pub fn completely_depolarizing<T: Real>(n: usize) -> impl Channel<T> {
    FnChannel::new(n, move |m: &ComplexMatrix<T>| {
        ComplexMatrix::identity(m.rows()).scale_complex(m.trace() / T::from_count(m.rows()))
    })
}

/// Identity map on `n × n` matrices.
pub fn identity_channel<T: Real>(n: usize) -> impl Channel<T> {
    FnChannel::new(n, |m: &ComplexMatrix<T>| m.clone())
}
