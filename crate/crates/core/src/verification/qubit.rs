use serde::{Deserialize, Serialize};

use crate::channels::{QubitLambda, StokesVector};
use crate::error::{Error, Result};
use crate::basis::PauliKind;
use crate::scalar::Real;

/// Sign patterns of the four constant-norm unital qubit channels, on
/// `(λ_x, λ_y, λ_z)` with `λ_z = p ≥ 0`.
pub const QUBIT_VARIANTS: [[i8; 3]; 4] = [[1, 1, 1], [1, -1, 1], [-1, -1, 1], [-1, 1, 1]];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum QubitClassification<T> {
    NotConstantNorm,
    /// Constant map onto the state with Stokes vector `t`.
    CompletelyDepolarizing { output: StokesVector<T> },
    /// `λ = p·pattern(variant)` after an optional output conjugation by σ_x
    /// (which flips `λ_y` and `λ_z`) making `λ_z ≥ 0`.
    Diagonal { variant: u8, p: T, conjugated_by_sigma_x: bool },
}

impl<T: Real> QubitClassification<T> {
    pub fn is_constant_norm(&self) -> bool {
        !matches!(self, Self::NotConstantNorm)
    }
}

/// Constant-norm classification of a qubit channel in Stokes form.
pub fn classify_qubit<T: Real>(l: &QubitLambda<T>, tol: T) -> Result<QubitClassification<T>> {
    if l.t.iter().chain(&l.lambda).any(|x| !x.is_finite()) {
        return Err(Error::InvalidParameter("non-finite qubit parameters".into()));
    }
    if l.lambda.iter().all(|x| x.abs() <= tol) {
        let out = StokesVector::new(l.t);
        if out.norm_sqr() > T::one() + tol {
            return Err(Error::NotAChannel(format!(
                "constant output has |t|² = {} > 1",
                out.norm_sqr()
            )));
        }
        return Ok(QubitClassification::CompletelyDepolarizing { output: out });
    }
    if l.t.iter().any(|x| x.abs() > tol) {
        return Ok(QubitClassification::NotConstantNorm);
    }
    let abs = l.lambda.map(|x| x.abs());
    let hi = abs.iter().copied().fold(T::zero(), T::max);
    let lo = abs.iter().copied().fold(T::infinity(), T::min);
    if hi - lo > tol {
        return Ok(QubitClassification::NotConstantNorm);
    }
    let flip = l.lambda[2] < T::zero();
    let lambda = if flip { l.conjugate_output(PauliKind::X).lambda } else { l.lambda };
    let sign = |x: T| if x < T::zero() { -1 } else { 1 };
    let pattern = [sign(lambda[0]), sign(lambda[1]), 1];
    let variant = QUBIT_VARIANTS.iter().position(|v| *v == pattern).expect("all four patterns listed");
    Ok(QubitClassification::Diagonal {
        variant: variant as u8 + 1,
        p: lambda[2],
        conjugated_by_sigma_x: flip,
    })
}
