use num_complex::Complex;
use serde::Serialize;

use crate::channels::{family_apply, DensityState, FamilyChannel, FamilyKind};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, Tolerance};
use crate::scalar::Real;
use crate::verification::param_range;

/// Output spectra of a family on two pure states: `S₁` from `e₁` and `S₂`
/// from the normalized all-ones vector. Equivalent channels must give equal
/// spectra on all pure inputs up to a permutation of the states, so unequal
/// spectra here rule out equivalence with a unitarily covariant map.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Real + Serialize"))]
pub struct SpectrumWitness<T> {
    pub kind: FamilyKind,
    pub p: T,
    pub dim: usize,
    pub state_a: ComplexMatrix<T>,
    pub state_b: ComplexMatrix<T>,
    pub output_a: ComplexMatrix<T>,
    pub output_b: ComplexMatrix<T>,
    /// Ascending.
    pub spectrum_a: Vec<T>,
    pub spectrum_b: Vec<T>,
    /// Largest `|spectrum_a[i] - spectrum_b[i]|`.
    pub max_spectral_gap: T,
    pub notes: Vec<String>,
}

/// Closed-form output spectra on `S₁` and `S₂`, ascending.
pub fn predicted_spectra<T: Real>(kind: FamilyKind, p: T, n: usize) -> (Vec<T>, Vec<T>) {
    let nf = T::from_count(n);
    let low = (T::one() - p) / nf;
    let first = sorted(vec![p + low].into_iter().chain(std::iter::repeat_n(low, n - 1)).collect());
    if kind.has_classical_part() {
        let high = (T::one() + p) / nf;
        let second = sorted(vec![high - p].into_iter().chain(std::iter::repeat_n(high, n - 1)).collect());
        (first, second)
    } else {
        (first.clone(), first)
    }
}

fn sorted<T: Real>(mut v: Vec<T>) -> Vec<T> {
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    v
}

pub fn spectrum_witness<T: Real>(kind: FamilyKind, p: T, n: usize) -> Result<SpectrumWitness<T>> {
    let range = param_range::<T>(kind, n)?;
    if !range.contains(&p) {
        return Err(Error::ParameterOutOfRange {
            family: kind.short_name(),
            p: p.as_f64(),
            p_min: range.p_min.as_f64(),
            p_max: range.p_max.as_f64(),
            detail: String::new(),
        });
    }
    let ch = FamilyChannel::new(kind, p, n)?;
    let a = DensityState::basis(n, 0);
    let r = T::one() / T::from_count(n).sqrt();
    let b = DensityState::pure(&vec![Complex::new(r, T::zero()); n])?;
    let output_a = family_apply(&ch, &a)?;
    let output_b = family_apply(&ch, &b)?;
    let tol = Tolerance::default();
    let spectrum_a = hermitian_eigenvalues(&output_a, &tol)?;
    let spectrum_b = hermitian_eigenvalues(&output_b, &tol)?;
    let max_spectral_gap = spectrum_a
        .iter()
        .zip(&spectrum_b)
        .map(|(x, y)| (*x - *y).abs())
        .fold(T::zero(), T::max);

    let mut notes = Vec::new();
    if kind.has_classical_part() {
        notes.push(
            "output spectrum on S_2 is {-p + (1+p)/n, (1+p)/n with multiplicity n-1}; \
             the variant {-p + (1-p)/n, -p + (1+p)/n} has trace 1 only when n = 2 or p = 0"
                .to_string(),
        );
    }
    Ok(SpectrumWitness {
        kind,
        p,
        dim: n,
        state_a: a.into_matrix(),
        state_b: b.into_matrix(),
        output_a,
        output_b,
        spectrum_a,
        spectrum_b,
        max_spectral_gap,
        notes,
    })
}
