use num_complex::Complex;

use super::family::FamilyKind;
use super::repr::repr_coefficients;
use super::state::DensityState;
use super::Channel;
use crate::basis::{pauli_matrix, PairIndex, PauliKind};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;
use crate::verification::param_range;

/// Kraus operators `{V_i}` of `S ↦ Σ V_i S V_i^dagger`.
#[derive(Debug, Clone)]
pub struct KrausSet<T> {
    dim: usize,
    operators: Vec<ComplexMatrix<T>>,
}

impl<T: Real> KrausSet<T> {
    pub fn new(operators: Vec<ComplexMatrix<T>>) -> Result<Self> {
        let first = operators
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty Kraus set".into()))?;
        let dim = first.require_square()?;
        for op in &operators {
            first.require_same_shape(op)?;
            op.check_finite()?;
        }
        Ok(Self { dim, operators })
    }

    pub fn operators(&self) -> &[ComplexMatrix<T>] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// `Σ V_i^dagger V_i`.
    pub fn completeness(&self) -> ComplexMatrix<T> {
        let mut acc = ComplexMatrix::zeros(self.dim, self.dim);
        for v in &self.operators {
            acc = &acc + &(&v.adjoint() * v);
        }
        acc
    }

    /// Largest entry of `|Σ V_i^dagger V_i - I|`.
    pub fn completeness_deviation(&self) -> T {
        self.completeness()
            .max_abs_diff(&ComplexMatrix::identity(self.dim))
            .expect("square by construction")
    }
}

impl<T: Real> Channel<T> for KrausSet<T> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, s: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        self.check_input(s)?;
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for v in &self.operators {
            out = &out + &(&(v * s) * &v.adjoint());
        }
        Ok(out)
    }
}

pub fn apply_kraus<T: Real>(ks: &KrausSet<T>, s: &DensityState<T>) -> Result<ComplexMatrix<T>> {
    ks.apply(s.matrix())
}

/// Kraus operators from the Pauli-form representation:
/// `√c0·I`, `√cx·σ_{x,i}`, `√cy·σ_{y,i}`, `√cz·σ_{z,i}` over all pairs.
///
/// Coefficients within a few ulps below zero (exact range endpoints) are
/// treated as zero; anything more negative is rejected.
pub fn kraus_from_family<T: Real>(kind: FamilyKind, p: T, n: usize) -> Result<KrausSet<T>> {
    if n < 2 {
        return Err(Error::InvalidDimension { dim: n, reason: "need n >= 2" });
    }
    let coeffs = repr_coefficients(kind, p, n).pauli;
    let slack = T::epsilon() * T::from_count(16);
    if let Some((name, value)) = coeffs.first_negative().filter(|(_, v)| *v < -slack) {
        let range = param_range::<T>(kind, n)?;
        return Err(Error::ParameterOutOfRange {
            family: kind.short_name(),
            p: p.as_f64(),
            p_min: range.p_min.as_f64(),
            p_max: range.p_max.as_f64(),
            detail: format!(" (coefficient {name} = {value} < 0)"),
        });
    }
    let weight = |c: T| if c > T::zero() { Some(c.sqrt()) } else { None };
    let mut ops = Vec::new();
    if let Some(w) = weight(coeffs.identity) {
        ops.push(ComplexMatrix::identity(n).scale(w));
    }
    for (c, kind) in [(coeffs.x, PauliKind::X), (coeffs.y, PauliKind::Y), (coeffs.z, PauliKind::Z)] {
        if let Some(w) = weight(c) {
            for pair in PairIndex::all(n) {
                ops.push(pauli_matrix::<T>(n, kind, pair)?.scale_complex(Complex::new(w, T::zero())));
            }
        }
    }
    KrausSet::new(ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{family_apply, random_pure_state, FamilyChannel};
    use crate::random::rng_for;

    #[test]
    fn identity_channel_single_operator() {
        let ks = kraus_from_family::<f64>(FamilyKind::Depolarizing, 1.0, 3).unwrap();
        assert_eq!(ks.len(), 1);
        assert!(ks.operators()[0].max_abs_diff(&ComplexMatrix::identity(3)).unwrap() < 1e-15);
    }

    #[test]
    fn zero_parameter_is_trace_preserving() {
        for kind in FamilyKind::ALL {
            for n in 2..6 {
                let ks = kraus_from_family::<f64>(kind, 0.0, n).unwrap();
                assert!(ks.completeness_deviation() <= 1e-14);
            }
        }
    }

    #[test]
    fn dcq_upper_boundary_omits_identity() {
        let ks = kraus_from_family::<f64>(FamilyKind::Dcq, 0.25, 3).unwrap();
        // 3 pairs each for x, y, z; no identity term
        assert_eq!(ks.len(), 9);
        assert!(ks.completeness_deviation() <= 1e-14);
    }

    #[test]
    fn out_of_range_names_coefficient() {
        let err = kraus_from_family::<f64>(FamilyKind::Dcq, 0.3, 3).unwrap_err();
        match err {
            Error::ParameterOutOfRange { family, detail, .. } => {
                assert_eq!(family, "dcq");
                assert!(detail.contains("c0"), "{detail}");
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = kraus_from_family::<f64>(FamilyKind::Tcq, 0.3, 3).unwrap_err();
        assert!(err.to_string().contains("cx"));
    }

    #[test]
    fn reproduces_closed_form() {
        let mut rng = rng_for(21, 0);
        for kind in FamilyKind::ALL {
            let ch = FamilyChannel::new(kind, 0.1, 4).unwrap();
            let ks = kraus_from_family(kind, 0.1, 4).unwrap();
            for _ in 0..20 {
                let s = random_pure_state(4, &mut rng);
                let d = apply_kraus(&ks, &s).unwrap().max_abs_diff(&family_apply(&ch, &s).unwrap()).unwrap();
                assert!(d <= 1e-12);
            }
        }
    }

    #[test]
    fn weighted_unitaries_preserve_trace() {
        let x = pauli_matrix::<f64>(2, PauliKind::X, PairIndex::from_index(2, 1).unwrap()).unwrap();
        let ks = KrausSet::new(vec![ComplexMatrix::identity(2).scale(0.6), x.scale(0.8)]).unwrap();
        let s = DensityState::<f64>::basis(2, 0);
        assert!((apply_kraus(&ks, &s).unwrap().trace().re - 1.0).abs() < 1e-15);
        assert!(KrausSet::<f64>::new(vec![]).is_err());
        assert!(KrausSet::new(vec![ComplexMatrix::<f64>::identity(2), ComplexMatrix::identity(3)]).is_err());
    }
}
