use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::state::DensityState;
use super::Channel;
use crate::basis::{pauli_matrix, PairIndex, PauliKind};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;

/// Qubit channel in Stokes form: `a ↦ t + diag(λ)·a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitLambda<T> {
    pub t: [T; 3],
    pub lambda: [T; 3],
}

/// Coefficients `a_α = Tr(σ_α S)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StokesVector<T> {
    pub a: [T; 3],
}

impl<T: Real> StokesVector<T> {
    pub fn new(a: [T; 3]) -> Self {
        Self { a }
    }

    pub fn norm_sqr(&self) -> T {
        self.a.iter().map(|&x| x * x).sum()
    }

    /// `(I + Σ a_α σ_α) / 2`.
    pub fn to_matrix(&self) -> ComplexMatrix<T> {
        let two = T::from_int(2);
        let [x, y, z] = self.a;
        let half = |v: T| v / two;
        ComplexMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => Complex::new(half(T::one() + z), T::zero()),
            (1, 1) => Complex::new(half(T::one() - z), T::zero()),
            (0, 1) => Complex::new(half(x), -half(y)),
            _ => Complex::new(half(x), half(y)),
        })
    }
}

impl<T: Real> QubitLambda<T> {
    pub fn new(t: [T; 3], lambda: [T; 3]) -> Self {
        Self { t, lambda }
    }

    /// Unital channel `diag(λ)`.
    pub fn unital(lambda: [T; 3]) -> Self {
        Self { t: [T::zero(); 3], lambda }
    }

    pub fn is_unital(&self) -> bool {
        self.t.iter().all(|x| x.is_zero())
    }

    /// Output Stokes vector `t_α + λ_α a_α`.
    pub fn map_stokes(&self, a: &StokesVector<T>) -> StokesVector<T> {
        StokesVector::new(std::array::from_fn(|k| self.t[k] + self.lambda[k] * a.a[k]))
    }

    /// The 4×4 affine matrix acting on `(1, a_x, a_y, a_z)`.
    pub fn affine_matrix(&self) -> [[T; 4]; 4] {
        let mut m = [[T::zero(); 4]; 4];
        m[0][0] = T::one();
        for k in 0..3 {
            m[k + 1][0] = self.t[k];
            m[k + 1][k + 1] = self.lambda[k];
        }
        m
    }

    /// Conjugate the output by a Pauli: `σ Φ(·) σ`. Flips the two
    /// components other than the chosen axis.
    pub fn conjugate_output(&self, axis: PauliKind) -> Self {
        let keep = axis_index(axis);
        let flip = |k: usize, v: T| if k == keep { v } else { -v };
        Self {
            t: std::array::from_fn(|k| flip(k, self.t[k])),
            lambda: std::array::from_fn(|k| flip(k, self.lambda[k])),
        }
    }
}

fn axis_index(kind: PauliKind) -> usize {
    match kind {
        PauliKind::X => 0,
        PauliKind::Y => 1,
        PauliKind::Z => 2,
    }
}

/// The three qubit Paulis `σ_x, σ_y, σ_z`.
pub fn qubit_paulis<T: Real>() -> [ComplexMatrix<T>; 3] {
    let pair = PairIndex::from_index(2, 1).expect("n = 2 has one pair");
    [PauliKind::X, PauliKind::Y, PauliKind::Z].map(|k| pauli_matrix(2, k, pair).expect("valid pair"))
}

fn require_qubit<T: Real>(m: &ComplexMatrix<T>) -> Result<()> {
    let n = m.require_square()?;
    if n != 2 {
        return Err(Error::DimensionMismatch {
            expected: "2x2".into(),
            found: format!("{n}x{n}"),
        });
    }
    Ok(())
}

/// Complex Stokes components `Tr(σ_α M)` of an arbitrary 2×2 matrix.
fn stokes_complex<T: Real>(m: &ComplexMatrix<T>) -> [Complex<T>; 3] {
    let [a, b, c, d] = [m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]];
    let i = Complex::<T>::i();
    [b + c, i * (b - c), a - d]
}

pub fn stokes<T: Real>(s: &DensityState<T>) -> Result<StokesVector<T>> {
    require_qubit(s.matrix())?;
    Ok(StokesVector::new(stokes_complex(s.matrix()).map(|z| z.re)))
}

pub fn qubit_apply<T: Real>(l: &QubitLambda<T>, s: &DensityState<T>) -> Result<ComplexMatrix<T>> {
    l.apply(s.matrix())
}

/// `‖Φ(S)‖_F² = ½(1 + Σ (t_α + a_α λ_α)²)`.
pub fn qubit_norm_formula<T: Real>(l: &QubitLambda<T>, a: &StokesVector<T>) -> T {
    (T::one() + l.map_stokes(a).norm_sqr()) / T::from_int(2)
}

impl<T: Real> Channel<T> for QubitLambda<T> {
    fn dim(&self) -> usize {
        2
    }

    // linear extension: Tr(S)·(I + t·σ)/2 + Σ λ_α Tr(σ_α S) σ_α / 2
    fn apply(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        require_qubit(m)?;
        m.check_finite()?;
        let half = T::one() / T::from_int(2);
        let tr = m.trace();
        let a = stokes_complex(m);
        let mut out = ComplexMatrix::identity(2).scale_complex(tr * half);
        for (k, sigma) in qubit_paulis::<T>().iter().enumerate() {
            let coeff = (tr * self.t[k] + a[k] * self.lambda[k]) * half;
            out.add_scaled_assign(coeff, sigma);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{family_apply, random_pure_state, FamilyChannel, FamilyKind};
    use crate::random::{rng_for, uniform};

    fn plus_state() -> DensityState<f64> {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        DensityState::pure(&[Complex::new(r, 0.0), Complex::new(r, 0.0)]).unwrap()
    }

    #[test]
    fn stokes_examples() {
        assert_eq!(stokes(&DensityState::<f64>::basis(2, 0)).unwrap().a, [0.0, 0.0, 1.0]);
        assert_eq!(stokes(&DensityState::<f64>::maximally_mixed(2)).unwrap().a, [0.0, 0.0, 0.0]);
        let a = stokes(&plus_state()).unwrap().a;
        assert!((a[0] - 1.0).abs() < 1e-15 && a[1].abs() < 1e-15 && a[2].abs() < 1e-15);
        assert!(stokes(&DensityState::<f64>::basis(3, 0)).is_err());
    }

    #[test]
    fn stokes_round_trip() {
        let mut rng = rng_for(31, 0);
        for _ in 0..50 {
            let s = random_pure_state::<f64, _>(2, &mut rng);
            let a = stokes(&s).unwrap();
            assert!((a.norm_sqr() - 1.0).abs() < 1e-12);
            assert!(a.to_matrix().max_abs_diff(s.matrix()).unwrap() < 1e-14);
        }
    }

    #[test]
    fn apply_examples() {
        let mut rng = rng_for(32, 0);
        let id = QubitLambda::unital([1.0, 1.0, 1.0]);
        let constant = QubitLambda::new([0.0, 0.0, 0.5], [0.0; 3]);
        let want = StokesVector::new([0.0, 0.0, 0.5]).to_matrix();
        let p = 0.35;
        let dep = FamilyChannel::new(FamilyKind::Depolarizing, p, 2).unwrap();
        for _ in 0..20 {
            let s = random_pure_state(2, &mut rng);
            assert!(qubit_apply(&id, &s).unwrap().max_abs_diff(s.matrix()).unwrap() < 1e-15);
            assert!(qubit_apply(&constant, &s).unwrap().max_abs_diff(&want).unwrap() < 1e-15);
            let a = qubit_apply(&QubitLambda::unital([p; 3]), &s).unwrap();
            assert!(a.max_abs_diff(&family_apply(&dep, &s).unwrap()).unwrap() < 1e-15);
        }
    }

    #[test]
    fn norm_formula_examples() {
        let a = StokesVector::new([0.3, -0.2, 0.1]);
        assert_eq!(qubit_norm_formula(&QubitLambda::new([0.0; 3], [0.0; 3]), &a), 0.5);
        let unit = StokesVector::new([0.6f64, 0.0, 0.8]);
        assert!((qubit_norm_formula(&QubitLambda::unital([1.0; 3]), &unit) - 1.0).abs() < 1e-15);

        let mut rng = rng_for(33, 0);
        for _ in 0..200 {
            let mut draw = || uniform(-1.0f64, 1.0, &mut rng);
            let l = QubitLambda::new([draw(), draw(), draw()], [draw(), draw(), draw()]);
            let s = random_pure_state(2, &mut rng);
            let a = stokes(&s).unwrap();
            let direct = qubit_apply(&l, &s).unwrap().frobenius_norm().powi(2);
            assert!((direct - qubit_norm_formula(&l, &a)).abs() <= 1e-12);
        }
    }

    #[test]
    fn output_conjugation_matches_matrix_conjugation() {
        let mut rng = rng_for(34, 0);
        let l = QubitLambda::new([0.1, -0.2, 0.05], [0.4, -0.3, 0.2]);
        let paulis = qubit_paulis::<f64>();
        for (axis, sigma) in [PauliKind::X, PauliKind::Y, PauliKind::Z].into_iter().zip(&paulis) {
            let conj = l.conjugate_output(axis);
            for _ in 0..5 {
                let s = random_pure_state(2, &mut rng);
                let direct = l.apply(s.matrix()).unwrap().conjugate_by(sigma).unwrap();
                assert!(conj.apply(s.matrix()).unwrap().max_abs_diff(&direct).unwrap() < 1e-15);
            }
        }
    }

    #[test]
    fn affine_matrix_layout() {
        let m = QubitLambda::new([0.1, 0.2, 0.3], [0.4, 0.5, 0.6]).affine_matrix();
        assert_eq!(m[0], [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(m[2], [0.2, 0.0, 0.5, 0.0]);
    }
}
