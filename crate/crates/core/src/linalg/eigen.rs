//! Cyclic complex Jacobi eigensolver for small Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies a real symmetric Jacobi rotation. Sweeps stop once the
//! off-diagonal Frobenius mass is below machine precision relative to `‖m‖_F`.

use num_complex::Complex;
use num_traits::Zero;

use super::matrix::ComplexMatrix;
use super::tolerance::Tolerance;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order and the matching eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    pub vectors: ComplexMatrix<T>,
}

/// Outcome of a positive-semidefiniteness check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdCheck<T> {
    pub is_psd: bool,
    pub min_eigenvalue: T,
}

fn symmetrized_checked<T: Real>(m: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<ComplexMatrix<T>> {
    m.require_square()?;
    m.check_finite()?;
    let deviation = m.hermiticity_deviation()?;
    if deviation > tol.bound(m.frobenius_norm()) {
        return Err(Error::NotHermitian {
            deviation: deviation.as_f64(),
        });
    }
    Ok(m.hermitian_part())
}

/// Full eigendecomposition of a Hermitian matrix (symmetrized before solving).
pub fn hermitian_eigen<T: Real>(m: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<HermitianEigen<T>> {
    let a = symmetrized_checked(m, tol)?;
    Ok(jacobi(a))
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn hermitian_eigenvalues<T: Real>(m: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<Vec<T>> {
    hermitian_eigen(m, tol).map(|e| e.values)
}

/// PSD test with threshold `-(tol.absolute + tol.relative * ‖m‖_F)`.
pub fn is_psd<T: Real>(m: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<PsdCheck<T>> {
    let values = hermitian_eigenvalues(m, tol)?;
    let min_eigenvalue = values[0];
    Ok(PsdCheck {
        is_psd: min_eigenvalue >= -tol.bound(m.frobenius_norm()),
        min_eigenvalue,
    })
}

fn off_diagonal_mass<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut acc = T::zero();
    for p in 0..n {
        for q in (p + 1)..n {
            acc += a[(p, q)].norm_sqr();
        }
    }
    acc
}

fn jacobi<T: Real>(mut a: ComplexMatrix<T>) -> HermitianEigen<T> {
    let n = a.rows();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();
    let threshold = T::epsilon() * scale;

    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_mass(&a).sqrt();
        if off <= threshold || off.is_zero() {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite eigenvalues"));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    HermitianEigen { values, vectors }
}

fn rotate<T: Real>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag <= T::min_positive_value() {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let two = T::one() + T::one();
    let theta = (aqq - app) / (two * mag);
    let t = if theta.is_infinite() {
        T::zero()
    } else {
        let sign = if theta < T::zero() { -T::one() } else { T::one() };
        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    // U = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
    let phase_conj = (apq / mag).conj();
    let u_pp = Complex::new(c, T::zero());
    let u_pq = Complex::new(s, T::zero());
    let u_qp = phase_conj * (-s);
    let u_qq = phase_conj * c;

    let n = a.rows();
    for r in 0..n {
        let (x, y) = (a[(r, p)], a[(r, q)]);
        a[(r, p)] = x * u_pp + y * u_qp;
        a[(r, q)] = x * u_pq + y * u_qq;
        let (x, y) = (v[(r, p)], v[(r, q)]);
        v[(r, p)] = x * u_pp + y * u_qp;
        v[(r, q)] = x * u_pq + y * u_qq;
    }
    for r in 0..n {
        let (x, y) = (a[(p, r)], a[(q, r)]);
        a[(p, r)] = u_pp.conj() * x + u_qp.conj() * y;
        a[(q, r)] = u_pq.conj() * x + u_qq.conj() * y;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
}

/// Largest `|m v - λ v|` column residual of a decomposition; used in tests and reports.
pub fn eigen_residual<T: Real>(m: &ComplexMatrix<T>, eig: &HermitianEigen<T>) -> T {
    let n = m.rows();
    let mv = m * &eig.vectors;
    let mut worst = T::zero();
    for c in 0..n {
        let mut acc = T::zero();
        for r in 0..n {
            acc += (mv[(r, c)] - eig.vectors[(r, c)] * eig.values[c]).norm_sqr();
        }
        worst = worst.max(acc.sqrt());
    }
    worst
}
