use num_complex::Complex;

use super::Channel;
use crate::error::Result;
use crate::linalg::{is_psd, kron, ComplexMatrix, PsdCheck, Tolerance};
use crate::scalar::Real;

/// `C_Φ = Σ_ij E_ij ⊗ Φ(E_ij)`, an `n² × n²` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix<T> {
    dim: usize,
    matrix: ComplexMatrix<T>,
}

impl<T: Real> ChoiMatrix<T> {
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    /// Input dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Block `(i, j)`, i.e. `Φ(E_ij)`.
    pub fn block(&self, i: usize, j: usize) -> ComplexMatrix<T> {
        let n = self.dim;
        ComplexMatrix::from_fn(n, n, |r, c| self.matrix[(i * n + r, j * n + c)])
    }

    /// Partial trace over the output factor: entry `(i, j)` is `Tr Φ(E_ij)`.
    /// Equals the identity exactly when the map is trace preserving.
    pub fn partial_trace_output(&self) -> ComplexMatrix<T> {
        let n = self.dim;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| self.matrix[(i * n + k, j * n + k)]).sum::<Complex<T>>()
        })
    }

    pub fn psd_check(&self, tol: &Tolerance<T>) -> Result<PsdCheck<T>> {
        is_psd(&self.matrix, tol)
    }
}

pub fn to_choi<T: Real, C: Channel<T> + ?Sized>(ch: &C) -> Result<ChoiMatrix<T>> {
    let n = ch.dim();
    let mut matrix = ComplexMatrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let unit = ComplexMatrix::unit(n, i, j);
            let image = ch.apply(&unit)?;
            matrix = &matrix + &kron(&unit, &image);
        }
    }
    Ok(ChoiMatrix { dim: n, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{identity_channel, FamilyChannel, FamilyKind};
    use crate::linalg::hermitian_eigenvalues;

    #[test]
    fn identity_channel_is_rank_one() {
        let choi = to_choi(&identity_channel::<f64>(2)).unwrap();
        let ev = hermitian_eigenvalues(choi.matrix(), &Tolerance::default()).unwrap();
        let want = [0.0, 0.0, 0.0, 2.0];
        for (a, b) in ev.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn zero_parameter_gives_scaled_identity() {
        for kind in FamilyKind::ALL {
            let n = 3;
            let choi = to_choi(&FamilyChannel::new(kind, 0.0, n).unwrap()).unwrap();
            let want = ComplexMatrix::identity(n * n).scale(1.0 / n as f64);
            assert!(choi.matrix().max_abs_diff(&want).unwrap() < 1e-15);
            assert!(choi.partial_trace_output().max_abs_diff(&ComplexMatrix::identity(n)).unwrap() < 1e-15);
        }
    }

    #[test]
    fn dcq_choi_entries() {
        let (n, p) = (4, 0.1);
        let choi = to_choi(&FamilyChannel::new(FamilyKind::Dcq, p, n).unwrap()).unwrap();
        let m = choi.matrix();
        let d = (1.0 - p) / n as f64;
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    for c in 0..n {
                        let got = m[(i * n + r, j * n + c)].re;
                        let want = if i == j && r == c {
                            if r == i { p + d } else { d }
                        } else if i != j && r == i && c == j {
                            -p
                        } else {
                            0.0
                        };
                        assert!((got - want).abs() < 1e-15, "({i},{j}) ({r},{c}) {got} vs {want}");
                    }
                }
            }
        }
        assert_eq!(choi.block(0, 1)[(0, 1)].re, -p);
    }
}
