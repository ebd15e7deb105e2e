//! Dense complex matrix primitives.

mod det;
mod eigen;
mod matrix;
mod tolerance;

pub use det::determinant;
pub use eigen::{eigen_residual, hermitian_eigen, hermitian_eigenvalues, is_psd, HermitianEigen, PsdCheck};
pub use matrix::{bilinear_trace, frobenius_norm, hermitian_inner, kron, ComplexMatrix};
pub use tolerance::Tolerance;
