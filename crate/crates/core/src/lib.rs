//! Quantum channels with constant output Frobenius norm on pure states.
//!
//! The crate builds the orthonormal Hermitian basis `ℰ` of `n × n` matrices
//! (normalized identity, pair-supported Pauli matrices and diagonal
//! `M_{z,k}`), represents channels that act diagonally on it, and checks the
//! four one-parameter families
//!
//! | family | map |
//! |---|---|
//! | depolarizing | `pS + (1-p)/n Tr(S) I` |
//! | transpose-depolarizing | `pSᵀ + (1-p)/n Tr(S) I` |
//! | DCQ | `-pS + (1-p)/n Tr(S) I + 2p diag(S)` |
//! | TCQ | `-pSᵀ + (1-p)/n Tr(S) I + 2p diag(S)` |
//!
//! for complete positivity, constant output norm and (in)equivalence under
//! unitary conjugation.
//!
//! Numerics are generic over [`scalar::Real`] (`f32`, `f64`); range and
//! determinant computations also run over exact rationals through
//! [`scalar::Field`].
//!
//! ```
//! use qchan::{Family, FamilyKind, State};
//! use qchan::channels::family_apply;
//! use qchan::verification::{is_cptp, param_range};
//!
//! let r = param_range::<f64>(FamilyKind::Dcq, 3).unwrap();
//! let ch = Family::new(FamilyKind::Dcq, r.p_max, 3).unwrap();
//! assert!(is_cptp(&ch, 1e-9).unwrap().passed);
//! let out = family_apply(&ch, &State::basis(3, 0)).unwrap();
//! assert!((out.trace().re - 1.0).abs() < 1e-12);
//! ```

// `!(x <= tol)` is used on purpose so that NaN fails a check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod basis;
pub mod channels;
pub mod equivalence;
pub mod error;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod reproduce;
pub mod scalar;
pub mod verification;

pub use channels::{Channel, FamilyKind};
pub use error::{Error, Result};
pub use scalar::Rational;

/// Double-precision complex matrix.
pub type Matrix = linalg::ComplexMatrix<f64>;
/// Single-precision complex matrix.
pub type Matrix32 = linalg::ComplexMatrix<f32>;
pub type State = channels::DensityState<f64>;
pub type Family = channels::FamilyChannel<f64>;
pub type Diagonal = channels::DiagonalChannel<f64>;
pub type Kraus = channels::KrausSet<f64>;
pub type Qubit = channels::QubitLambda<f64>;
