use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::diagonal::DiagonalChannel;
use super::state::DensityState;
use super::Channel;
use crate::basis::pair_count;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;
use crate::verification::param_range;

/// The four one-parameter families with constant output Frobenius norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `pS + (1-p)/n Tr(S) I`
    #[serde(rename = "dep")]
    Depolarizing,
    /// `pSᵀ + (1-p)/n Tr(S) I`
    #[serde(rename = "trd")]
    TransposeDepolarizing,
    /// `-pS + (1-p)/n Tr(S) I + 2p diag(S)`
    #[serde(rename = "dcq")]
    Dcq,
    /// `-pSᵀ + (1-p)/n Tr(S) I + 2p diag(S)`
    #[serde(rename = "tcq")]
    Tcq,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Depolarizing,
        FamilyKind::TransposeDepolarizing,
        FamilyKind::Dcq,
        FamilyKind::Tcq,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            FamilyKind::Depolarizing => "dep",
            FamilyKind::TransposeDepolarizing => "trd",
            FamilyKind::Dcq => "dcq",
            FamilyKind::Tcq => "tcq",
        }
    }

    /// Signs of the multipliers on the `(x, y, z)` blocks of `ℰ`.
    pub fn sign_pattern(self) -> [i8; 3] {
        match self {
            FamilyKind::Depolarizing => [1, 1, 1],
            FamilyKind::TransposeDepolarizing => [1, -1, 1],
            FamilyKind::Dcq => [-1, -1, 1],
            FamilyKind::Tcq => [-1, 1, 1],
        }
    }

    pub fn transposes(self) -> bool {
        matches!(self, FamilyKind::TransposeDepolarizing | FamilyKind::Tcq)
    }

    /// Whether the map carries the `2p diag(S)` classical part.
    pub fn has_classical_part(self) -> bool {
        matches!(self, FamilyKind::Dcq | FamilyKind::Tcq)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dep" | "depolarizing" => Ok(FamilyKind::Depolarizing),
            "trd" | "transpose-depolarizing" => Ok(FamilyKind::TransposeDepolarizing),
            "dcq" => Ok(FamilyKind::Dcq),
            "tcq" => Ok(FamilyKind::Tcq),
            other => Err(Error::InvalidParameter(format!("unknown family '{other}' (dep|trd|dcq|tcq)"))),
        }
    }
}

/// A member of one of the four families at fixed `(p, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyChannel<T> {
    kind: FamilyKind,
    p: T,
    dim: usize,
    in_range: bool,
}

impl<T: Real> FamilyChannel<T> {
    pub fn new(kind: FamilyKind, p: T, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension { dim, reason: "need n >= 2" });
        }
        if !p.is_finite() {
            return Err(Error::InvalidParameter(format!("p = {p} is not finite")));
        }
        let in_range = param_range::<T>(kind, dim)?.contains(&p);
        Ok(Self { kind, p, dim, in_range })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn p(&self) -> T {
        self.p
    }

    /// Whether `p` lies in the CPTP range of the family.
    pub fn in_cptp_range(&self) -> bool {
        self.in_range
    }

    /// Same family and dimension with another parameter.
    pub fn with_p(&self, p: T) -> Result<Self> {
        Self::new(self.kind, p, self.dim)
    }

    pub fn to_diagonal(&self) -> DiagonalChannel<T> {
        family_to_diagonal(self)
    }
}

impl<T: Real> Channel<T> for FamilyChannel<T> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, s: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        self.check_input(s)?;
        let n = self.dim;
        let p = self.p;
        let base = if self.kind.transposes() { s.transpose() } else { s.clone() };
        let linear = if self.kind.has_classical_part() { -p } else { p };
        let mut out = base.scale(linear);
        let shift = s.trace() * ((T::one() - p) / T::from_count(n));
        for i in 0..n {
            out[(i, i)] += shift;
            if self.kind.has_classical_part() {
                out[(i, i)] += s[(i, i)] * (p + p);
            }
        }
        Ok(out)
    }
}

/// Closed-form action on a state. The output is a raw matrix: it is only a
/// state when `p` is in the CPTP range.
pub fn family_apply<T: Real>(ch: &FamilyChannel<T>, s: &DensityState<T>) -> Result<ComplexMatrix<T>> {
    ch.apply(s.matrix())
}

/// Multipliers on `ℰ` realizing the family.
pub fn family_to_diagonal<T: Real>(ch: &FamilyChannel<T>) -> DiagonalChannel<T> {
    let n = ch.dim;
    let big_n = pair_count(n);
    let [sx, sy, sz] = ch.kind.sign_pattern().map(|s| if s > 0 { ch.p } else { -ch.p });
    let mut t = Vec::with_capacity(n * n - 1);
    t.extend(std::iter::repeat_n(sx, big_n));
    t.extend(std::iter::repeat_n(sy, big_n));
    t.extend(std::iter::repeat_n(sz, n - 1));
    DiagonalChannel::new(n, t).expect("length n²-1 by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Tolerance;
    use crate::random::rng_for;
    use crate::channels::random_pure_state;
    use num_complex::Complex;

    #[test]
    fn depolarizing_limits() {
        let mut rng = rng_for(1, 0);
        let s: DensityState<f64> = random_pure_state(4, &mut rng);
        let zero = FamilyChannel::new(FamilyKind::Depolarizing, 0.0, 4).unwrap();
        let out = family_apply(&zero, &s).unwrap();
        assert!(out.max_abs_diff(&ComplexMatrix::identity(4).scale(0.25)).unwrap() < 1e-16);
        let one = FamilyChannel::new(FamilyKind::Depolarizing, 1.0, 4).unwrap();
        assert!(family_apply(&one, &s).unwrap().max_abs_diff(s.matrix()).unwrap() < 1e-16);
    }

    #[test]
    fn dcq_on_first_basis_state() {
        let ch = FamilyChannel::new(FamilyKind::Dcq, 0.2f64, 3).unwrap();
        let out = family_apply(&ch, &DensityState::basis(3, 0)).unwrap();
        // 2p diag(S) - pS + (1-p)/3 I = diag(0.2 + 0.8/3, 0.8/3, 0.8/3)
        let want = ComplexMatrix::from_real_diagonal(&[0.2 + 0.8 / 3.0, 0.8 / 3.0, 0.8 / 3.0]);
        assert!(out.max_abs_diff(&want).unwrap() < 1e-15);
        assert!((out[(0, 0)].re - 0.4667).abs() < 5e-5);
        assert!((out[(1, 1)].re - 0.2667).abs() < 5e-5);
    }

    #[test]
    fn transpose_relations_are_exact() {
        let mut rng = rng_for(2, 0);
        for n in 2..6 {
            let s: DensityState<f64> = random_pure_state(n, &mut rng);
            let st = DensityState::new_unchecked(s.matrix().transpose());
            let pairs = [
                (FamilyKind::TransposeDepolarizing, FamilyKind::Depolarizing),
                (FamilyKind::Tcq, FamilyKind::Dcq),
            ];
            for (a, b) in pairs {
                let lhs = family_apply(&FamilyChannel::new(a, 0.1, n).unwrap(), &s).unwrap();
                let rhs = family_apply(&FamilyChannel::new(b, 0.1, n).unwrap(), &st).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn output_trace_is_one() {
        let mut rng = rng_for(3, 0);
        for kind in FamilyKind::ALL {
            let ch = FamilyChannel::new(kind, -0.05, 5).unwrap();
            let s: DensityState<f64> = random_pure_state(5, &mut rng);
            let tr = family_apply(&ch, &s).unwrap().trace();
            assert!((tr - Complex::new(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn diagonal_sign_patterns() {
        let dep = family_to_diagonal(&FamilyChannel::new(FamilyKind::Depolarizing, 0.3, 3).unwrap());
        assert_eq!(dep.t(), &[0.3; 8]);
        let tcq = family_to_diagonal(&FamilyChannel::new(FamilyKind::Tcq, 0.3, 2).unwrap());
        assert_eq!(tcq.t(), &[-0.3, 0.3, 0.3]);
        for kind in FamilyKind::ALL {
            let z = family_to_diagonal(&FamilyChannel::new(kind, 0.0, 4).unwrap());
            assert!(z.t().iter().all(|&x| x == 0.0));
        }
    }

    #[test]
    fn range_flag_and_errors() {
        assert!(FamilyChannel::new(FamilyKind::Dcq, 0.25, 3).unwrap().in_cptp_range());
        assert!(!FamilyChannel::new(FamilyKind::Dcq, 0.3, 3).unwrap().in_cptp_range());
        assert!(FamilyChannel::new(FamilyKind::Dcq, f64::NAN, 3).is_err());
        assert!(FamilyChannel::new(FamilyKind::Dcq, 0.1, 1).is_err());
        let ch = FamilyChannel::new(FamilyKind::Dcq, 0.1, 3).unwrap();
        assert!(matches!(ch.apply(&ComplexMatrix::identity(2)), Err(Error::DimensionMismatch { .. })));
        assert!(DensityState::new(ComplexMatrix::<f64>::identity(2), &Tolerance::default()).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("dcq".parse::<FamilyKind>().unwrap(), FamilyKind::Dcq);
        assert_eq!("TRD".parse::<FamilyKind>().unwrap(), FamilyKind::TransposeDepolarizing);
        assert!("foo".parse::<FamilyKind>().is_err());
    }
}
