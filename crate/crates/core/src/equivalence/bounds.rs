use std::fmt;

use serde::Serialize;

use crate::channels::FamilyKind;
use crate::error::{Error, Result};
use crate::poly::{AlgebraicRoot, Polynomial};
use crate::scalar::rational;
use crate::verification::range_denominators;

/// Family pairs whose members produce equal spectra on every witness, so
/// that only the parameter ranges can separate them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchingPair {
    DepTrd,
    DcqTcq,
}

impl MatchingPair {
    pub fn kinds(self) -> (FamilyKind, FamilyKind) {
        match self {
            MatchingPair::DepTrd => (FamilyKind::Depolarizing, FamilyKind::TransposeDepolarizing),
            MatchingPair::DcqTcq => (FamilyKind::Dcq, FamilyKind::Tcq),
        }
    }

    pub fn from_kinds(a: FamilyKind, b: FamilyKind) -> Option<Self> {
        use FamilyKind::*;
        match (a, b) {
            (Depolarizing, TransposeDepolarizing) | (TransposeDepolarizing, Depolarizing) => Some(Self::DepTrd),
            (Dcq, Tcq) | (Tcq, Dcq) => Some(Self::DcqTcq),
            _ => None,
        }
    }
}

impl fmt::Display for MatchingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.kinds();
        write!(f, "{a},{b}")
    }
}

/// Solution of the endpoint-matching condition in `n`.
///
/// If `Φ_A(p)` and `Φ_B(p̃)` were equivalent for all admissible scalings, the
/// `α`-intervals of both would coincide. Writing the ranges as
/// `[-1/L(n), 1/U(n)]`, the ratio `p̃/p` eliminates to
/// `L_A U_B - U_A L_B = 0` (same sign) or `L_A L_B - U_A U_B = 0`
/// (opposite sign).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundMatching {
    pub pair: MatchingPair,
    pub dim: usize,
    pub same_sign: bool,
    /// The eliminated polynomial, shown in `n`.
    pub polynomial: String,
    /// Real roots after dropping those where a denominator vanishes.
    pub roots: Vec<AlgebraicRoot>,
    pub excluded_roots: Vec<AlgebraicRoot>,
    /// Integer roots `n >= 3`; always empty.
    pub admissible_roots: Vec<i64>,
    /// Whether `dim` solves the system.
    pub feasible_at_dim: bool,
    /// True for the opposite-sign solution `n = 2`.
    pub known_qubit_equivalence: bool,
    pub detail: String,
}

pub fn matching_polynomial(pair: MatchingPair, same_sign: bool) -> Polynomial {
    let (a, b) = pair.kinds();
    let (da, db) = (range_denominators(a), range_denominators(b));
    if same_sign {
        da.lower.mul(&db.upper).sub(&da.upper.mul(&db.lower))
    } else {
        da.lower.mul(&db.lower).sub(&da.upper.mul(&db.upper))
    }
}

pub fn bound_matching_system(pair: MatchingPair, n: usize, same_sign: bool) -> Result<BoundMatching> {
    if n < 2 {
        return Err(Error::InvalidDimension { dim: n, reason: "need n >= 2" });
    }
    let poly = matching_polynomial(pair, same_sign);
    let (a, b) = pair.kinds();
    let denominators = [range_denominators(a), range_denominators(b)];
    let vanishes = |r: &AlgebraicRoot| match r.as_rational() {
        Some(x) => denominators
            .iter()
            .any(|d| d.lower.eval_exact(x) == rational(0, 1) || d.upper.eval_exact(x) == rational(0, 1)),
        // the denominators are products of linear factors with rational roots
        None => false,
    };
    let (excluded, roots): (Vec<_>, Vec<_>) = poly.real_roots()?.into_iter().partition(vanishes);
    let admissible: Vec<i64> = roots.iter().filter_map(|r| r.as_integer()).filter(|&k| k >= 3).collect();
    let feasible = roots.iter().any(|r| r.as_integer() == Some(n as i64));
    let known = !same_sign && feasible && n == 2;
    let listed = roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ");
    let sign = if same_sign { "same-sign" } else { "opposite-sign" };
    let detail = if feasible {
        format!("{sign} system {poly} = 0 is solved by n = {n}, the known qubit equivalence")
    } else {
        format!("{sign} system {poly} = 0 forces n in {{{listed}}}, excluding n = {n}")
    };
    Ok(BoundMatching {
        pair,
        dim: n,
        same_sign,
        polynomial: poly.to_string(),
        roots,
        excluded_roots: excluded,
        admissible_roots: admissible,
        feasible_at_dim: feasible,
        known_qubit_equivalence: known,
        detail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn exact(b: &BoundMatching) -> Vec<String> {
        b.roots.iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn dep_trd_roots() {
        let b = bound_matching_system(MatchingPair::DepTrd, 3, true).unwrap();
        assert_eq!(exact(&b), ["-2", "0"]);
        assert_eq!(b.excluded_roots, vec![AlgebraicRoot::Rational(rational(1, 1))]);
        assert!(!b.feasible_at_dim && b.admissible_roots.is_empty());
        let b = bound_matching_system(MatchingPair::DepTrd, 2, false).unwrap();
        assert_eq!(exact(&b), ["0", "2"]);
        assert!(b.feasible_at_dim && b.known_qubit_equivalence);
        let b = bound_matching_system(MatchingPair::DepTrd, 5, false).unwrap();
        assert!(!b.feasible_at_dim && !b.known_qubit_equivalence);
    }

    #[test]
    fn dcq_tcq_roots() {
        let b = bound_matching_system(MatchingPair::DcqTcq, 4, true).unwrap();
        assert_eq!(exact(&b), ["0", "(5-√17)/2", "(5+√17)/2"]);
        assert!((b.roots[2].value() - (5.0 + 17f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(!b.feasible_at_dim);
        let b = bound_matching_system(MatchingPair::DcqTcq, 2, false).unwrap();
        assert_eq!(exact(&b), ["0", "2"]);
        assert!(b.known_qubit_equivalence);
        assert!(bound_matching_system(MatchingPair::DcqTcq, 2, true).unwrap().roots.len() == 3);
    }

    #[test]
    fn no_admissible_dimension() {
        for pair in [MatchingPair::DepTrd, MatchingPair::DcqTcq] {
            for same in [true, false] {
                for n in 3..10 {
                    let b = bound_matching_system(pair, n, same).unwrap();
                    assert!(!b.feasible_at_dim && b.admissible_roots.is_empty());
                }
            }
        }
    }

    #[test]
    fn pair_lookup() {
        assert_eq!(MatchingPair::from_kinds(FamilyKind::Tcq, FamilyKind::Dcq), Some(MatchingPair::DcqTcq));
        assert_eq!(MatchingPair::from_kinds(FamilyKind::Dcq, FamilyKind::Depolarizing), None);
        assert_eq!(MatchingPair::DepTrd.to_string(), "dep,trd");
    }
}
