use super::family::FamilyKind;
use crate::scalar::Field;

/// Weights of the identity, `x`, `y` and `z` conjugation sums.
#[derive(Debug, Clone, PartialEq)]
pub struct FormCoefficients<F> {
    pub identity: F,
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: Field> FormCoefficients<F> {
    pub fn as_array(&self) -> [F; 4] {
        [self.identity.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// First negative coefficient, labeled.
    pub fn first_negative(&self) -> Option<(&'static str, F)> {
        ["c0", "cx", "cy", "cz"]
            .into_iter()
            .zip(self.as_array())
            .find(|(_, c)| *c < F::zero())
    }
}

/// Coefficients of both conjugation-sum representations of a family:
///
/// * `pauli`: `c0 S + cx Σ σx S σx + cy Σ σy S σy + cz Σ σz S σz` over all pairs,
/// * `basis`: `c̃0 e0 S e0 + c̃x Σ ex S ex + c̃y Σ ey S ey + c̃z Σ ez S ez` over `ℰ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReprCoefficients<F> {
    pub pauli: FormCoefficients<F>,
    pub basis: FormCoefficients<F>,
}

pub fn repr_coefficients<F: Field>(kind: FamilyKind, p: F, n: usize) -> ReprCoefficients<F> {
    let nf = F::from_count(n);
    let n2 = nf.clone() * nf.clone();
    let one = F::one();
    let two = F::from_int(2);
    let q = one.clone() - p.clone();
    // numerators shared by the two forms
    let (a0, ax, ay, az) = match kind {
        FamilyKind::Depolarizing => {
            let a0 = one.clone() + (n2.clone() - one.clone()) * p.clone();
            (a0, q.clone(), q.clone(), q.clone())
        }
        FamilyKind::TransposeDepolarizing => {
            let plus = one.clone() + (nf.clone() - one.clone()) * p.clone();
            let minus = one.clone() - (nf.clone() + one.clone()) * p.clone();
            (plus.clone(), plus.clone(), minus, plus)
        }
        FamilyKind::Dcq => {
            let m = nf.clone() - one.clone();
            let a0 = one.clone() - m.clone() * m * p.clone();
            let az = one.clone() + (two.clone() * nf.clone() - one.clone()) * p.clone();
            (a0, q.clone(), q.clone(), az)
        }
        FamilyKind::Tcq => {
            let plus = one.clone() + (nf.clone() - one.clone()) * p.clone();
            let minus = one.clone() - (nf.clone() + one.clone()) * p.clone();
            (plus.clone(), minus, plus.clone(), plus)
        }
    };
    let two_n = two * nf.clone();
    ReprCoefficients {
        pauli: FormCoefficients {
            identity: a0.clone() / n2.clone(),
            x: ax.clone() / two_n.clone(),
            y: ay.clone() / two_n,
            z: az.clone() / n2,
        },
        basis: FormCoefficients {
            identity: a0 / nf.clone(),
            x: ax / nf.clone(),
            y: ay / nf.clone(),
            z: az / nf,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};

    #[test]
    fn depolarizing_quarter_in_three_dims() {
        let c = repr_coefficients(FamilyKind::Depolarizing, rational(1, 4), 3);
        assert_eq!(c.pauli.as_array(), [rational(1, 3), rational(1, 8), rational(1, 8), rational(1, 12)]);
        assert_eq!(c.basis.as_array(), [rational(1, 1), rational(1, 4), rational(1, 4), rational(1, 4)]);
    }

    #[test]
    fn transpose_depolarizing_at_zero() {
        for n in 2..8i64 {
            let c = repr_coefficients(FamilyKind::TransposeDepolarizing, Rational::from_int(0), n as usize);
            assert_eq!(c.pauli.identity, rational(1, n * n));
            assert_eq!(c.pauli.z, rational(1, n * n));
            assert_eq!(c.pauli.x, rational(1, 2 * n));
            assert_eq!(c.pauli.y, rational(1, 2 * n));
        }
    }

    #[test]
    fn dcq_upper_endpoint_drops_identity() {
        let c = repr_coefficients(FamilyKind::Dcq, rational(1, 4), 3);
        assert_eq!(c.pauli.identity, rational(0, 1));
        assert_eq!(c.pauli.first_negative(), None);
        let c = repr_coefficients(FamilyKind::Dcq, rational(26, 100), 3);
        assert_eq!(c.pauli.first_negative().map(|(name, _)| name), Some("c0"));
    }

    #[test]
    fn qubit_dcq_matches_variant_c() {
        // at n = 2, multipliers (-p, -p, p): conjugation by σz negates x and y
        let p = rational(3, 10);
        let c = repr_coefficients(FamilyKind::Dcq, p.clone(), 2);
        // c0 = (1 - p)/4, cx = cy = (1 - p)/4, cz = (1 + 3p)/4
        assert_eq!(c.pauli.identity, rational(7, 40));
        assert_eq!(c.pauli.x, rational(7, 40));
        assert_eq!(c.pauli.y, rational(7, 40));
        assert_eq!(c.pauli.z, rational(19, 40));
        let total: Rational = c.pauli.as_array().into_iter().fold(Rational::from_int(0), |a, b| a + b);
        assert_eq!(total, Rational::from_int(1));
    }

    #[test]
    fn forms_are_related_by_normalization() {
        for kind in FamilyKind::ALL {
            for n in 2..7i64 {
                let c = repr_coefficients(kind, rational(1, 7), n as usize);
                assert_eq!(c.basis.identity.clone() / Rational::from_int(n), c.pauli.identity);
                assert_eq!(c.basis.x.clone() / Rational::from_int(2), c.pauli.x);
                assert_eq!(c.basis.y.clone() / Rational::from_int(2), c.pauli.y);
                assert_eq!(c.basis.z.clone() / Rational::from_int(n), c.pauli.z);
            }
        }
    }
}
