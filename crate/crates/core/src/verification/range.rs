use crate::channels::FamilyKind;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Field;

/// Endpoints written as `p_min = -1 / lower(n)` and `p_max = 1 / upper(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RangeDenominators {
    pub lower: Polynomial,
    pub upper: Polynomial,
}

pub fn range_denominators(kind: FamilyKind) -> RangeDenominators {
    let (lower, upper) = match kind {
        FamilyKind::Depolarizing => (Polynomial::from_ints(&[-1, 0, 1]), Polynomial::constant(1)),
        FamilyKind::TransposeDepolarizing | FamilyKind::Tcq => {
            (Polynomial::from_ints(&[-1, 1]), Polynomial::from_ints(&[1, 1]))
        }
        FamilyKind::Dcq => (Polynomial::from_ints(&[-1, 2]), Polynomial::from_ints(&[1, -2, 1])),
    };
    RangeDenominators { lower, upper }
}

/// Closed interval of `p` for which a family is completely positive and trace preserving.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamRange<F> {
    pub kind: FamilyKind,
    pub dim: usize,
    pub p_min: F,
    pub p_max: F,
}

impl<F: Field> ParamRange<F> {
    pub fn contains(&self, p: &F) -> bool {
        *p >= self.p_min && *p <= self.p_max
    }

    /// Membership allowing `slack` outside either endpoint.
    pub fn contains_within(&self, p: &F, slack: &F) -> bool {
        *p >= self.p_min.clone() - slack.clone() && *p <= self.p_max.clone() + slack.clone()
    }

    pub fn width(&self) -> F {
        self.p_max.clone() - self.p_min.clone()
    }
}

/// CPTP parameter range of a family in dimension `n`.
pub fn param_range<F: Field>(kind: FamilyKind, n: usize) -> Result<ParamRange<F>> {
    if n < 2 {
        return Err(Error::InvalidDimension { dim: n, reason: "need n >= 2" });
    }
    let d = range_denominators(kind);
    let nf = F::from_count(n);
    Ok(ParamRange {
        kind,
        dim: n,
        p_min: -(F::one() / d.lower.eval(&nf)),
        p_max: F::one() / d.upper.eval(&nf),
    })
}
