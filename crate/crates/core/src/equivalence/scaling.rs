use serde::Serialize;

use crate::channels::{random_pure_state, Channel, FamilyChannel, FamilyKind};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::random::rng_for;
use crate::scalar::{Field, Real};
use crate::verification::{param_range, VerificationReport};

/// Multipliers `α` with `α·p` inside the CPTP range.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaInterval<F> {
    pub kind: FamilyKind,
    pub dim: usize,
    pub p: F,
    pub alpha_min: F,
    pub alpha_max: F,
}

impl<F: Field> AlphaInterval<F> {
    pub fn contains(&self, alpha: &F) -> bool {
        *alpha >= self.alpha_min && *alpha <= self.alpha_max
    }
}

pub fn alpha_interval<F: Field>(kind: FamilyKind, p: F, n: usize) -> Result<AlphaInterval<F>> {
    if p.is_zero() {
        return Err(Error::InvalidParameter("alpha interval is unbounded at p = 0".into()));
    }
    let r = param_range::<F>(kind, n)?;
    let (lo, hi) = if p > F::zero() {
        (r.p_min / p.clone(), r.p_max / p.clone())
    } else {
        (r.p_max / p.clone(), r.p_min / p.clone())
    };
    Ok(AlphaInterval { kind, dim: n, p, alpha_min: lo, alpha_max: hi })
}

/// Channel with parameter `α·p`, after checking
/// `Φ(αp, S) = αΦ(p, S) + ((1-α)/n) Tr(S) I` on `trials` random pure states.
pub fn scale_family<T: Real>(
    ch: &FamilyChannel<T>,
    alpha: T,
    trials: usize,
    seed: u64,
    tol: T,
) -> Result<(FamilyChannel<T>, VerificationReport)> {
    let n = ch.dim();
    let q = alpha * ch.p();
    let r = param_range::<T>(ch.kind(), n)?;
    if !r.contains(&q) {
        return Err(Error::ParameterOutOfRange {
            family: ch.kind().short_name(),
            p: q.as_f64(),
            p_min: r.p_min.as_f64(),
            p_max: r.p_max.as_f64(),
            detail: format!(" (alpha = {alpha})"),
        });
    }
    let scaled = ch.with_p(q)?;
    let mut report = VerificationReport::new("scaling_identity");
    let shift = (T::one() - alpha) / T::from_count(n);
    for i in 0..trials {
        let mut rng = rng_for(seed, i as u64);
        let s = random_pure_state::<T, _>(n, &mut rng);
        let lhs = scaled.apply(s.matrix())?;
        let mut rhs = ch.apply(s.matrix())?.scale(alpha);
        rhs.add_scaled_assign(s.matrix().trace() * shift, &ComplexMatrix::identity(n));
        let dev = lhs.max_abs_diff(&rhs)?;
        report.record_deviation(dev.as_f64());
        if !(dev <= tol) {
            report.fail(format!("trial {i}: deviation {:e}", dev.as_f64()));
        }
        report.samples_used += 1;
    }
    Ok((scaled, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::completely_depolarizing;
    use crate::scalar::{rational, Rational};

    #[test]
    fn documented_intervals() {
        let a = alpha_interval(FamilyKind::Depolarizing, rational(1, 2), 3).unwrap();
        assert_eq!((a.alpha_min, a.alpha_max), (rational(-1, 4), rational(2, 1)));
        let a = alpha_interval(FamilyKind::Tcq, rational(-1, 10), 3).unwrap();
        assert_eq!((a.alpha_min, a.alpha_max), (rational(-5, 2), rational(5, 1)));
        for kind in FamilyKind::ALL {
            let pmax = param_range::<Rational>(kind, 4).unwrap().p_max;
            assert_eq!(alpha_interval(kind, pmax, 4).unwrap().alpha_max, rational(1, 1));
        }
        assert!(alpha_interval(FamilyKind::Dcq, 0.0f64, 3).is_err());
    }

    #[test]
    fn scaling_examples() {
        let ch = FamilyChannel::new(FamilyKind::Depolarizing, 0.5f64, 3).unwrap();
        let (half, rep) = scale_family(&ch, 0.5, 20, 1, 1e-12).unwrap();
        assert_eq!(half.p(), 0.25);
        assert!(rep.passed);
        let (same, rep) = scale_family(&ch, 1.0, 5, 1, 1e-12).unwrap();
        assert!(rep.passed && same == ch);
        let (zero, _) = scale_family(&ch, 0.0, 1, 1, 1e-12).unwrap();
        let cd = completely_depolarizing::<f64>(3);
        let s = ComplexMatrix::unit(3, 1, 1);
        assert!(zero.apply(&s).unwrap().max_abs_diff(&cd.apply(&s).unwrap()).unwrap() < 1e-16);
        assert!(scale_family(&ch, 3.0, 1, 1, 1e-12).is_err());
    }

    #[test]
    fn interval_membership_matches_range() {
        for kind in FamilyKind::ALL {
            let p = rational(1, 7);
            let a = alpha_interval(kind, p.clone(), 5).unwrap();
            let r = param_range::<Rational>(kind, 5).unwrap();
            for k in -40..=40 {
                let alpha = rational(k, 4);
                assert_eq!(a.contains(&alpha), r.contains(&(alpha.clone() * p.clone())));
            }
        }
    }
}
