use num_complex::Complex;

use super::report::VerificationReport;
use crate::basis::PairIndex;
use crate::channels::{random_pure_state, Channel, DensityState, DiagonalChannel};
use crate::error::{Error, Result};
use crate::random::rng_for;
use crate::scalar::Real;

/// Result of the `|t_i| = |t_j|` test on a diagonal channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FnormCriterion<T> {
    pub constant: bool,
    /// `max |t_i| - min |t_i|`.
    pub spread: T,
    /// `√(1/n + t₁²(1 - 1/n))`, present when `constant`.
    pub expected_norm: Option<T>,
}

/// Output norm on pure states for multipliers of common modulus `|t|`.
pub fn expected_pure_norm<T: Real>(n: usize, t: T) -> T {
    let inv = T::one() / T::from_count(n);
    (inv + t * t * (T::one() - inv)).sqrt()
}

pub fn constant_fnorm_criterion<T: Real>(ch: &DiagonalChannel<T>, tol: T) -> FnormCriterion<T> {
    let abs = ch.t().iter().map(|x| x.abs());
    let max = abs.clone().fold(T::neg_infinity(), T::max);
    let min = abs.fold(T::infinity(), T::min);
    let spread = max - min;
    let constant = spread <= tol;
    FnormCriterion {
        constant,
        spread,
        expected_norm: constant.then(|| expected_pure_norm(ch.dim(), ch.t()[0])),
    }
}

/// Deterministic pure states, each labeled: `S_k` basis projectors, then
/// `ξ_(k,l)` from `(e_k + e_l)/√2` and `η_(k,l)` from `(i e_k + e_l)/√2`.
pub fn labeled_witness_states<T: Real>(n: usize) -> Result<Vec<(String, DensityState<T>)>> {
    if n < 2 {
        return Err(Error::InvalidDimension { dim: n, reason: "need n >= 2" });
    }
    let r = T::one() / T::from_int(2).sqrt();
    let mut out: Vec<_> = (0..n).map(|k| (format!("S_{}", k + 1), DensityState::basis(n, k))).collect();
    let pairs = PairIndex::all(n);
    for (name, first) in [("xi", Complex::new(r, T::zero())), ("eta", Complex::new(T::zero(), r))] {
        for pair in &pairs {
            let mut v = vec![Complex::new(T::zero(), T::zero()); n];
            v[pair.k() - 1] = first;
            v[pair.l() - 1] = Complex::new(r, T::zero());
            out.push((format!("{name}_({},{})", pair.k(), pair.l()), DensityState::pure(&v)?));
        }
    }
    Ok(out)
}

pub fn witness_states<T: Real>(n: usize) -> Result<Vec<DensityState<T>>> {
    Ok(labeled_witness_states(n)?.into_iter().map(|(_, s)| s).collect())
}

/// Output Frobenius norm over the witness states followed by `samples`
/// Haar-random pure states (sample `i` drawn from stream `i` of `seed`).
/// Passes iff `max - min <= tol`.
pub fn constant_fnorm_sample_test<T: Real, C: Channel<T> + ?Sized>(
    ch: &C,
    samples: usize,
    seed: u64,
    tol: T,
) -> Result<VerificationReport> {
    let n = ch.dim();
    let mut norms: Vec<(String, T)> = Vec::new();
    for (label, s) in labeled_witness_states::<T>(n)? {
        norms.push((label, ch.apply(s.matrix())?.frobenius_norm()));
    }
    let witnesses = norms.len();
    let mut trace_violation = T::zero();
    for i in 0..samples {
        let mut rng = rng_for(seed, i as u64);
        let s = random_pure_state::<T, _>(n, &mut rng);
        let out = ch.apply(s.matrix())?;
        trace_violation = trace_violation.max((out.trace() - Complex::new(T::one(), T::zero())).norm());
        norms.push((format!("sample {i}"), out.frobenius_norm()));
    }

    let total = T::from_count(norms.len());
    let mean = norms.iter().map(|(_, v)| *v).sum::<T>() / total;
    let (lo, hi) = extremes(&norms);
    let spread = norms[hi].1 - norms[lo].1;
    let max_dev = norms.iter().map(|(_, v)| (*v - mean).abs()).fold(T::zero(), T::max);

    // spread restricted to the deterministic set
    let (wlo, whi) = extremes(&norms[..witnesses]);
    let witness_spread = norms[whi].1 - norms[wlo].1;

    let mut report = VerificationReport::new("constant_fnorm");
    report.samples_used = norms.len();
    report.trace_violation = trace_violation.as_f64();
    report.max_deviation = max_dev.as_f64();
    report.set_metric("mean_norm", mean.as_f64());
    report.set_metric("min_norm", norms[lo].1.as_f64());
    report.set_metric("max_norm", norms[hi].1.as_f64());
    report.set_metric("spread", spread.as_f64());
    report.set_metric("witness_spread", witness_spread.as_f64());
    if !(spread <= tol) {
        report.fail(format!(
            "{} (norm {:.12}) vs {} (norm {:.12})",
            norms[lo].0,
            norms[lo].1.as_f64(),
            norms[hi].0,
            norms[hi].1.as_f64()
        ));
    }
    Ok(report)
}

fn extremes<T: Real>(v: &[(String, T)]) -> (usize, usize) {
    let mut lo = 0;
    let mut hi = 0;
    for (i, (_, x)) in v.iter().enumerate() {
        // NaN norms land in both slots so the spread is NaN
        if x.is_nan() || *x < v[lo].1 {
            lo = i;
        }
        if x.is_nan() || *x > v[hi].1 {
            hi = i;
        }
    }
    (lo, hi)
}
