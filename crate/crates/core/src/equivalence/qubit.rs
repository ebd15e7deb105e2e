use crate::channels::{qubit_paulis, random_pure_state, Channel, DiagonalChannel};
use crate::error::{Error, Result};
use crate::random::rng_for;
use crate::scalar::Real;
use crate::verification::{VerificationReport, QUBIT_VARIANTS};

/// Qubit diagonal channel with multipliers `p·pattern(variant)`, `variant` in `1..=4`.
pub fn qubit_variant<T: Real>(variant: usize, p: T) -> Result<DiagonalChannel<T>> {
    let pattern = QUBIT_VARIANTS
        .get(variant.wrapping_sub(1))
        .ok_or_else(|| Error::InvalidParameter(format!("variant {variant} not in 1..=4")))?;
    DiagonalChannel::new(2, pattern.iter().map(|&s| if s > 0 { p } else { -p }).collect())
}

/// The three conjugation identities reducing the qubit variants to the
/// depolarizing channel: `σ_y Φ₂(-p) σ_y`, `σ_z Φ₃(p) σ_z` and
/// `σ_x Φ₄(-p) σ_x` all equal `Φ₁(p)`. Requires `p ∈ [-1/3, 1]` so that
/// every channel involved is CPTP.
pub fn qubit_equivalence_check<T: Real>(p: T, trials: usize, seed: u64, tol: T) -> Result<VerificationReport> {
    let third = T::one() / T::from_int(3);
    if !(p >= -third && p <= T::one()) {
        return Err(Error::ParameterOutOfRange {
            family: "qubit",
            p: p.as_f64(),
            p_min: -1.0 / 3.0,
            p_max: 1.0,
            detail: " (every variant must be CPTP at n = 2)".into(),
        });
    }
    let [sx, sy, sz] = qubit_paulis::<T>();
    let target = qubit_variant(1, p)?;
    let cases = [
        ("sigma_y Phi_2(-p) sigma_y", qubit_variant(2, -p)?, &sy),
        ("sigma_z Phi_3(p) sigma_z", qubit_variant(3, p)?, &sz),
        ("sigma_x Phi_4(-p) sigma_x", qubit_variant(4, -p)?, &sx),
    ];
    let mut report = VerificationReport::new("qubit_equivalence");
    report.set_metric("p", p.as_f64());
    let mut worst = [T::zero(); 3];
    for i in 0..trials {
        let mut rng = rng_for(seed, i as u64);
        let s = random_pure_state::<T, _>(2, &mut rng);
        let want = target.apply(s.matrix())?;
        for (k, (label, ch, sigma)) in cases.iter().enumerate() {
            let got = ch.apply(s.matrix())?.conjugate_by(sigma)?;
            let dev = got.max_abs_diff(&want)?;
            worst[k] = worst[k].max(dev);
            if !(dev <= tol) {
                report.fail(format!("{label}, trial {i}: deviation {:e}", dev.as_f64()));
            }
        }
        report.samples_used += 1;
    }
    for ((label, ..), w) in cases.iter().zip(worst) {
        report.set_metric(format!("{label}.max_deviation"), w.as_f64());
        report.record_deviation(w.as_f64());
    }
    Ok(report)
}
