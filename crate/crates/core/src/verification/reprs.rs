use super::identities::{basis_conjugation_sum, pauli_conjugation_sum};
use super::report::VerificationReport;
use crate::basis::{PauliKind, Sector};
use crate::channels::{repr_coefficients, Channel, FamilyChannel, FamilyKind};
use crate::error::Result;
use crate::linalg::ComplexMatrix;
use crate::random::{random_hermitian, rng_for};
use crate::scalar::Real;

/// `c0 S + cx Σσx S σx + cy Σσy S σy + cz Σσz S σz`.
pub fn apply_pauli_form<T: Real>(kind: FamilyKind, p: T, s: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let c = repr_coefficients(kind, p, s.require_square()?).pauli;
    let mut out = s.scale(c.identity);
    for (w, k) in [(c.x, PauliKind::X), (c.y, PauliKind::Y), (c.z, PauliKind::Z)] {
        out = &out + &pauli_conjugation_sum(k, s)?.scale(w);
    }
    Ok(out)
}

/// `c̃0 e0 S e0 + c̃x Σ ex S ex + c̃y Σ ey S ey + c̃z Σ ez S ez`.
pub fn apply_basis_form<T: Real>(kind: FamilyKind, p: T, s: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let c = repr_coefficients(kind, p, s.require_square()?).basis;
    let mut out = ComplexMatrix::zeros(s.rows(), s.cols());
    for (w, sector) in [(c.identity, Sector::Identity), (c.x, Sector::X), (c.y, Sector::Y), (c.z, Sector::Z)] {
        out = &out + &basis_conjugation_sum(sector, s)?.scale(w);
    }
    Ok(out)
}

/// Both conjugation-sum forms against the closed form on random Hermitian
/// inputs. `p` need not be in the CPTP range.
pub fn verify_representations<T: Real>(
    kind: FamilyKind,
    p: T,
    n: usize,
    trials: usize,
    seed: u64,
    tol: T,
) -> Result<VerificationReport> {
    let ch = FamilyChannel::new(kind, p, n)?;
    let mut report = VerificationReport::new("representations");
    let (mut pauli_worst, mut basis_worst) = (T::zero(), T::zero());
    for i in 0..trials {
        let mut rng = rng_for(seed, i as u64);
        let s = random_hermitian::<T, _>(n, &mut rng);
        let want = ch.apply(&s)?;
        let dp = apply_pauli_form(kind, p, &s)?.max_abs_diff(&want)?;
        let db = apply_basis_form(kind, p, &s)?.max_abs_diff(&want)?;
        pauli_worst = pauli_worst.max(dp);
        basis_worst = basis_worst.max(db);
        if !(dp <= tol) {
            report.fail(format!("Pauli form, trial {i}: deviation {:e}", dp.as_f64()));
        }
        if !(db <= tol) {
            report.fail(format!("basis form, trial {i}: deviation {:e}", db.as_f64()));
        }
        report.samples_used += 1;
    }
    report.record_deviation(pauli_worst.max(basis_worst).as_f64());
    report.set_metric("pauli_max_deviation", pauli_worst.as_f64());
    report.set_metric("basis_max_deviation", basis_worst.as_f64());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verification::param_range;

    #[test]
    fn depolarizing_quarter() {
        let rep = verify_representations(FamilyKind::Depolarizing, 0.25f64, 3, 50, 1, 1e-12).unwrap();
        assert!(rep.passed, "{rep:?}");
    }

    #[test]
    fn zero_parameter_forms_are_constant() {
        let mut rng = rng_for(5, 0);
        let s = random_hermitian::<f64, _>(4, &mut rng);
        let want = ComplexMatrix::identity(4).scale_complex(s.trace() / 4.0);
        for kind in FamilyKind::ALL {
            assert!(apply_pauli_form(kind, 0.0, &s).unwrap().max_abs_diff(&want).unwrap() < 1e-14);
            assert!(apply_basis_form(kind, 0.0, &s).unwrap().max_abs_diff(&want).unwrap() < 1e-14);
        }
    }

    #[test]
    fn all_kinds_across_range() {
        for kind in FamilyKind::ALL {
            for n in 2..=5 {
                let r = param_range::<f64>(kind, n).unwrap();
                for p in [r.p_min, 0.5 * r.p_min, 0.3 * r.p_max, r.p_max, 1.7] {
                    let rep = verify_representations(kind, p, n, 10, 2, 1e-12).unwrap();
                    assert!(rep.passed, "{kind} n={n} p={p}: {rep:?}");
                }
            }
        }
        let rep = verify_representations(FamilyKind::Tcq, -0.2f64, 4, 30, 3, 1e-12).unwrap();
        assert!(rep.passed);
    }
}
