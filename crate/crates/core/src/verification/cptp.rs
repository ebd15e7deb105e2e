use super::report::VerificationReport;
use crate::channels::{to_choi, Channel};
use crate::error::Result;
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, Tolerance};
use crate::scalar::Real;

/// Absolute tolerance on the smallest Choi eigenvalue at a range endpoint.
pub const CPTP_TOLERANCE: f64 = 1e-9;

/// Choi positivity and trace preservation. `tol` bounds both the negative
/// part of the Choi spectrum and the deviation of the partial trace from `I`.
pub fn is_cptp<T: Real, C: Channel<T> + ?Sized>(ch: &C, tol: T) -> Result<VerificationReport> {
    let n = ch.dim();
    let choi = to_choi(ch)?;
    let mut report = VerificationReport::new("cptp");
    report.set_metric("dim", n as f64);

    let trace_dev = choi.partial_trace_output().max_abs_diff(&ComplexMatrix::identity(n))?;
    report.trace_violation = trace_dev.as_f64();
    if !(trace_dev <= tol) {
        report.fail(format!("partial trace deviates from identity by {:e}", trace_dev.as_f64()));
    }

    let herm = choi.matrix().hermiticity_deviation()?;
    report.set_metric("choi_hermiticity", herm.as_f64());
    let eig_tol = Tolerance::new(tol, T::default_tolerance());
    match hermitian_eigenvalues(&choi.matrix().hermitian_part(), &eig_tol) {
        Ok(ev) => {
            let min = ev.first().copied().unwrap_or_else(T::zero);
            report.min_choi_eigenvalue = Some(min.as_f64());
            report.set_metric("max_choi_eigenvalue", ev.last().copied().unwrap_or_else(T::zero).as_f64());
            if !(min >= -tol) {
                report.fail(format!("Choi matrix has eigenvalue {:e}", min.as_f64()));
            }
        }
        Err(e) => report.fail(format!("Choi eigendecomposition failed: {e}")),
    }
    if herm > eig_tol.bound(choi.matrix().frobenius_norm()) {
        report.fail(format!("Choi matrix not Hermitian (deviation {:e})", herm.as_f64()));
    }
    Ok(report)
}
