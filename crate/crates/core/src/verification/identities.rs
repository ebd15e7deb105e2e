use num_complex::Complex;

use super::report::VerificationReport;
use crate::basis::{cached_basis, pauli_matrix, PairIndex, PauliKind, Sector};
use crate::error::Result;
use crate::linalg::ComplexMatrix;
use crate::random::{random_complex_matrix, random_complex_symmetric, rng_for};
use crate::scalar::Real;

/// `Σ_i σ_{kind,i} S σ_{kind,i}` over all pairs.
pub fn pauli_conjugation_sum<T: Real>(kind: PauliKind, s: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let n = s.require_square()?;
    let mut acc = ComplexMatrix::zeros(n, n);
    for pair in PairIndex::all(n) {
        let sigma = pauli_matrix::<T>(n, kind, pair)?;
        acc = &acc + &(&(&sigma * s) * &sigma);
    }
    Ok(acc)
}

/// `Σ e S e` over the elements of one sector of `ℰ`.
pub fn basis_conjugation_sum<T: Real>(sector: Sector, s: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let n = s.require_square()?;
    let basis = cached_basis::<T>(n)?;
    let mut acc = ComplexMatrix::zeros(n, n);
    for i in basis.sector_range(sector) {
        let e = basis.element(i);
        acc = &acc + &(&(e * s) * e);
    }
    Ok(acc)
}

fn scalar_identity<T: Real>(n: usize, c: Complex<T>) -> ComplexMatrix<T> {
    ComplexMatrix::identity(n).scale_complex(c)
}

/// Closed forms of the four conjugation sums, valid for every complex `S`:
///
/// * `Σσx S σx = Sᵀ + Tr(S) I - 2 diag(S)`
/// * `Σσy S σy = Tr(S) I - Sᵀ`
/// * `Σσz S σz = n diag(S) - S`
/// * `Σez S ez = diag(S) - S/n`
pub fn corrected_forms<T: Real>(s: &ComplexMatrix<T>) -> [ComplexMatrix<T>; 4] {
    let n = s.rows();
    let nf = T::from_count(n);
    let tr = scalar_identity(n, s.trace());
    let st = s.transpose();
    let d = s.diagonal_part();
    [
        &(&st + &tr) - &d.scale(T::from_int(2)),
        &tr - &st,
        &d.scale(nf) - s,
        &d - &s.scale(T::one() / nf),
    ]
}

/// The same sums as commonly printed, with `S` and `Sᵀ` interchanged.
/// They agree with [`corrected_forms`] only on complex-symmetric `S`.
pub fn printed_forms<T: Real>(s: &ComplexMatrix<T>) -> [ComplexMatrix<T>; 4] {
    let n = s.rows();
    let nf = T::from_count(n);
    let tr = scalar_identity(n, s.trace());
    let st = s.transpose();
    let d = s.diagonal_part();
    [
        &(s + &tr) - &d.scale(T::from_int(2)),
        &tr - s,
        &d.scale(nf) - &st,
        (&d.scale(nf) - &st).scale(T::one() / nf),
    ]
}

/// Direct sums in the order of [`corrected_forms`].
pub fn direct_sums<T: Real>(s: &ComplexMatrix<T>) -> Result<[ComplexMatrix<T>; 4]> {
    Ok([
        pauli_conjugation_sum(PauliKind::X, s)?,
        pauli_conjugation_sum(PauliKind::Y, s)?,
        pauli_conjugation_sum(PauliKind::Z, s)?,
        basis_conjugation_sum(Sector::Z, s)?,
    ])
}

fn worst_deviation<T: Real>(a: &[ComplexMatrix<T>; 4], b: &[ComplexMatrix<T>; 4]) -> Result<T> {
    let mut worst = T::zero();
    for (x, y) in a.iter().zip(b) {
        worst = worst.max(x.max_abs_diff(y)?);
    }
    Ok(worst)
}

const LABELS: [&str; 4] = ["sigma_x", "sigma_y", "sigma_z", "e_z"];

/// Checks the corrected identities (and `Σ e_x S e_x`, `Σ e_y S e_y` as half
/// the σ sums) on `trials` random complex matrices. Also records how the
/// printed forms behave: agreement on random complex-symmetric inputs and
/// disagreement on `E_12`.
pub fn verify_sum_identities<T: Real>(n: usize, trials: usize, seed: u64, tol: T) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("sum_identities");
    report.set_metric("dim", n as f64);
    let half = T::one() / T::from_int(2);
    let mut sym_worst = T::zero();
    for i in 0..trials {
        let mut rng = rng_for(seed, i as u64);
        let s = random_complex_matrix::<T, _>(n, n, &mut rng);
        let direct = direct_sums(&s)?;
        let want = corrected_forms(&s);
        for (k, (d, w)) in direct.iter().zip(&want).enumerate() {
            let dev = d.max_abs_diff(w)?;
            report.record_deviation(dev.as_f64());
            if !(dev <= tol) {
                report.fail(format!("{} identity, trial {i}: deviation {:e}", LABELS[k], dev.as_f64()));
            }
        }
        for (sector, sigma) in [(Sector::X, &direct[0]), (Sector::Y, &direct[1])] {
            let dev = basis_conjugation_sum(sector, &s)?.max_abs_diff(&sigma.scale(half))?;
            report.record_deviation(dev.as_f64());
            if !(dev <= tol) {
                report.fail(format!("e_{sector} half-sum, trial {i}: deviation {:e}", dev.as_f64()));
            }
        }

        let sym = random_complex_symmetric::<T, _>(n, &mut rng);
        sym_worst = sym_worst.max(worst_deviation(&printed_forms(&sym), &direct_sums(&sym)?)?);
        report.samples_used += 1;
    }
    report.set_metric("printed_symmetric_max_deviation", sym_worst.as_f64());
    if !(sym_worst <= tol) {
        report.fail(format!("printed forms disagree on a symmetric input by {:e}", sym_worst.as_f64()));
    }

    let e12 = ComplexMatrix::<T>::unit(n, 0, 1);
    let direct = direct_sums(&e12)?;
    let printed = printed_forms(&e12);
    let mut failing = Vec::new();
    for (k, (d, p)) in direct.iter().zip(&printed).enumerate() {
        if d.max_abs_diff(p)? > tol {
            failing.push(LABELS[k]);
        }
    }
    report.set_metric("printed_e12_deviation", worst_deviation(&printed, &direct)?.as_f64());
    report.note(format!(
        "printed forms (S and S^T interchanged) fail on E_12 for: {}",
        if failing.is_empty() { "none".to_string() } else { failing.join(", ") }
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e12_at_n2() {
        let s = ComplexMatrix::<f64>::unit(2, 0, 1);
        let x = pauli_conjugation_sum(PauliKind::X, &s).unwrap();
        assert_eq!(x, ComplexMatrix::unit(2, 1, 0));
        let printed = &printed_forms(&s)[0];
        assert_eq!(printed, &ComplexMatrix::unit(2, 0, 1));
        assert_ne!(printed, &x);
    }

    #[test]
    fn real_symmetric_inputs_agree() {
        let s = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0, 0.5], vec![2.0, -1.0, 3.0], vec![0.5, 3.0, 4.0]]).unwrap();
        let a = printed_forms(&s);
        let b = corrected_forms(&s);
        assert!(worst_deviation(&a, &b).unwrap() < 1e-15);
    }

    #[test]
    fn e_z_sum_telescopes() {
        // Σ_{k<l} 1/(k(k+1)) = l/(l+1); the e_z sum of I is (n-1)/n · I
        for n in 2..8 {
            let id = ComplexMatrix::<f64>::identity(n);
            let got = basis_conjugation_sum(Sector::Z, &id).unwrap();
            let want = id.scale((n - 1) as f64 / n as f64);
            assert!(got.max_abs_diff(&want).unwrap() < 1e-14);
        }
    }

    #[test]
    fn identities_report() {
        for n in 2..=8 {
            let rep = verify_sum_identities::<f64>(n, 10, 7, 1e-12).unwrap();
            assert!(rep.passed, "{rep:?}");
            assert!(rep.metric("printed_e12_deviation").unwrap() >= 1.0 - 1e-12);
            assert!(rep.notes[0].contains("sigma_x"));
        }
    }
}
