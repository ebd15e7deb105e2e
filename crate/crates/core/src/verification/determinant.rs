use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::scalar::{rational, Field, Rational, Real};

/// `n × n` matrix with `p + (1-p)/n` on the diagonal and `-p` elsewhere.
pub fn dcq_det_matrix<F: Field>(n: usize, p: &F) -> Vec<Vec<F>> {
    let d = p.clone() + (F::one() - p.clone()) / F::from_count(n);
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { d.clone() } else { -p.clone() }).collect())
        .collect()
}

/// `D(n, 0) = (2p + (1-p)/n)^(n-1) · (1 - (n-1)² p) / n`.
pub fn dcq_det_formula<F: Field>(n: usize, p: &F) -> Result<F> {
    if n < 2 {
        return Err(Error::InvalidDimension { dim: n, reason: "need n >= 2" });
    }
    let nf = F::from_count(n);
    let base = p.clone() + p.clone() + (F::one() - p.clone()) / nf.clone();
    let m = nf.clone() - F::one();
    let last = (F::one() - m.clone() * m * p.clone()) / nf;
    let mut acc = F::one();
    for _ in 1..n {
        acc = acc * base.clone();
    }
    Ok(acc * last)
}

pub fn dcq_det_direct<F: Field>(n: usize, p: &F) -> Result<F> {
    determinant(&dcq_det_matrix(n, p))
}

/// `grid` equally spaced values over `[-1/2, 1/2]` as exact fractions.
pub fn det_grid(grid: usize) -> Result<Vec<Rational>> {
    if grid < 2 {
        return Err(Error::InvalidParameter(format!("grid needs at least 2 points, got {grid}")));
    }
    let steps = (grid - 1) as i64;
    Ok((0..=steps).map(|k| rational(k, steps) - rational(1, 2)).collect())
}

/// Closed form against elimination, exactly over the rationals and in `T`
/// with error bound `rel·|det| + n·ε·H`, `H` the Hadamard bound (product of
/// row norms), which controls the rounding near exact zeros.
pub fn verify_det_recurrence<T: Real>(dims: &[usize], grid: usize, rel: T) -> Result<VerificationReport> {
    let points = det_grid(grid)?;
    let mut report = VerificationReport::new("determinant");
    let mut exact_mismatches = 0usize;
    let mut worst_rel = T::zero();
    for &n in dims {
        for p in &points {
            if dcq_det_formula(n, p)? != dcq_det_direct(n, p)? {
                exact_mismatches += 1;
                report.fail(format!("exact mismatch at n = {n}, p = {p}"));
            }
            let pf = T::from_f64_lossy(p.to_f64_lossy());
            let formula = dcq_det_formula(n, &pf)?;
            let direct = dcq_det_direct(n, &pf)?;
            let hadamard = dcq_det_matrix(n, &pf)
                .iter()
                .map(|row| row.iter().map(|x| *x * *x).sum::<T>().sqrt())
                .fold(T::one(), |acc, x| acc * x);
            let err = (formula - direct).abs();
            let bound = rel * direct.abs() + T::from_count(n) * T::epsilon() * hadamard;
            report.record_deviation(err.as_f64());
            if direct.abs() > T::zero() {
                worst_rel = worst_rel.max(err / direct.abs());
            }
            if !(err <= bound) {
                report.fail(format!("n = {n}, p = {pf}: formula {:e}, direct {:e}", formula.as_f64(), direct.as_f64()));
            }
            report.samples_used += 1;
        }
    }
    report.set_metric("exact_mismatches", exact_mismatches as f64);
    report.set_metric("max_relative_error", worst_rel.as_f64());
    Ok(report)
}
