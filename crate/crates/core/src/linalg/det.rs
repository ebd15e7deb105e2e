use crate::error::{Error, Result};
use crate::scalar::Field;

/// Determinant by Gaussian elimination with partial pivoting.
///
/// Exact for rational scalars; for floats the pivot is the largest modulus in
/// the column.
pub fn determinant<F: Field>(rows: &[Vec<F>]) -> Result<F> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: bad.len() });
    }
    let mut a: Vec<Vec<F>> = rows.to_vec();
    let mut det = F::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                a[i][col]
                    .abs_val()
                    .partial_cmp(&a[j][col].abs_val())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("non-empty range");
        if a[pivot][col].is_zero() {
            return Ok(F::zero());
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / p.clone();
            let (upper, lower) = a.split_at_mut(r);
            for (x, y) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};

    #[test]
    fn two_by_two() {
        let d: f64 = determinant(&[vec![0.75, -0.5], vec![-0.5, 0.75]]).unwrap();
        assert!((d - 0.3125).abs() < 1e-15);
    }

    #[test]
    fn exact_rational_with_row_swap() {
        let m: Vec<Vec<Rational>> = vec![
            vec![rational(0, 1), rational(1, 2), rational(1, 1)],
            vec![rational(2, 1), rational(0, 1), rational(1, 3)],
            vec![rational(1, 1), rational(1, 1), rational(0, 1)],
        ];
        // 0*(0-1/3) - 1/2*(0-1/3) + 1*(2-0)
        assert_eq!(determinant(&m).unwrap(), rational(13, 6));
    }

    #[test]
    fn singular_is_zero() {
        let d = determinant(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(d, 0.0);
        assert!(determinant(&[vec![1.0, 2.0]]).is_err());
    }
}
