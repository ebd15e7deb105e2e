//! Seeded sampling helpers.
//!
//! Every random quantity is drawn from a [`SampleRng`] derived from a `(seed,
//! stream)` pair, so independent samples can be produced in any order and
//! reproduced exactly.

use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::ComplexMatrix;
use crate::scalar::Real;

pub type SampleRng = ChaCha8Rng;

/// Generator for stream `stream` of `seed`.
pub fn rng_for(seed: u64, stream: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Complex number with independent standard normal real and imaginary parts.
pub fn gaussian_complex<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(T::from_f64_lossy(re), T::from_f64_lossy(im))
}

/// Uniformly (Haar) distributed unit vector in `C^n`.
pub fn random_unit_vector<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex<T>> {
    loop {
        let v: Vec<Complex<T>> = (0..n).map(|_| gaussian_complex(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm > T::epsilon() {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

pub fn random_complex_matrix<T: Real, R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian_complex(rng))
}

/// `(G + G^dagger) / 2` for a complex Gaussian `G`.
pub fn random_hermitian<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix<T> {
    random_complex_matrix(n, n, rng).hermitian_part()
}

/// Complex symmetric matrix `(G + G^T) / 2`.
pub fn random_complex_symmetric<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix<T> {
    let g = random_complex_matrix::<T, R>(n, n, rng);
    let half = T::from_f64_lossy(0.5);
    ComplexMatrix::from_fn(n, n, |i, j| (g[(i, j)] + g[(j, i)]) * half)
}

/// Haar unitary from Gram-Schmidt on a complex Gaussian matrix.
pub fn random_unitary<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix<T> {
    let g = random_complex_matrix::<T, R>(n, n, rng);
    let mut q: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    for c in 0..n {
        let mut v: Vec<Complex<T>> = (0..n).map(|r| g[(r, c)]).collect();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for u in &q {
                let proj: Complex<T> = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, a) in v.iter_mut().zip(u) {
                    *x -= proj * a;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        q.push(v.into_iter().map(|z| z / norm).collect());
    }
    let mut u = ComplexMatrix::zeros(n, n);
    for (c, col) in q.iter().enumerate() {
        for (r, z) in col.iter().enumerate() {
            if !z.is_zero() {
                u[(r, c)] = *z;
            }
        }
    }
    u
}

/// Uniform real number in `[lo, hi)`.
pub fn uniform<T: Real, R: Rng + ?Sized>(lo: T, hi: T, rng: &mut R) -> T {
    let x: f64 = rng.random();
    lo + (hi - lo) * T::from_f64_lossy(x)
}
