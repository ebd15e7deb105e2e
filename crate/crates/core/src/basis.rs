//! Generalized Pauli matrices and the orthonormal Hermitian basis `ℰ`.
//!
//! Ordering is fixed: `I/√n`, then the `x` block `σ_{x,i}/√2`, the `y` block
//! `σ_{y,i}/√2`, and the `z` block `M_{z,k}/√(k(k+1))`. Pairs `(k, l)` with
//! `k < l` are enumerated lexicographically, so `i = 1 ↔ (1, 2)`,
//! `i = 2 ↔ (1, 3)`, ..., `i = N ↔ (n-1, n)`.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_inner, ComplexMatrix, Tolerance};
use crate::scalar::Real;

/// Sector label of a basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sector {
    #[serde(rename = "0")]
    Identity,
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "z")]
    Z,
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sector::Identity => "0",
            Sector::X => "x",
            Sector::Y => "y",
            Sector::Z => "z",
        })
    }
}

/// Which generalized Pauli matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliKind {
    X,
    Y,
    Z,
}

/// Number of pairs `N = n(n-1)/2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// 1-based pair index `i` together with its ordered pair `(k, l)`, `k < l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairIndex {
    index: usize,
    k: usize,
    l: usize,
}

impl PairIndex {
    pub fn from_pair(n: usize, k: usize, l: usize) -> Result<Self> {
        if !(1 <= k && k < l && l <= n) {
            return Err(Error::InvalidPair(format!("({k}, {l}) is not a pair 1 <= k < l <= {n}")));
        }
        // pairs with first element < k come first
        let before: usize = (1..k).map(|a| n - a).sum();
        Ok(Self {
            index: before + (l - k),
            k,
            l,
        })
    }

    pub fn from_index(n: usize, index: usize) -> Result<Self> {
        let total = pair_count(n);
        if index == 0 || index > total {
            return Err(Error::InvalidPair(format!("index {index} not in 1..={total} for n = {n}")));
        }
        let mut rest = index;
        for k in 1..n {
            let len = n - k;
            if rest <= len {
                return Ok(Self { index, k, l: k + rest });
            }
            rest -= len;
        }
        unreachable!("index bounded by pair count")
    }

    /// All pairs in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(pair_count(n));
        for k in 1..=n {
            for l in (k + 1)..=n {
                out.push(Self {
                    index: out.len() + 1,
                    k,
                    l,
                });
            }
        }
        out
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// First element of the pair, 1-based.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Second element of the pair, 1-based.
    pub fn l(&self) -> usize {
        self.l
    }
}

/// Generalized Pauli matrix supported on the pair `(k, l)`.
pub fn pauli_matrix<T: Real>(n: usize, kind: PauliKind, pair: PairIndex) -> Result<ComplexMatrix<T>> {
    if n < 2 {
        return Err(Error::InvalidDimension { dim: n, reason: "need n >= 2" });
    }
    if pair.l > n || PairIndex::from_pair(n, pair.k, pair.l)? != pair {
        return Err(Error::InvalidPair(format!("({}, {}) for n = {n}", pair.k, pair.l)));
    }
    let (k, l) = (pair.k - 1, pair.l - 1);
    let one = Complex::<T>::one();
    let i = Complex::<T>::i();
    let mut m = ComplexMatrix::zeros(n, n);
    match kind {
        PauliKind::X => {
            m[(k, l)] = one;
            m[(l, k)] = one;
        }
        PauliKind::Y => {
            m[(k, l)] = -i;
            m[(l, k)] = i;
        }
        PauliKind::Z => {
            m[(k, k)] = one;
            m[(l, l)] = -one;
        }
    }
    Ok(m)
}

/// `M_{z,k} = diag(1, ..., 1, -k, 0, ..., 0)` with `k` leading ones.
pub fn m_z<T: Real>(n: usize, k: usize) -> Result<ComplexMatrix<T>> {
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: n.saturating_sub(1),
        });
    }
    let mut diag = vec![T::zero(); n];
    diag[..k].iter_mut().for_each(|d| *d = T::one());
    diag[k] = -T::from_count(k);
    Ok(ComplexMatrix::from_real_diagonal(&diag))
}

/// One labeled element of `ℰ`. `index` is 1-based within its sector.
#[derive(Debug, Clone)]
pub struct BasisElement<T> {
    pub sector: Sector,
    pub index: usize,
    pub matrix: ComplexMatrix<T>,
}

/// The ordered orthonormal Hermitian basis of `n × n` matrices.
#[derive(Debug, Clone)]
pub struct OperatorBasis<T> {
    dim: usize,
    elements: Vec<BasisElement<T>>,
}

impl<T: Real> OperatorBasis<T> {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension { dim: n, reason: "need n >= 2" });
        }
        let two = T::from_count(2);
        let mut elements = Vec::with_capacity(n * n);
        elements.push(BasisElement {
            sector: Sector::Identity,
            index: 1,
            matrix: ComplexMatrix::identity(n).scale(T::one() / T::from_count(n).sqrt()),
        });
        let pairs = PairIndex::all(n);
        for (sector, kind) in [(Sector::X, PauliKind::X), (Sector::Y, PauliKind::Y)] {
            for pair in &pairs {
                elements.push(BasisElement {
                    sector,
                    index: pair.index,
                    matrix: pauli_matrix(n, kind, *pair)?.scale(T::one() / two.sqrt()),
                });
            }
        }
        for k in 1..n {
            let norm = T::from_count(k * (k + 1)).sqrt();
            elements.push(BasisElement {
                sector: Sector::Z,
                index: k,
                matrix: m_z(n, k)?.scale(T::one() / norm),
            });
        }
        debug_assert_eq!(elements.len(), n * n);
        Ok(Self { dim: n, elements })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Always `n²`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasisElement<T>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ComplexMatrix<T> {
        &self.elements[i].matrix
    }

    /// Positions of a sector inside the full ordered list.
    pub fn sector_range(&self, sector: Sector) -> Range<usize> {
        let n = self.dim;
        let big_n = pair_count(n);
        match sector {
            Sector::Identity => 0..1,
            Sector::X => 1..1 + big_n,
            Sector::Y => 1 + big_n..1 + 2 * big_n,
            Sector::Z => 1 + 2 * big_n..n * n,
        }
    }

    /// Complex coefficients `Tr(e_i^dagger m)` of an arbitrary matrix.
    pub fn coefficients(&self, m: &ComplexMatrix<T>) -> Result<Vec<Complex<T>>> {
        self.check_dim(m)?;
        self.elements.iter().map(|e| hermitian_inner(&e.matrix, m)).collect()
    }

    /// `Σ c_i e_i` for complex coefficients.
    pub fn combine(&self, coeffs: &[Complex<T>]) -> Result<ComplexMatrix<T>> {
        if coeffs.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: coeffs.len(),
            });
        }
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for (c, e) in coeffs.iter().zip(&self.elements) {
            if !c.is_zero() {
                out.add_scaled_assign(*c, &e.matrix);
            }
        }
        Ok(out)
    }

    /// Real coefficients of a Hermitian matrix.
    pub fn decompose(&self, s: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<Vec<T>> {
        self.check_dim(s)?;
        let bound = tol.bound(s.frobenius_norm());
        let deviation = s.hermiticity_deviation()?;
        if deviation > bound {
            return Err(Error::NotHermitian {
                deviation: deviation.as_f64(),
            });
        }
        let coeffs = self.coefficients(s)?;
        coeffs
            .into_iter()
            .map(|c| {
                if c.im.abs() > bound {
                    Err(Error::NotHermitian { deviation: c.im.abs().as_f64() })
                } else {
                    Ok(c.re)
                }
            })
            .collect()
    }

    /// `Σ a_i e_i` for real coefficients.
    pub fn reconstruct(&self, coeffs: &[T]) -> Result<ComplexMatrix<T>> {
        let c: Vec<Complex<T>> = coeffs.iter().map(|&a| Complex::new(a, T::zero())).collect();
        self.combine(&c)
    }

    fn check_dim(&self, m: &ComplexMatrix<T>) -> Result<()> {
        let n = m.require_square()?;
        if n != self.dim {
            return Err(Error::DimensionMismatch {
                expected: format!("{0}x{0}", self.dim),
                found: format!("{n}x{n}"),
            });
        }
        Ok(())
    }
}

type CacheMap = HashMap<(TypeId, usize), Arc<dyn Any + Send + Sync>>;

fn cache() -> &'static Mutex<CacheMap> {
    static CACHE: OnceLock<Mutex<CacheMap>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared basis for dimension `n`, built once per (scalar type, n).
pub fn cached_basis<T: Real>(n: usize) -> Result<Arc<OperatorBasis<T>>> {
    let key = (TypeId::of::<T>(), n);
    if let Some(hit) = cache().lock().expect("basis cache poisoned").get(&key) {
        return Ok(hit.clone().downcast::<OperatorBasis<T>>().expect("keyed by type"));
    }
    let basis = Arc::new(OperatorBasis::<T>::new(n)?);
    cache()
        .lock()
        .expect("basis cache poisoned")
        .entry(key)
        .or_insert_with(|| basis.clone() as Arc<dyn Any + Send + Sync>);
    Ok(basis)
}

pub fn build_basis<T: Real>(n: usize) -> Result<OperatorBasis<T>> {
    OperatorBasis::new(n)
}

pub fn decompose<T: Real>(s: &ComplexMatrix<T>, basis: &OperatorBasis<T>, tol: &Tolerance<T>) -> Result<Vec<T>> {
    basis.decompose(s, tol)
}

pub fn reconstruct<T: Real>(coeffs: &[T], basis: &OperatorBasis<T>) -> Result<ComplexMatrix<T>> {
    basis.reconstruct(coeffs)
}
