//! Exact polynomials in one variable with rational coefficients.
//!
//! Used to express parameter-range endpoints as functions of the dimension
//! and to solve the bound-matching systems symbolically. Real roots are found
//! exactly: rational roots by the rational root theorem, the remaining
//! quadratic factor by the quadratic formula with a simplified surd.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

/// Polynomial `Σ c_k x^k`, coefficients in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_ints(&[c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation in any field.
    pub fn eval<F: Field>(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| {
            acc * x.clone() + F::from_int(c.numer().to_i64().expect("small coefficient"))
                / F::from_int(c.denom().to_i64().expect("small coefficient"))
        })
    }

    pub fn eval_exact(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Self::new((0..len).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Divide by `(x - r)` where `r` is a root; the remainder must vanish.
    fn deflate(&self, r: &Rational) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (1..n).rev() {
            carry = &self.coeffs[k] + carry * r;
            out[k - 1] = carry.clone();
        }
        debug_assert!((&self.coeffs[0] + carry * r).is_zero());
        Self::new(out)
    }

    /// Integer coefficients of a positive rational multiple.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| (c * Ratio::from_integer(lcm.clone())).to_integer())
            .collect()
    }

    /// All distinct real roots, sorted ascending.
    ///
    /// Fails for polynomials whose irreducible factors have degree above two.
    pub fn real_roots(&self) -> Result<Vec<AlgebraicRoot>> {
        if self.is_zero() {
            return Err(Error::InvalidParameter("zero polynomial has every number as a root".into()));
        }
        let mut p = self.clone();
        let mut roots: Vec<AlgebraicRoot> = Vec::new();
        while p.degree().unwrap_or(0) > 2 {
            match p.find_rational_root() {
                Some(r) => {
                    p = p.deflate(&r);
                    push_unique(&mut roots, AlgebraicRoot::Rational(r));
                }
                None => {
                    return Err(Error::InvalidParameter(format!(
                        "no rational root for degree {} factor",
                        p.degree().unwrap_or(0)
                    )))
                }
            }
        }
        match p.degree() {
            Some(1) => push_unique(&mut roots, AlgebraicRoot::Rational(-&p.coeffs[0] / &p.coeffs[1])),
            Some(2) => {
                for r in quadratic_roots(&p.integer_coeffs()) {
                    push_unique(&mut roots, r);
                }
            }
            _ => {}
        }
        roots.sort_by(|a, b| a.value().partial_cmp(&b.value()).expect("finite roots"));
        Ok(roots)
    }

    fn find_rational_root(&self) -> Option<Rational> {
        if self.coeffs[0].is_zero() {
            return Some(Rational::zero());
        }
        let ints = self.integer_coeffs();
        let c0 = ints[0].abs();
        let lead = ints.last().expect("non-zero").abs();
        for den in divisors(&lead) {
            for num in divisors(&c0) {
                for sign in [1, -1] {
                    let r = Ratio::new(BigInt::from(sign) * &num, den.clone());
                    if self.eval_exact(&r).is_zero() {
                        return Some(r);
                    }
                }
            }
        }
        None
    }
}

fn push_unique(roots: &mut Vec<AlgebraicRoot>, r: AlgebraicRoot) {
    if !roots.contains(&r) {
        roots.push(r);
    }
}

fn divisors(v: &BigInt) -> Vec<BigInt> {
    let v = v.to_i64().expect("coefficients fit in i64");
    (1..=v).filter(|d| v % d == 0).map(BigInt::from).collect()
}

/// Roots of `a x² + b x + c` with integer coefficients.
fn quadratic_roots(coeffs: &[BigInt]) -> Vec<AlgebraicRoot> {
    let (c, b, a) = (&coeffs[0], &coeffs[1], &coeffs[2]);
    let disc: BigInt = b * b - BigInt::from(4) * a * c;
    if disc.is_negative() {
        return vec![];
    }
    let two_a = BigInt::from(2) * a;
    let root = disc.sqrt();
    if &root * &root == disc {
        return [-b + &root, -b - &root]
            .into_iter()
            .map(|num| AlgebraicRoot::Rational(Ratio::new(num, two_a.clone())))
            .collect();
    }
    // disc = s² d with d squarefree
    let mut s = BigInt::one();
    let mut d = disc.clone();
    let mut f = BigInt::from(2);
    while &f * &f <= d {
        let sq = &f * &f;
        while (&d % &sq).is_zero() {
            d /= &sq;
            s *= &f;
        }
        f += 1;
    }
    let mut num = -b.clone();
    let mut den = two_a;
    let g = num.gcd(&s).gcd(&den);
    num /= &g;
    s /= &g;
    den /= &g;
    if den.is_negative() {
        num = -num;
        den = -den;
        // the ± pair is symmetric, so flipping the sign of s is harmless
    }
    let to = |x: &BigInt| x.to_i64().expect("small surd");
    [true, false]
        .into_iter()
        .map(|plus| AlgebraicRoot::Surd {
            a: to(&num),
            s: to(&s),
            d: to(&d),
            c: to(&den),
            plus,
        })
        .collect()
}

/// A real algebraic number of degree at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraicRoot {
    Rational(Rational),
    /// `(a ± s·√d) / c` with `d` squarefree, `c > 0`.
    Surd { a: i64, s: i64, d: i64, c: i64, plus: bool },
}

impl AlgebraicRoot {
    pub fn value(&self) -> f64 {
        match self {
            AlgebraicRoot::Rational(r) => r.to_f64_lossy(),
            AlgebraicRoot::Surd { a, s, d, c, plus } => {
                let sign = if *plus { 1.0 } else { -1.0 };
                (*a as f64 + sign * *s as f64 * (*d as f64).sqrt()) / *c as f64
            }
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            AlgebraicRoot::Rational(r) => Some(r),
            AlgebraicRoot::Surd { .. } => None,
        }
    }

    /// Integer value, if the root is an integer.
    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
    }
}

impl fmt::Display for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicRoot::Rational(r) => write!(f, "{r}"),
            AlgebraicRoot::Surd { a, s, d, c, plus } => {
                let op = if *plus { '+' } else { '-' };
                let surd = if *s == 1 { format!("√{d}") } else { format!("{s}√{d}") };
                if *c == 1 {
                    write!(f, "{a}{op}{surd}")
                } else {
                    write!(f, "({a}{op}{surd})/{c}")
                }
            }
        }
    }
}

impl Serialize for AlgebraicRoot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("AlgebraicRoot", 2)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("value", &self.value())?;
        st.end()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{k}")?,
            }
        }
        Ok(())
    }
}
