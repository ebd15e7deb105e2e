use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// Mixed absolute/relative comparison tolerance.
///
/// Two numbers pass when `|x - y| <= absolute + relative * max(|x|, |y|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance<T> {
    pub absolute: T,
    pub relative: T,
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        let v = T::default_tolerance();
        Self { absolute: v, relative: v }
    }
}

impl<T: Real> Tolerance<T> {
    pub fn new(absolute: T, relative: T) -> Self {
        Self { absolute, relative }
    }

    /// Same value for the absolute and relative parts.
    pub fn uniform(v: T) -> Self {
        Self::new(v, v)
    }

    pub fn absolute(v: T) -> Self {
        Self::new(v, T::zero())
    }

    /// Allowed deviation for a quantity of magnitude `scale`.
    pub fn bound(&self, scale: T) -> T {
        self.absolute + self.relative * scale.abs()
    }

    pub fn close(&self, x: T, y: T) -> bool {
        (x - y).abs() <= self.bound(x.abs().max(y.abs()))
    }
}
