//! JSON formats for matrices, states, channels and reports.
//!
//! Matrices are `{"rows": r, "cols": c, "data": [[re, im], ...]}` in row-major
//! order. Channels are tagged by `kind`:
//! `{"kind": "family", "family": "dcq", "p": 0.2, "dim": 3}` or
//! `{"kind": "diagonal", "dim": 2, "t": [0.5, -0.5, 0.5]}`.
//! Floats are written in shortest round-trip form, so save then load is exact.

use std::fs;
use std::path::Path;

use num_complex::Complex;
use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::channels::{Channel, DensityState, DiagonalChannel, FamilyChannel, FamilyKind};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Tolerance};
use crate::scalar::Real;
use crate::verification::VerificationReport;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson<T> {
    rows: usize,
    cols: usize,
    data: Vec<[T; 2]>,
}

impl<T: Real + Serialize> Serialize for ComplexMatrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows(),
            cols: self.cols(),
            data: self.data().iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for ComplexMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let m = MatrixJson::<T>::deserialize(deserializer)?;
        let data = m.data.into_iter().map(|[re, im]| Complex::new(re, im)).collect();
        ComplexMatrix::from_vec(m.rows, m.cols, data).map_err(D::Error::custom)
    }
}

/// Serialized form of a channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChannelSpec {
    Family { family: FamilyKind, p: f64, dim: usize },
    Diagonal { dim: usize, t: Vec<f64> },
}

/// A channel loaded from JSON.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyChannel {
    Family(FamilyChannel<f64>),
    Diagonal(DiagonalChannel<f64>),
}

impl ChannelSpec {
    pub fn build(&self) -> Result<AnyChannel> {
        match self {
            ChannelSpec::Family { family, p, dim } => Ok(AnyChannel::Family(FamilyChannel::new(*family, *p, *dim)?)),
            ChannelSpec::Diagonal { dim, t } => Ok(AnyChannel::Diagonal(DiagonalChannel::new(*dim, t.clone())?)),
        }
    }
}

impl AnyChannel {
    pub fn spec(&self) -> ChannelSpec {
        match self {
            AnyChannel::Family(c) => ChannelSpec::Family { family: c.kind(), p: c.p(), dim: c.dim() },
            AnyChannel::Diagonal(c) => ChannelSpec::Diagonal { dim: c.dim(), t: c.t().to_vec() },
        }
    }

    /// Multipliers on `ℰ`.
    pub fn to_diagonal(&self) -> DiagonalChannel<f64> {
        match self {
            AnyChannel::Family(c) => c.to_diagonal(),
            AnyChannel::Diagonal(c) => c.clone(),
        }
    }
}

impl Channel<f64> for AnyChannel {
    fn dim(&self) -> usize {
        match self {
            AnyChannel::Family(c) => c.dim(),
            AnyChannel::Diagonal(c) => c.dim(),
        }
    }

    fn apply(&self, m: &ComplexMatrix<f64>) -> Result<ComplexMatrix<f64>> {
        match self {
            AnyChannel::Family(c) => c.apply(m),
            AnyChannel::Diagonal(c) => c.apply(m),
        }
    }
}

/// Deserialize with the offending JSON path in the error.
pub fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Schema { path, message: e.into_inner().to_string() }
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Schema {
        path: ".".into(),
        message: e.to_string(),
    })?;
    s.push('\n');
    Ok(s)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn write_json<T: Serialize + ?Sized>(value: &T, path: &Path) -> Result<()> {
    fs::write(path, to_json_string(value)?).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    #[allow(dead_code)]
    kind: String,
    family: FamilyKind,
    p: f64,
    dim: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagonalFile {
    #[allow(dead_code)]
    kind: String,
    dim: usize,
    t: Vec<f64>,
}

// Dispatch on the tag by hand: a serde-tagged enum buffers its content and
// loses the field path of nested errors.
pub fn parse_channel(text: &str) -> Result<AnyChannel> {
    let value: serde_json::Value = from_json_str(text)?;
    let spec = match value.get("kind").and_then(|k| k.as_str()) {
        Some("family") => {
            let f: FamilyFile = from_json_str(text)?;
            ChannelSpec::Family { family: f.family, p: f.p, dim: f.dim }
        }
        Some("diagonal") => {
            let d: DiagonalFile = from_json_str(text)?;
            ChannelSpec::Diagonal { dim: d.dim, t: d.t }
        }
        Some(other) => {
            return Err(Error::Schema {
                path: "kind".into(),
                message: format!("unknown channel kind `{other}`, expected `family` or `diagonal`"),
            })
        }
        None => {
            return Err(Error::Schema {
                path: "kind".into(),
                message: "missing string field `kind`".into(),
            })
        }
    };
    spec.build()
}

pub fn load_channel(path: &Path) -> Result<AnyChannel> {
    parse_channel(&read(path)?)
}

pub fn save_channel(ch: &AnyChannel, path: &Path) -> Result<()> {
    write_json(&ch.spec(), path)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorFile {
    vector: Vec<[f64; 2]>,
}

/// A state file holds either a density matrix or `{"vector": [[re, im], ...]}`.
pub fn parse_state(text: &str) -> Result<DensityState<f64>> {
    let value: serde_json::Value = from_json_str(text)?;
    if value.get("vector").is_none() {
        return DensityState::new(from_json_str(text)?, &Tolerance::default());
    }
    let file: VectorFile = from_json_str(text)?;
    let v: Vec<_> = file.vector.into_iter().map(|[re, im]| Complex::new(re, im)).collect();
    if v.iter().any(|z| !z.is_finite()) {
        return Err(Error::InvalidState("non-finite amplitude".into()));
    }
    DensityState::pure(&v)
}

pub fn load_state(path: &Path) -> Result<DensityState<f64>> {
    parse_state(&read(path)?)
}

pub fn save_report<T: Serialize + ?Sized>(report: &T, path: &Path) -> Result<()> {
    write_json(report, path)
}

pub fn load_report(path: &Path) -> Result<VerificationReport> {
    from_json_str(&read(path)?)
}
