use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Outcome of a numerical check. Violations are recorded, never thrown.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_choi_eigenvalue: Option<f64>,
    pub trace_violation: f64,
    pub max_deviation: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub samples_used: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metrics: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            passed: true,
            min_choi_eigenvalue: None,
            trace_violation: 0.0,
            max_deviation: 0.0,
            witness: None,
            samples_used: 0,
            metrics: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn metric(&self, key: &str) -> Option<f64> {
        self.metrics.get(key).copied()
    }

    pub fn set_metric(&mut self, key: impl Into<String>, value: f64) {
        self.metrics.insert(key.into(), value);
    }

    /// Raise `max_deviation` to `value` if larger (NaN counts as a failure).
    pub fn record_deviation(&mut self, value: f64) {
        if value.is_nan() || value > self.max_deviation {
            self.max_deviation = value;
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.passed = false;
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
    }

    /// Fold another report in: all must pass, worst deviations win.
    pub fn merge(&mut self, other: VerificationReport) {
        let prefix = other.check.clone();
        if !other.passed {
            self.fail(other.witness.clone().unwrap_or_else(|| prefix.clone()));
        }
        self.record_deviation(other.max_deviation);
        self.trace_violation = self.trace_violation.max(other.trace_violation);
        if let Some(m) = other.min_choi_eigenvalue {
            self.min_choi_eigenvalue = Some(self.min_choi_eigenvalue.map_or(m, |x| x.min(m)));
        }
        self.samples_used += other.samples_used;
        for (k, v) in other.metrics {
            self.metrics.insert(format!("{prefix}.{k}"), v);
        }
        self.notes.extend(other.notes);
    }
}
