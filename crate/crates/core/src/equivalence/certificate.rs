use serde::Serialize;

use super::bounds::{bound_matching_system, BoundMatching, MatchingPair};
use super::spectrum::{spectrum_witness, SpectrumWitness};
use crate::channels::FamilyKind;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, Tolerance};
use crate::verification::param_range;

/// Gap below which two spectra count as equal.
pub const SPECTRAL_GAP_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMethod {
    SpectrumWitness,
    BoundMatching,
}

/// Evidence that two families are not related by input and output unitary
/// conjugations in dimension `dim`, with the numbers needed to re-check it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequivalenceCertificate {
    pub pair: (FamilyKind, FamilyKind),
    pub dim: usize,
    pub method: CertificateMethod,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumWitness<f64>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bound_matching: Vec<BoundMatching>,
    pub notes: Vec<String>,
}

impl InequivalenceCertificate {
    /// Recompute the decisive quantities from the embedded data.
    pub fn recheck(&self) -> bool {
        match self.method {
            CertificateMethod::SpectrumWitness => {
                let Some(w) = &self.spectrum else { return false };
                let tol = Tolerance::default();
                let (Ok(a), Ok(b)) = (
                    hermitian_eigenvalues(&w.output_a, &tol),
                    hermitian_eigenvalues(&w.output_b, &tol),
                ) else {
                    return false;
                };
                let gap = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
                gap > SPECTRAL_GAP_THRESHOLD
            }
            CertificateMethod::BoundMatching => {
                !self.bound_matching.is_empty() && self.bound_matching.iter().all(|b| !b.feasible_at_dim)
            }
        }
    }
}

fn is_covariant(kind: FamilyKind) -> bool {
    !kind.has_classical_part()
}

pub fn inequivalence_certificate(a: FamilyKind, b: FamilyKind, n: usize) -> Result<InequivalenceCertificate> {
    if n == 2 {
        return Err(Error::NoCertificate(
            "all four families are unitarily equivalent for n = 2".into(),
        ));
    }
    if n < 2 {
        return Err(Error::InvalidDimension { dim: n, reason: "need n >= 3" });
    }
    if a == b {
        return Err(Error::NoCertificate(format!("{a} is equivalent to itself")));
    }

    if let Some(pair) = MatchingPair::from_kinds(a, b) {
        let systems = vec![bound_matching_system(pair, n, true)?, bound_matching_system(pair, n, false)?];
        let detail = systems.iter().map(|s| s.detail.clone()).collect::<Vec<_>>().join("; ");
        return Ok(InequivalenceCertificate {
            pair: (a, b),
            dim: n,
            method: CertificateMethod::BoundMatching,
            detail,
            spectrum: None,
            bound_matching: systems,
            notes: vec![
                "an equivalence Phi_A(p) ~ Phi_B(q) would carry the admissible scalings of p onto those of q, \
                 so both range endpoints would have to match"
                    .into(),
            ],
        });
    }

    // one covariant family, one with a classical part
    let hybrid = if is_covariant(a) { b } else { a };
    let covariant = if is_covariant(a) { a } else { b };
    let p = param_range::<f64>(hybrid, n)?.p_max / 2.0;
    let w = spectrum_witness(hybrid, p, n)?;
    let mut notes = vec![
        format!(
            "{covariant} sends every pure state to the spectrum {{p + (1-p)/n, (1-p)/n x (n-1)}}; \
             unitary conjugations preserve output spectra"
        ),
        format!("representative parameter p = p_max/2 = {p} for {hybrid}"),
    ];
    notes.extend(w.notes.iter().cloned());
    let detail = format!(
        "{hybrid} at p = {p} gives output spectra differing by {:e} on two pure states",
        w.max_spectral_gap
    );
    Ok(InequivalenceCertificate {
        pair: (a, b),
        dim: n,
        method: CertificateMethod::SpectrumWitness,
        detail,
        spectrum: Some(w),
        bound_matching: Vec::new(),
        notes,
    })
}
