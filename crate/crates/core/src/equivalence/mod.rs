//! Certificates for equivalence and inequivalence of channel families under
//! input and output unitary conjugation.

mod bounds;
mod certificate;
mod qubit;
mod scaling;
mod spectrum;

pub use bounds::{bound_matching_system, matching_polynomial, BoundMatching, MatchingPair};
pub use certificate::{inequivalence_certificate, CertificateMethod, InequivalenceCertificate, SPECTRAL_GAP_THRESHOLD};
pub use qubit::{qubit_equivalence_check, qubit_variant};
pub use scaling::{alpha_interval, scale_family, AlphaInterval};
pub use spectrum::{predicted_spectra, spectrum_witness, SpectrumWitness};
