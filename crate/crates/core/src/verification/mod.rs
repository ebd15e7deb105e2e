//! Numerical and exact checks of channel properties. Every check returns a
//! [`VerificationReport`]; failures are data, not errors.

mod cptp;
mod determinant;
mod fnorm;
mod identities;
mod qubit;
mod range;
mod report;
mod reprs;

pub use cptp::{is_cptp, CPTP_TOLERANCE};
pub use determinant::{dcq_det_direct, dcq_det_formula, dcq_det_matrix, det_grid, verify_det_recurrence};
pub use fnorm::{
    constant_fnorm_criterion, constant_fnorm_sample_test, expected_pure_norm, labeled_witness_states, witness_states,
    FnormCriterion,
};
pub use identities::{
    basis_conjugation_sum, corrected_forms, direct_sums, pauli_conjugation_sum, printed_forms, verify_sum_identities,
};
pub use qubit::{classify_qubit, QubitClassification, QUBIT_VARIANTS};
pub use range::{param_range, range_denominators, ParamRange, RangeDenominators};
pub use report::VerificationReport;
pub use reprs::{apply_basis_form, apply_pauli_form, verify_representations};
