//! Exact realization counts, realization streams, perturbation families and
//! the local P-stability measure.

pub mod count;
pub mod family;
pub mod realizations;

pub use count::{count_realizations, CountConfig, CountResult, Counter};
pub use family::{
    count_h_family, family_count, family_perturbations, h_prime_perturbation, h_prime_sequence,
    h_realization, h_sequence, p_measure, p_measure_report, sort_labels_by_degree, verify_appendix,
    AppendixReport, HFamilyCounts, InequalityCheck, PMeasureReport, PerturbationFamilyCount,
};
pub use realizations::{enumerate_realizations, Realizations};
