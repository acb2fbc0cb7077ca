//! Frobenius bimodules and extensions, Frobenius systems, split and Markov
//! extensions, and the end-to-end theorem checks.

mod extension;
mod facts;
mod markov;
mod theorems;
mod verdict;

pub use extension::Extension;
pub use facts::{check_facts, FactOutcome, FactsReport};
pub use markov::tensor_frobenius_system;
pub use theorems::{
    canonical_maps, left_split_equality, split_extension_inequality, theorem_1_1_check, theorem_1_2_check, CanonicalMapReport, CheckStatus,
    Hypothesis, InequalityReport, Theorem11Report, Theorem12Report,
};
pub use verdict::{
    is_frobenius_algebra, is_frobenius_bimodule, is_frobenius_extension, is_markov, is_symmetric_algebra, split_type,
    FailureReason, FrobeniusSystem, FrobeniusVerdict, Witness,
};
