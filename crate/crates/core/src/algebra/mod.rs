//! Finite-dimensional algebras: structure constants, quiver presentations,
//! radical, idempotents and Morita invariants.

pub mod idempotents;
pub mod invariants;
pub mod quiver;
pub mod radical;
pub mod structure;

pub use idempotents::Skeleton;
pub use invariants::{fingerprint_of, find_isomorphism, morita_compare, MoritaComparison, MoritaFingerprint};
pub use quiver::QuiverPresentation;
pub use structure::{Algebra, Vector};
