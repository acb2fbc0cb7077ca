//! Exact computations with finite-dimensional algebras: radicals, idempotents,
//! modules and bimodules, minimal injective resolutions, dominant dimensions,
//! the Nakayama functor and Frobenius extensions.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod frobenius;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod module;
pub mod parallel;

pub use error::{Error, Result};
