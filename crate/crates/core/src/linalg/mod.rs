//! Exact dense linear algebra over ℚ and prime fields.

pub mod echelon;
pub mod field;
pub mod mat;
pub mod poly;

pub use echelon::Subspace;
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use mat::{Mat, Rref};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("cannot parse field element {0:?}")]
    Parse(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operands live over different fields")]
    FieldMismatch,
}
