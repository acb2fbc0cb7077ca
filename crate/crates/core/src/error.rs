use crate::linalg::LinalgError;

/// Errors raised by the algebra, module and homology layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("structure constants are not associative: (b{0} b{1}) b{2} != b{0} (b{1} b{2})")]
    AssociativityViolation(usize, usize, usize),
    #[error("unit does not act as identity on basis element {0}")]
    UnitViolation(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid structure data: {0}")]
    InvalidStructure(String),
    #[error("quotient of the path algebra is infinite-dimensional (no stabilization below path length {0})")]
    InfiniteDimensional(usize),
    #[error("relations do not generate an admissible ideal: {0}")]
    NonAdmissible(String),
    #[error("radical algorithm unsupported in characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("idempotent lifting failed: {0}")]
    IdempotentLiftFailure(String),
    #[error("a semisimple quotient is not split over the ground field")]
    SplitnessRequired,
    #[error("operands are defined over different algebras")]
    AlgebraMismatch,
    #[error("operands are defined over different fields")]
    FieldMismatch,
    #[error("invalid module data: {0}")]
    InvalidModule(String),
    #[error("module is not projective")]
    NotProjective,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("functional is not a trace")]
    NotATrace,
    #[error("invalid Frobenius system: {0}")]
    InvalidSystem(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
