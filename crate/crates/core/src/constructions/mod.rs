//! Algebra and bimodule combinators: tensor products, trivial extensions,
//! matrix and triangular algebras, skew group algebras and corners, plus a
//! handful of named small algebras.

mod corner;
mod matrix;
pub mod named;
mod skew;
mod tensor;
mod trivial;

pub use corner::{corner_data, CornerData};
pub use matrix::{full_matrix_algebra, matrix_algebra, triangular_algebra, triangular_extension};
pub use skew::{skew_element, skew_group_algebra, skew_group_extension, GroupAction, GroupSpec};
pub use tensor::{tensor_algebra, tensor_bimodule, tensor_bimodule_over, tensor_extension, TensorProduct};
pub use trivial::{ideal_bimodule, trivial_extension};

use crate::algebra::Vector;
use crate::linalg::{Field, Mat, Subspace};

/// Matrix of `op` restricted to the invariant subspace `space`, in the basis of `space`.
pub(crate) fn restrict_operator<F: Field>(space: &Subspace<F>, op: &Mat<F>) -> Mat<F> {
    let cols: Vec<Vector<F>> = space
        .basis()
        .iter()
        .map(|v| space.coordinates(&op.mul_vec(v)).expect("invariant subspace"))
        .collect();
    Mat::from_columns(space.field(), space.dim(), &cols)
}
