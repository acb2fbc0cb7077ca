//! Modules, bimodules, hom spaces, tensor and hom functors, decompositions.

mod bimodule;
mod decompose;
mod hom;
#[allow(clippy::module_inception)]
mod module;
mod projective;
pub mod random;
mod tensor;

pub use bimodule::Bimodule;
pub use decompose::{endomorphism_algebra, Decomposition, Representation, Summand};
pub use hom::HomSpace;
pub use module::Module;
pub use projective::{ProjectiveData, TopData};

use crate::algebra::Vector;
use crate::linalg::echelon::unit;
use crate::linalg::{Field, Mat, Subspace};

/// Induced actions on `V / sub` in the canonical complement basis, with the projection.
pub(crate) fn quotient_actions<F: Field>(
    f: &F,
    dim: usize,
    mats: &[Mat<F>],
    sub: &Subspace<F>,
) -> (Vec<Mat<F>>, Mat<F>) {
    let free = sub.free_positions();
    let q = free.len();
    let proj_cols: Vec<Vector<F>> = (0..dim).map(|i| sub.quotient_coordinates(&unit(f, dim, i))).collect();
    let proj = Mat::from_columns(f, q, &proj_cols);
    let action = mats
        .iter()
        .map(|m| {
            let cols: Vec<Vector<F>> = free.iter().map(|&i| sub.quotient_coordinates(&m.column(i))).collect();
            Mat::from_columns(f, q, &cols)
        })
        .collect();
    (action, proj)
}
