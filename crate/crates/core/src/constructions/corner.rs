use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};
use crate::module::{Bimodule, Module};

use super::restrict_operator;

/// `eAe`, the `(eAe, A)`-bimodule `eA` and the left `A`-module `Ae`.
#[derive(Clone, Debug)]
pub struct CornerData<F: Field> {
    pub corner: Algebra<F>,
    /// `eAe → A`; not unital unless `e = 1`.
    pub inclusion: Mat<F>,
    pub ea: Bimodule<F>,
    pub ae: Module<F>,
}

pub fn corner_data<F: Field>(a: &Algebra<F>, e: &[F::Elem]) -> Result<CornerData<F>> {
    if !a.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let (corner, inclusion) = a.corner(e)?;
    let ea = Subspace::column_space(&a.left_mat(e));
    let lambda = inclusion.columns().iter().map(|c| restrict_operator(&ea, &a.left_mat(c))).collect();
    let sigma = a.right_basis_mats().iter().map(|r| restrict_operator(&ea, r)).collect();
    let ea = Bimodule::new_unchecked(&corner, a, lambda, sigma);
    let ae = Module::regular(a).submodule(&Subspace::column_space(&a.right_mat(e)))?.0;
    Ok(CornerData { corner, inclusion, ea, ae })
}

impl<F: Field> CornerData<F> {
    /// `eA` is projective as a left `eAe`-module.
    pub fn ea_is_projective(&self) -> Result<bool> {
        self.ea.left_module().is_projective()
    }

    /// `Hom_{eAe}(eA, eAe) ≅ Ae` as left `A`-modules.
    pub fn dual_is_ae(&self) -> Result<bool> {
        let dual = self.ea.left_dual()?.left_module();
        Ok(dual.is_isomorphic(&self.ae)?.is_some())
    }
}
