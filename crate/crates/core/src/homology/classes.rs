use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::module::Module;

use super::ExtendedNat;

/// Per-class homological data of an algebra: indecomposable injectives and the
/// Nakayama functor on indecomposable projectives.
#[derive(Debug)]
pub struct ClassData<F: Field> {
    /// `I_c = D(e_c A)`, the envelope of the simple with class `c`.
    pub injectives: Vec<Module<F>>,
    pub injective_is_projective: Vec<bool>,
    /// `ν P_c` computed literally as `D Hom_A(P_c, A)`.
    pub nakayama_images: Vec<Module<F>>,
    /// `c'` with `ν P_c ≅ P_{c'}`, when `ν P_c` is projective.
    pub nakayama_target: Vec<Option<usize>>,
    pub nu_stable: Vec<bool>,
    pub self_injective: bool,
    pub(crate) memo: Mutex<BTreeMap<(bool, usize), ExtendedNat>>,
}

impl<F: Field> ClassData<F> {
    pub fn num_classes(&self) -> usize {
        self.injectives.len()
    }

    /// Whether `I_c` is projective and ν-stably so.
    pub fn injective_is_nu_stable(&self, c: usize) -> bool {
        self.injective_is_projective[c] && {
            let top = self.injectives[c].top_vector().expect("cached");
            top.iter().enumerate().all(|(d, &t)| t == 0 || self.nu_stable[d])
        }
    }
}

fn compute<F: Field>(a: &Algebra<F>) -> Result<ClassData<F>> {
    let pd = a.projective_data()?;
    let op = a.opposite();
    let n = pd.num_classes();
    let mut injectives = Vec::with_capacity(n);
    let mut injective_is_projective = Vec::with_capacity(n);
    let mut nakayama_images = Vec::with_capacity(n);
    let mut nakayama_target = Vec::with_capacity(n);
    for c in 0..n {
        let inj = op.projective(c)?.dual();
        injective_is_projective.push(inj.is_projective()?);
        injectives.push(inj);
        let nu = pd.modules[c].nakayama()?;
        let target = if nu.is_projective()? {
            let top = nu.top_vector()?;
            top.iter().position(|&t| t == 1)
        } else {
            None
        };
        nakayama_images.push(nu);
        nakayama_target.push(target);
    }
    let nu_stable = (0..n)
        .map(|c| {
            let mut seen = vec![false; n];
            let mut cur = c;
            loop {
                match nakayama_target[cur] {
                    None => return false,
                    Some(next) if seen[next] => return true,
                    Some(next) => {
                        seen[next] = true;
                        cur = next;
                    }
                }
            }
        })
        .collect();
    let self_injective = Module::regular(a).is_injective()?;
    Ok(ClassData {
        injectives,
        injective_is_projective,
        nakayama_images,
        nakayama_target,
        nu_stable,
        self_injective,
        memo: Mutex::new(BTreeMap::new()),
    })
}

impl<F: Field> Algebra<F> {
    pub fn class_data(&self) -> Result<Arc<ClassData<F>>> {
        self.0.cache.homology.get_or_init(|| compute(self).map(Arc::new)).clone()
    }

    /// `_A A` is injective.
    pub fn is_selfinjective(&self) -> Result<bool> {
        Ok(self.class_data()?.self_injective)
    }

    /// Partial permutation `c ↦ c'` with `ν P_c ≅ P_{c'}`.
    pub fn nakayama_permutation(&self) -> Result<Vec<Option<usize>>> {
        Ok(self.class_data()?.nakayama_target.clone())
    }

    /// Direct sum of one copy of each ν-stably projective indecomposable projective.
    pub fn stp_generator(&self) -> Result<Module<F>> {
        let cd = self.class_data()?;
        let pd = self.projective_data()?;
        let parts: Vec<Module<F>> =
            (0..pd.num_classes()).filter(|&c| cd.nu_stable[c]).map(|c| pd.modules[c].clone()).collect();
        Ok(Module::direct_sum(self, &parts))
    }

    /// `End_A(X)` for an additive generator `X` of the ν-stably projectives; `None` when there are none.
    pub fn frobenius_part(&self) -> Result<Option<Algebra<F>>> {
        let x = self.stp_generator()?;
        if x.is_zero() {
            return Ok(None);
        }
        Ok(Some(x.endomorphism_algebra()?))
    }

    pub fn is_frobenius_free(&self) -> Result<bool> {
        Ok(self.stp_generator()?.is_zero())
    }
}

impl<F: Field> Module<F> {
    /// A projective `P` with `ν^i P` projective for all `i > 0`.
    pub fn is_nu_stably_projective(&self) -> Result<bool> {
        if !self.is_projective()? {
            return Err(Error::NotProjective);
        }
        let cd = self.algebra().class_data()?;
        let top = self.top_vector()?;
        Ok(top.iter().enumerate().all(|(c, &t)| t == 0 || cd.nu_stable[c]))
    }

    /// Whether `M` lies in `add` of the ν-stably projectives.
    pub fn is_in_stp(&self) -> Result<bool> {
        Ok(self.is_projective()? && self.is_nu_stably_projective()?)
    }
}
