//! Indecomposable projectives, tops and projective covers.

use std::sync::Arc;

use crate::algebra::{Algebra, Vector};
use crate::error::Result;
use crate::linalg::{Field, Mat, Subspace};

use super::module::Module;

/// One indecomposable projective `P_c = A e_c` per class of simple modules.
#[derive(Debug)]
pub struct ProjectiveData<F: Field> {
    pub idempotents: Vec<Vector<F>>,
    /// `A e_c` as a subspace of the algebra.
    pub spaces: Vec<Subspace<F>>,
    pub modules: Vec<Module<F>>,
}

impl<F: Field> ProjectiveData<F> {
    pub fn num_classes(&self) -> usize {
        self.modules.len()
    }
}

/// Top of a module together with its projective cover `π: P → M`.
#[derive(Debug)]
pub struct TopData<F: Field> {
    /// Multiplicity of each simple in `M / rad M`.
    pub multiplicities: Vec<usize>,
    /// Generators `v_s ∈ e_{c_s} M` lifting a basis of the top.
    pub generators: Vec<(usize, Vector<F>)>,
    /// Offsets of each generator's block inside the cover.
    pub offsets: Vec<usize>,
    pub cover: Module<F>,
    pub epi: Mat<F>,
    pub kernel: Subspace<F>,
    /// Columns of the cover on which `epi` is invertible.
    pub pivots: Vec<usize>,
    pub pivot_inverse: Mat<F>,
}

impl<F: Field> Algebra<F> {
    pub fn projective_data(&self) -> Result<Arc<ProjectiveData<F>>> {
        self.0
            .cache
            .projectives
            .get_or_init(|| {
                let sk = self.skeleton()?;
                let regular = Module::regular(self);
                let mut idempotents = Vec::new();
                let mut spaces = Vec::new();
                let mut modules = Vec::new();
                for c in 0..sk.num_classes() {
                    let e = sk.representative(c).clone();
                    let space = Subspace::column_space(&self.right_mat(&e));
                    let (p, _) = regular.submodule(&space)?;
                    idempotents.push(e);
                    spaces.push(space);
                    modules.push(p);
                }
                Ok(Arc::new(ProjectiveData { idempotents, spaces, modules }))
            })
            .clone()
    }

    /// Indecomposable projective `A e_c`.
    pub fn projective(&self, class: usize) -> Result<Module<F>> {
        Ok(self.projective_data()?.modules[class].clone())
    }
}

impl<F: Field> Module<F> {
    pub(crate) fn top_data(&self) -> Result<Arc<TopData<F>>> {
        self.top.get_or_init(|| compute_top(self).map(Arc::new)).clone()
    }

    /// Projective cover `π: P → M` with superfluous kernel.
    pub fn projective_cover(&self) -> Result<(Module<F>, Mat<F>)> {
        let t = self.top_data()?;
        Ok((t.cover.clone(), t.epi.clone()))
    }

    /// First syzygy `Ω M = ker π` with its inclusion into the cover.
    pub fn syzygy(&self) -> Result<(Module<F>, Mat<F>)> {
        let t = self.top_data()?;
        t.cover.submodule(&t.kernel)
    }

    /// Projective iff the cover is an isomorphism.
    pub fn is_projective(&self) -> Result<bool> {
        Ok(self.top_data()?.cover.dim() == self.dim())
    }

    /// Injective iff the dual is projective over the opposite algebra.
    pub fn is_injective(&self) -> Result<bool> {
        self.dual().is_projective()
    }

    /// Injective envelope `M → I`, computed as the dual of the cover of `D M`.
    pub fn injective_envelope(&self) -> Result<(Module<F>, Mat<F>)> {
        let (p, epi) = self.dual().projective_cover()?;
        Ok((p.dual(), epi.transpose()))
    }
}

fn compute_top<F: Field>(m: &Module<F>) -> Result<TopData<F>> {
    let a = m.algebra();
    let f = a.field();
    let pd = a.projective_data()?;
    let rm = m.radical_submodule();
    let mut multiplicities = Vec::with_capacity(pd.num_classes());
    let mut generators = Vec::new();
    for (c, e) in pd.idempotents.iter().enumerate() {
        let ex = m.act(e);
        let em = Subspace::column_space(&ex);
        let mut acc = rm.image_under(&ex);
        let before = generators.len();
        for v in em.basis() {
            if acc.insert(v) {
                generators.push((c, v.clone()));
            }
        }
        multiplicities.push(generators.len() - before);
    }
    let mut offsets = Vec::with_capacity(generators.len());
    let mut parts = Vec::with_capacity(generators.len());
    let mut columns: Vec<Vector<F>> = Vec::new();
    for (c, v) in &generators {
        offsets.push(columns.len());
        parts.push(pd.modules[*c].clone());
        for x in pd.spaces[*c].basis() {
            columns.push(m.act_on(x, v));
        }
    }
    let cover = Module::direct_sum(a, &parts);
    let epi = Mat::from_columns(f, m.dim(), &columns);
    let kernel = Subspace::kernel(&epi);
    let pivots = epi.rref().pivots;
    debug_assert_eq!(pivots.len(), m.dim(), "top generators must generate");
    let pivot_inverse = epi.select_columns(&pivots).inverse().expect("pivot columns are independent");
    Ok(TopData { multiplicities, generators, offsets, cover, epi, kernel, pivots, pivot_inverse })
}
