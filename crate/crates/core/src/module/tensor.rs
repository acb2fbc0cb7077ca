//! Tensor and hom functors attached to a bimodule.

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};

use super::bimodule::Bimodule;
use super::hom::HomSpace;
use super::module::Module;

/// Span of `m a ⊗ x - m ⊗ a x` inside `M ⊗_k X` (index `i · dim X + j`).
fn balancing_subspace<F: Field>(
    f: &F,
    inner: &Algebra<F>,
    right: &dyn Fn(&[F::Elem]) -> Mat<F>,
    left: &dyn Fn(&[F::Elem]) -> Mat<F>,
    dm: usize,
    dx: usize,
) -> Result<Subspace<F>> {
    let (im, ix) = (Mat::identity(f, dm), Mat::identity(f, dx));
    let mut w = Subspace::zero(f, dm * dx);
    for g in inner.generators() {
        let rel = right(g).kron(&ix)?.sub(&im.kron(&left(g))?);
        for c in rel.columns() {
            w.insert(&c);
        }
    }
    Ok(w)
}

fn kron_all<F: Field>(mats: &[Mat<F>], other: &Mat<F>, mat_first: bool) -> Result<Vec<Mat<F>>> {
    mats.iter()
        .map(|m| Ok(if mat_first { m.kron(other)? } else { other.kron(m)? }))
        .collect()
}

impl<F: Field> Bimodule<F> {
    /// `M ⊗_A X` as a left `B`-module, for `M = _B M_A`.
    pub fn tensor(&self, x: &Module<F>) -> Result<Module<F>> {
        self.tensor_with_projection(x).map(|(m, _, _)| m)
    }

    /// `M ⊗_A X` with the projection `M ⊗_k X → M ⊗_A X` and a linear section of it.
    pub fn tensor_with_projection(&self, x: &Module<F>) -> Result<(Module<F>, Mat<F>, Mat<F>)> {
        self.right_algebra().ensure_same(x.algebra())?;
        let f = self.field();
        let (dm, dx) = (self.dim(), x.dim());
        let w = balancing_subspace(f, self.right_algebra(), &|a| self.act_right(a), &|a| x.act(a), dm, dx)?;
        let lambda = kron_all(self.lambda(), &Mat::identity(f, dx), true)?;
        let (action, proj) = super::quotient_actions(f, dm * dx, &lambda, &w);
        let free = w.free_positions();
        let section = Mat::from_fn(f, dm * dx, free.len(), |i, j| if free[j] == i { f.one() } else { f.zero() });
        Ok((Module::new_unchecked(self.left_algebra(), action), proj, section))
    }

    /// `M ⊗_A N` for `M = _B M_A` and `N = _A N_C`.
    pub fn tensor_bimodule(&self, n: &Bimodule<F>) -> Result<Bimodule<F>> {
        self.right_algebra().ensure_same(n.left_algebra())?;
        let f = self.field();
        let (dm, dn) = (self.dim(), n.dim());
        let w = balancing_subspace(f, self.right_algebra(), &|a| self.act_right(a), &|a| n.act_left(a), dm, dn)?;
        let lambda = kron_all(self.lambda(), &Mat::identity(f, dn), true)?;
        let sigma = kron_all(n.sigma(), &Mat::identity(f, dm), false)?;
        let (lambda, _) = super::quotient_actions(f, dm * dn, &lambda, &w);
        let (sigma, _) = super::quotient_actions(f, dm * dn, &sigma, &w);
        Ok(Bimodule::new_unchecked(self.left_algebra(), n.right_algebra(), lambda, sigma))
    }

    /// `Hom_B(M, Y)` as a left `A`-module via `(a f)(m) = f(m a)`.
    pub fn hom_module(&self, y: &Module<F>) -> Result<Module<F>> {
        self.hom_module_with_space(y).map(|(m, _)| m)
    }

    /// `Hom_B(M, Y)` together with the hom space providing its basis.
    pub fn hom_module_with_space(&self, y: &Module<F>) -> Result<(Module<F>, HomSpace<F>)> {
        self.left_algebra().ensure_same(y.algebra())?;
        let h = self.left_module().hom_space(y)?;
        let f = self.field();
        let r = h.dim();
        let action = self
            .sigma()
            .iter()
            .map(|s| {
                let cols: Vec<Vector<F>> = h.basis().iter().map(|b| h.coordinates(&b.mul(s))).collect();
                Mat::from_columns(f, r, &cols)
            })
            .collect();
        Ok((Module::new_unchecked(self.right_algebra(), action), h))
    }

    /// `Hom_B(M, N)` as an `(A, C)`-bimodule for `M = _B M_A`, `N = _B N_C`.
    pub fn hom_bimodule(&self, n: &Bimodule<F>) -> Result<Bimodule<F>> {
        self.left_algebra().ensure_same(n.left_algebra())?;
        let h = self.left_module().hom_space(&n.left_module())?;
        let f = self.field();
        let r = h.dim();
        let induced = |map: &dyn Fn(&Mat<F>) -> Mat<F>| -> Mat<F> {
            let cols: Vec<Vector<F>> = h.basis().iter().map(|b| h.coordinates(&map(b))).collect();
            Mat::from_columns(f, r, &cols)
        };
        let lambda = self.sigma().iter().map(|s| induced(&|b| b.mul(s))).collect();
        let sigma = n.sigma().iter().map(|s| induced(&|b| s.mul(b))).collect();
        Ok(Bimodule::new_unchecked(self.right_algebra(), n.right_algebra(), lambda, sigma))
    }

    /// Left dual `*M = Hom_B(M, B)` as an `(A, B)`-bimodule.
    pub fn left_dual(&self) -> Result<Bimodule<F>> {
        self.hom_bimodule(&Bimodule::regular(self.left_algebra()))
    }

    /// Right dual `M* = Hom_{A^op}(M_A, A_A)` as an `(A, B)`-bimodule.
    pub fn right_dual(&self) -> Result<Bimodule<F>> {
        let op = self.right_algebra().opposite();
        Ok(self.swap().hom_bimodule(&Bimodule::regular(&op))?.swap())
    }
}

impl<F: Field> Module<F> {
    /// `ν M = D Hom_A(M, A)`.
    pub fn nakayama(&self) -> Result<Module<F>> {
        let a = self.algebra();
        let h = self.hom_space(&Module::regular(a))?;
        let f = self.field();
        let r = h.dim();
        // right action (f·a)(m) = f(m) a, i.e. F ↦ R_a F, as a left A^op-module
        let action: Vec<Mat<F>> = a
            .right_basis_mats()
            .iter()
            .map(|ra| {
                let cols: Vec<Vector<F>> = h.basis().iter().map(|b| h.coordinates(&ra.mul(b))).collect();
                Mat::from_columns(f, r, &cols)
            })
            .collect();
        Ok(Module::new_unchecked(&a.opposite(), action).dual())
    }

    /// `M ⊗_k X` over `A ⊗ B` given the tensor algebra, with basis index `i · dim X + j`.
    pub fn outer_tensor(&self, x: &Module<F>, tensor: &Algebra<F>) -> Result<Module<F>> {
        if tensor.dim() != self.algebra().dim() * x.algebra().dim() {
            return Err(Error::AlgebraMismatch);
        }
        let mut action = Vec::with_capacity(tensor.dim());
        for a in self.action() {
            for b in x.action() {
                action.push(a.kron(b)?);
            }
        }
        Ok(Module::new_unchecked(tensor, action))
    }
}
