use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};

use super::hom::HomSpace;
use super::module::Module;

/// `_B M_A`: a left `B`-action `λ` and a right `A`-action `σ`.
///
/// `σ(a)` is the matrix of `m ↦ m a`, so `σ` is a representation of `A^op`.
#[derive(Clone)]
pub struct Bimodule<F: Field> {
    left: Algebra<F>,
    right: Algebra<F>,
    dim: usize,
    lambda: Arc<Vec<Mat<F>>>,
    sigma: Arc<Vec<Mat<F>>>,
}

impl<F: Field> fmt::Debug for Bimodule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bimodule")
            .field("left_dim", &self.left.dim())
            .field("right_dim", &self.right.dim())
            .field("dim", &self.dim)
            .finish()
    }
}

impl<F: Field> PartialEq for Bimodule<F> {
    fn eq(&self, other: &Self) -> bool {
        self.left.same(&other.left)
            && self.right.same(&other.right)
            && self.lambda == other.lambda
            && self.sigma == other.sigma
    }
}

impl<F: Field> Bimodule<F> {
    /// Validated constructor: both actions are representations and they commute.
    pub fn new(left: &Algebra<F>, right: &Algebra<F>, lambda: Vec<Mat<F>>, sigma: Vec<Mat<F>>) -> Result<Self> {
        let lm = Module::new(left, lambda)?;
        let rm = Module::new(&right.opposite(), sigma)?;
        if lm.dim() != rm.dim() {
            return Err(Error::InvalidModule("left and right actions have different sizes".into()));
        }
        let b = Self::new_unchecked(left, right, lm.action().to_vec(), rm.action().to_vec());
        for g in left.generators() {
            let l = b.act_left(g);
            for h in right.generators() {
                let r = b.act_right(h);
                if l.mul(&r) != r.mul(&l) {
                    return Err(Error::InvalidModule("left and right actions do not commute".into()));
                }
            }
        }
        Ok(b)
    }

    pub(crate) fn new_unchecked(left: &Algebra<F>, right: &Algebra<F>, lambda: Vec<Mat<F>>, sigma: Vec<Mat<F>>) -> Self {
        let dim = lambda.first().or(sigma.first()).map_or(0, Mat::rows);
        Bimodule { left: left.clone(), right: right.clone(), dim, lambda: Arc::new(lambda), sigma: Arc::new(sigma) }
    }

    /// `_A A_A`.
    pub fn regular(a: &Algebra<F>) -> Self {
        Self::new_unchecked(a, a, a.left_basis_mats().to_vec(), a.right_basis_mats().to_vec())
    }

    /// `_B A_A` for an algebra map `B → A` (columns = images of basis vectors).
    pub fn from_embedding(small: &Algebra<F>, big: &Algebra<F>, embedding: &Mat<F>) -> Self {
        let lambda = embedding.columns().iter().map(|c| big.left_mat(c)).collect();
        Self::new_unchecked(small, big, lambda, big.right_basis_mats().to_vec())
    }

    /// `_A A_B` for an algebra map `B → A`.
    pub fn from_embedding_right(small: &Algebra<F>, big: &Algebra<F>, embedding: &Mat<F>) -> Self {
        let sigma = embedding.columns().iter().map(|c| big.right_mat(c)).collect();
        Self::new_unchecked(big, small, big.left_basis_mats().to_vec(), sigma)
    }

    pub fn zero(left: &Algebra<F>, right: &Algebra<F>) -> Self {
        let f = left.field();
        Self::new_unchecked(left, right, vec![Mat::zeros(f, 0, 0); left.dim()], vec![Mat::zeros(f, 0, 0); right.dim()])
    }

    pub fn left_algebra(&self) -> &Algebra<F> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Algebra<F> {
        &self.right
    }

    pub fn field(&self) -> &F {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn lambda(&self) -> &[Mat<F>] {
        &self.lambda
    }

    pub fn sigma(&self) -> &[Mat<F>] {
        &self.sigma
    }

    pub fn act_left(&self, b: &[F::Elem]) -> Mat<F> {
        Mat::combination(self.field(), self.dim, self.dim, b, &self.lambda)
    }

    pub fn act_right(&self, a: &[F::Elem]) -> Mat<F> {
        Mat::combination(self.field(), self.dim, self.dim, a, &self.sigma)
    }

    /// `_B M`.
    pub fn left_module(&self) -> Module<F> {
        Module::new_unchecked(&self.left, self.lambda.to_vec())
    }

    /// `M_A` as a left `A^op`-module.
    pub fn right_module(&self) -> Module<F> {
        Module::new_unchecked(&self.right.opposite(), self.sigma.to_vec())
    }

    /// `M` as an `(A^op, B^op)`-bimodule.
    pub fn swap(&self) -> Bimodule<F> {
        Self::new_unchecked(&self.right.opposite(), &self.left.opposite(), self.sigma.to_vec(), self.lambda.to_vec())
    }

    /// `D M = Hom_k(M, k)` as an `(A, B)`-bimodule.
    pub fn dual(&self) -> Bimodule<F> {
        let t = |v: &Vec<Mat<F>>| v.iter().map(Mat::transpose).collect();
        Self::new_unchecked(&self.right, &self.left, t(&self.sigma), t(&self.lambda))
    }

    pub fn is_hom_to(&self, target: &Bimodule<F>, f: &Mat<F>) -> bool {
        f.rows() == target.dim
            && f.cols() == self.dim
            && self.left.generators().iter().all(|g| f.mul(&self.act_left(g)) == target.act_left(g).mul(f))
            && self.right.generators().iter().all(|g| f.mul(&self.act_right(g)) == target.act_right(g).mul(f))
    }

    /// `Hom_{B-A}(self, target)`.
    pub fn hom_space(&self, target: &Bimodule<F>) -> Result<HomSpace<F>> {
        self.left.ensure_same(&target.left)?;
        self.right.ensure_same(&target.right)?;
        let h = self.left_module().hom_space(&target.left_module())?;
        let gens: Vec<(Mat<F>, Mat<F>)> =
            self.right.generators().iter().map(|g| (self.act_right(g), target.act_right(g))).collect();
        let f = self.field().clone();
        let m = self.dim;
        Ok(h.restrict(move |x| {
            let blocks: Vec<Mat<F>> = gens.iter().map(|(s, t)| x.mul(s).sub(&t.mul(x))).collect();
            Mat::vstack_all(&f, m, &blocks)
        }))
    }

    pub fn is_submodule(&self, sub: &Subspace<F>) -> bool {
        sub.basis()
            .iter()
            .all(|v| self.lambda.iter().chain(self.sigma.iter()).all(|m| sub.contains(&m.mul_vec(v))))
    }

    pub fn submodule(&self, sub: &Subspace<F>) -> Result<(Bimodule<F>, Mat<F>)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidModule("subspace is not a sub-bimodule".into()));
        }
        let f = self.field();
        let restrict = |mats: &Vec<Mat<F>>| -> Vec<Mat<F>> {
            mats.iter()
                .map(|m| {
                    let cols: Vec<Vector<F>> =
                        sub.basis().iter().map(|v| sub.coordinates(&m.mul_vec(v)).expect("invariant")).collect();
                    Mat::from_columns(f, sub.dim(), &cols)
                })
                .collect()
        };
        Ok((
            Self::new_unchecked(&self.left, &self.right, restrict(&self.lambda), restrict(&self.sigma)),
            sub.basis_matrix(),
        ))
    }

    pub fn quotient(&self, sub: &Subspace<F>) -> Result<(Bimodule<F>, Mat<F>)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidModule("subspace is not a sub-bimodule".into()));
        }
        let (lambda, proj) = super::quotient_actions(self.field(), self.dim, &self.lambda, sub);
        let (sigma, _) = super::quotient_actions(self.field(), self.dim, &self.sigma, sub);
        Ok((Self::new_unchecked(&self.left, &self.right, lambda, sigma), proj))
    }

    pub fn direct_sum(parts: &[Bimodule<F>]) -> Result<Bimodule<F>> {
        let first = parts.first().ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
        for p in parts {
            first.left.ensure_same(&p.left)?;
            first.right.ensure_same(&p.right)?;
        }
        let f = first.field();
        let sum = |get: &dyn Fn(&Bimodule<F>) -> &[Mat<F>], n: usize| -> Vec<Mat<F>> {
            (0..n)
                .map(|i| Mat::block_diag(f, &parts.iter().map(|p| get(p)[i].clone()).collect::<Vec<_>>()))
                .collect()
        };
        let lambda = sum(&|p| p.lambda(), first.left.dim());
        let sigma = sum(&|p| p.sigma(), first.right.dim());
        Ok(Self::new_unchecked(&first.left, &first.right, lambda, sigma))
    }

    /// Restriction of scalars along algebra maps into the left and right algebras.
    pub fn restrict(
        &self,
        new_left: &Algebra<F>,
        left_embedding: &Mat<F>,
        new_right: &Algebra<F>,
        right_embedding: &Mat<F>,
    ) -> Bimodule<F> {
        let lambda = left_embedding.columns().iter().map(|c| self.act_left(c)).collect();
        let sigma = right_embedding.columns().iter().map(|c| self.act_right(c)).collect();
        Self::new_unchecked(new_left, new_right, lambda, sigma)
    }

    pub fn is_left_faithful(&self) -> bool {
        self.left_module().is_faithful()
    }

    pub fn is_right_faithful(&self) -> bool {
        self.right_module().is_faithful()
    }

    /// Finitely generated projective on both sides.
    pub fn is_projective_both_sides(&self) -> Result<bool> {
        Ok(self.left_module().is_projective()? && self.right_module().is_projective()?)
    }
}
