use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};

use super::projective::TopData;

/// Finite-dimensional left module given by one action matrix per basis element.
///
/// Vectors are columns and `ρ(ab) = ρ(a)ρ(b)`.
#[derive(Clone)]
pub struct Module<F: Field> {
    algebra: Algebra<F>,
    dim: usize,
    action: Arc<Vec<Mat<F>>>,
    pub(crate) top: Arc<OnceLock<Result<Arc<TopData<F>>>>>,
}

impl<F: Field> fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module").field("algebra_dim", &self.algebra.dim()).field("dim", &self.dim).finish()
    }
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.algebra.same(&other.algebra) && self.action == other.action
    }
}

impl<F: Field> Module<F> {
    /// Validated constructor: shapes, `ρ(1) = id`, and the representation law on generators.
    pub fn new(algebra: &Algebra<F>, action: Vec<Mat<F>>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let d = action.first().map_or(0, Mat::rows);
        if action.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
        }
        if action.iter().any(|m| m.field() != algebra.field()) {
            return Err(Error::FieldMismatch);
        }
        let m = Self::new_unchecked(algebra, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: &Algebra<F>, action: Vec<Mat<F>>) -> Self {
        let dim = action.first().map_or(0, Mat::rows);
        Module { algebra: algebra.clone(), dim, action: Arc::new(action), top: Arc::new(OnceLock::new()) }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.act(self.algebra.unit()).is_identity() {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for g in self.algebra.generators() {
            let rg = self.act(g);
            for j in 0..self.algebra.dim() {
                let lhs = rg.mul(&self.action[j]);
                let rhs = self.act(&self.algebra.mul(g, &self.algebra.basis_vector(j)));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "representation law fails for {} times basis element {j}",
                        self.algebra.format_element(g)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: &Algebra<F>) -> Self {
        let f = algebra.field();
        Self::new_unchecked(algebra, vec![Mat::zeros(f, 0, 0); algebra.dim()])
    }

    /// `_AA` with the left multiplication action.
    pub fn regular(algebra: &Algebra<F>) -> Self {
        Self::new_unchecked(algebra, algebra.left_basis_mats().to_vec())
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self) -> &[Mat<F>] {
        &self.action
    }

    /// `ρ(a)`.
    pub fn act(&self, a: &[F::Elem]) -> Mat<F> {
        Mat::combination(self.field(), self.dim, self.dim, a, &self.action)
    }

    pub fn act_on(&self, a: &[F::Elem], v: &[F::Elem]) -> Vector<F> {
        self.act(a).mul_vec(v)
    }

    /// Whether `f` (target × source) intertwines the actions.
    pub fn is_hom_to(&self, target: &Module<F>, f: &Mat<F>) -> bool {
        f.rows() == target.dim
            && f.cols() == self.dim
            && self.algebra.generators().iter().all(|g| f.mul(&self.act(g)) == target.act(g).mul(f))
    }

    /// Same module on a new basis: `ρ'(a) = P⁻¹ ρ(a) P`.
    pub fn change_basis(&self, p: &Mat<F>) -> Result<Self> {
        let inv = p.inverse().ok_or_else(|| Error::InvalidModule("basis change is singular".into()))?;
        let action = self.action.iter().map(|m| inv.mul(m).mul(p)).collect();
        Ok(Self::new_unchecked(&self.algebra, action))
    }

    pub fn is_submodule(&self, sub: &Subspace<F>) -> bool {
        sub.basis().iter().all(|v| self.action.iter().all(|m| sub.contains(&m.mul_vec(v))))
    }

    /// The submodule on `sub` with its inclusion matrix.
    pub fn submodule(&self, sub: &Subspace<F>) -> Result<(Module<F>, Mat<F>)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        let f = self.field();
        let k = sub.dim();
        let action = self
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vector<F>> =
                    sub.basis().iter().map(|v| sub.coordinates(&m.mul_vec(v)).expect("invariant")).collect();
                Mat::from_columns(f, k, &cols)
            })
            .collect();
        Ok((Self::new_unchecked(&self.algebra, action), sub.basis_matrix()))
    }

    /// The quotient by `sub` on the canonical complement, with the projection matrix.
    pub fn quotient(&self, sub: &Subspace<F>) -> Result<(Module<F>, Mat<F>)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        let (action, proj) = super::quotient_actions(self.field(), self.dim, &self.action, sub);
        Ok((Self::new_unchecked(&self.algebra, action), proj))
    }

    /// Image of a homomorphism `f: self → target` as a submodule of the target.
    pub fn image_of(&self, f: &Mat<F>) -> Subspace<F> {
        Subspace::column_space(f)
    }

    pub fn direct_sum(algebra: &Algebra<F>, parts: &[Module<F>]) -> Self {
        let f = algebra.field();
        let action = (0..algebra.dim())
            .map(|i| {
                let blocks: Vec<Mat<F>> = parts.iter().map(|p| p.action[i].clone()).collect();
                Mat::block_diag(f, &blocks)
            })
            .collect();
        Self::new_unchecked(algebra, action)
    }

    pub fn oplus(&self, other: &Module<F>) -> Result<Module<F>> {
        self.algebra.ensure_same(&other.algebra)?;
        Ok(Self::direct_sum(&self.algebra, &[self.clone(), other.clone()]))
    }

    /// `D M = Hom_k(M, k)` as a left module over the opposite algebra.
    pub fn dual(&self) -> Module<F> {
        let action = self.action.iter().map(Mat::transpose).collect();
        Self::new_unchecked(&self.algebra.opposite(), action)
    }

    /// Restriction along an algebra map `small → self.algebra` (columns = images of basis vectors).
    pub fn restrict(&self, small: &Algebra<F>, embedding: &Mat<F>) -> Module<F> {
        let action = embedding.columns().iter().map(|img| self.act(img)).collect();
        Self::new_unchecked(small, action)
    }

    /// Injectivity of `A → End_k(M)`.
    pub fn is_faithful(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        let f = self.field();
        let cols: Vec<Vector<F>> = self.action.iter().map(|m| m.data().to_vec()).collect();
        Mat::from_columns(f, self.dim * self.dim, &cols).rank() == self.algebra.dim()
    }

    /// `rad(A) M`.
    pub fn radical_submodule(&self) -> Subspace<F> {
        let mut s = Subspace::zero(self.field(), self.dim);
        for r in self.algebra.radical().basis() {
            let m = self.act(r);
            for c in m.columns() {
                s.insert(&c);
            }
        }
        s
    }

    /// `{m : rad(A) m = 0}`.
    pub fn socle(&self) -> Subspace<F> {
        let rad = self.algebra.radical();
        if rad.dim() == 0 || self.dim == 0 {
            return Subspace::full(self.field(), self.dim);
        }
        let mut stacked: Option<Mat<F>> = None;
        for r in rad.basis() {
            let m = self.act(r);
            stacked = Some(match stacked {
                None => m,
                Some(s) => s.vstack(&m),
            });
        }
        Subspace::kernel(&stacked.expect("nonzero radical"))
    }

    /// `eM` as a subspace.
    pub fn idempotent_part(&self, e: &[F::Elem]) -> Subspace<F> {
        Subspace::column_space(&self.act(e))
    }

    /// `dim e_c M` for each class `c` of simple modules.
    pub fn dimension_vector(&self) -> Result<Vec<usize>> {
        let sk = self.algebra.skeleton()?;
        Ok((0..sk.num_classes()).map(|c| self.act(sk.representative(c)).rank()).collect())
    }

    /// Multiplicity of each simple in `M / rad M`.
    pub fn top_vector(&self) -> Result<Vec<usize>> {
        Ok(self.top_data()?.multiplicities.clone())
    }

    /// Multiplicity of each simple in the socle.
    pub fn socle_vector(&self) -> Result<Vec<usize>> {
        let sk = self.algebra.skeleton()?;
        let soc = self.socle();
        Ok((0..sk.num_classes())
            .map(|c| soc.image_under(&self.act(sk.representative(c))).dim())
            .collect())
    }
}
