//! Endomorphism algebras, Krull–Schmidt decompositions and isomorphism tests,
//! shared by modules and bimodules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};

use super::bimodule::Bimodule;
use super::hom::HomSpace;
use super::module::Module;

/// Anything with hom spaces and invariant subspaces: modules and bimodules.
pub trait Representation<F: Field>: Clone + Send + Sync {
    fn field(&self) -> &F;
    fn dim(&self) -> usize;
    fn homs(&self, target: &Self) -> Result<HomSpace<F>>;
    /// The representation on an invariant subspace, in its echelon basis.
    fn restrict_to(&self, sub: &Subspace<F>) -> Result<Self>;
    fn same_algebras(&self, other: &Self) -> bool;
}

impl<F: Field> Representation<F> for Module<F> {
    fn field(&self) -> &F {
        Module::field(self)
    }

    fn dim(&self) -> usize {
        Module::dim(self)
    }

    fn homs(&self, target: &Self) -> Result<HomSpace<F>> {
        self.hom_space(target)
    }

    fn restrict_to(&self, sub: &Subspace<F>) -> Result<Self> {
        Ok(self.submodule(sub)?.0)
    }

    fn same_algebras(&self, other: &Self) -> bool {
        self.algebra().same(other.algebra())
    }
}

impl<F: Field> Representation<F> for Bimodule<F> {
    fn field(&self) -> &F {
        Bimodule::field(self)
    }

    fn dim(&self) -> usize {
        Bimodule::dim(self)
    }

    fn homs(&self, target: &Self) -> Result<HomSpace<F>> {
        self.hom_space(target)
    }

    fn restrict_to(&self, sub: &Subspace<F>) -> Result<Self> {
        Ok(self.submodule(sub)?.0)
    }

    fn same_algebras(&self, other: &Self) -> bool {
        self.left_algebra().same(other.left_algebra()) && self.right_algebra().same(other.right_algebra())
    }
}

/// `End(M)` with product `f·g = g ∘ f` (first `f`, then `g`), together with the
/// hom space whose basis is the algebra basis.
pub fn endomorphism_algebra<F: Field, R: Representation<F>>(m: &R) -> Result<(Algebra<F>, HomSpace<F>)> {
    let h = m.homs(m)?;
    let f = m.field();
    let r = h.dim();
    if r == 0 {
        return Err(Error::InvalidModule("the zero representation has no endomorphism algebra".into()));
    }
    let basis = h.basis();
    let left: Vec<Mat<F>> = crate::parallel::map_range(r, |i| {
        let cols: Vec<Vector<F>> = (0..r).map(|j| h.coordinates(&basis[j].mul(&basis[i]))).collect();
        Mat::from_columns(f, r, &cols)
    });
    let unit = h.coordinates(&Mat::identity(f, m.dim()));
    Ok((Algebra::from_left_unchecked(f, left, unit, None, None), h))
}

/// One indecomposable summand of a decomposition.
#[derive(Clone, Debug)]
pub struct Summand<F: Field, R> {
    pub summand: R,
    /// Isomorphism class index within the decomposition.
    pub class: usize,
    /// Idempotent endomorphism of the whole representation with this image.
    pub idempotent: Mat<F>,
    pub inclusion: Mat<F>,
    pub projection: Mat<F>,
}

/// Krull–Schmidt decomposition: summands in a deterministic order.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Field, R> {
    pub summands: Vec<Summand<F, R>>,
    pub num_classes: usize,
}

impl<F: Field, R: Representation<F>> Decomposition<F, R> {
    /// `(representative, multiplicity)` per isomorphism class.
    pub fn classes(&self) -> Vec<(&R, usize)> {
        (0..self.num_classes)
            .map(|c| {
                let first = self.summands.iter().find(|s| s.class == c).expect("class is populated");
                (&first.summand, self.summands.iter().filter(|s| s.class == c).count())
            })
            .collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }
}

/// Splits `m` along a complete set of primitive idempotents of `End(m)`.
pub fn decompose<F: Field, R: Representation<F>>(m: &R) -> Result<Decomposition<F, R>> {
    if m.dim() == 0 {
        return Ok(Decomposition { summands: Vec::new(), num_classes: 0 });
    }
    let (end, h) = endomorphism_algebra(m)?;
    let sk = end.skeleton()?;
    let mut summands = Vec::with_capacity(sk.idempotents.len());
    for (i, eps) in sk.idempotents.iter().enumerate() {
        let idem = h.combine(eps);
        let image = Subspace::column_space(&idem);
        let summand = m.restrict_to(&image)?;
        let proj_cols: Vec<Vector<F>> =
            idem.columns().iter().map(|c| image.coordinates(c).expect("image")).collect();
        let projection = Mat::from_columns(m.field(), image.dim(), &proj_cols);
        summands.push(Summand {
            summand,
            class: sk.class_of[i],
            idempotent: idem,
            inclusion: image.basis_matrix(),
            projection,
        });
    }
    Ok(Decomposition { summands, num_classes: sk.num_classes() })
}

/// An invertible intertwiner `m → n`, or `None` when the two are not isomorphic.
pub fn is_isomorphic<F: Field, R: Representation<F>>(m: &R, n: &R) -> Result<Option<Mat<F>>> {
    if !m.same_algebras(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(None);
    }
    let f = m.field();
    if m.dim() == 0 {
        return Ok(Some(Mat::zeros(f, 0, 0)));
    }
    let h = m.homs(n)?;
    if h.dim() == 0 {
        return Ok(None);
    }
    if h.dim() == 1 {
        let b = &h.basis()[0];
        return Ok(b.is_invertible().then(|| b.clone()));
    }
    if m.homs(m)?.dim() != n.homs(n)?.dim() || n.homs(m)?.dim() != h.dim() {
        return Ok(None);
    }
    if let Some(x) = sweep(&h) {
        return Ok(Some(x));
    }
    match_decompositions(m, n)
}

fn sweep<F: Field>(h: &HomSpace<F>) -> Option<Mat<F>> {
    let f = h.field();
    let r = h.dim();
    if let Some(b) = h.basis().iter().find(|b| b.is_invertible()) {
        return Some(b.clone());
    }
    let mut tries: Vec<Vector<F>> = vec![vec![f.one(); r]];
    let mut alt = vec![f.one(); r];
    for (i, x) in alt.iter_mut().enumerate() {
        *x = f.from_i64(i as i64 + 1);
    }
    tries.push(alt);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..8 {
        tries.push((0..r).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect());
    }
    tries.into_iter().map(|c| h.combine(&c)).find(Mat::is_invertible)
}

/// Exact decision: match indecomposable summands pairwise; `X ≅ Y` iff some basis
/// maps `f: X → Y`, `g: Y → X` have `g ∘ f` invertible (endomorphism rings are local).
fn match_decompositions<F: Field, R: Representation<F>>(m: &R, n: &R) -> Result<Option<Mat<F>>> {
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(None);
    }
    let f = m.field();
    let mut used = vec![false; dn.summands.len()];
    let mut iso = Mat::zeros(f, n.dim(), m.dim());
    for x in &dm.summands {
        let mut found = None;
        for (j, y) in dn.summands.iter().enumerate() {
            if used[j] || y.summand.dim() != x.summand.dim() {
                continue;
            }
            if let Some(phi) = summand_iso(&x.summand, &y.summand)? {
                found = Some((j, phi));
                break;
            }
        }
        let Some((j, phi)) = found else { return Ok(None) };
        used[j] = true;
        let y = &dn.summands[j];
        iso = iso.add(&y.inclusion.mul(&phi).mul(&x.projection));
    }
    Ok(Some(iso))
}

fn summand_iso<F: Field, R: Representation<F>>(x: &R, y: &R) -> Result<Option<Mat<F>>> {
    let fwd = x.homs(y)?;
    if fwd.dim() == 0 {
        return Ok(None);
    }
    if let Some(b) = fwd.basis().iter().find(|b| b.is_invertible()) {
        return Ok(Some(b.clone()));
    }
    let back = y.homs(x)?;
    for a in fwd.basis() {
        if back.basis().iter().any(|b| b.mul(a).is_invertible()) {
            return Ok(Some(a.clone()));
        }
    }
    Ok(None)
}

impl<F: Field> Module<F> {
    pub fn decompose(&self) -> Result<Decomposition<F, Module<F>>> {
        decompose(self)
    }

    pub fn is_isomorphic(&self, other: &Module<F>) -> Result<Option<Mat<F>>> {
        is_isomorphic(self, other)
    }

    pub fn endomorphism_algebra(&self) -> Result<Algebra<F>> {
        Ok(endomorphism_algebra(self)?.0)
    }
}

impl<F: Field> Bimodule<F> {
    pub fn decompose(&self) -> Result<Decomposition<F, Bimodule<F>>> {
        decompose(self)
    }

    pub fn is_isomorphic(&self, other: &Bimodule<F>) -> Result<Option<Mat<F>>> {
        is_isomorphic(self, other)
    }
}
