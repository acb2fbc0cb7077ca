use crate::algebra::{Algebra, Skeleton, Vector};
use crate::error::{Error, Result};
use crate::frobenius::Extension;
use crate::linalg::{Field, Mat, Subspace};
use crate::module::Bimodule;

/// `A ⊗_k B` together with its two factors; basis `a_i ⊗ b_j` has index `i · dim B + j`.
#[derive(Clone, Debug)]
pub struct TensorProduct<F: Field> {
    pub left: Algebra<F>,
    pub right: Algebra<F>,
    pub algebra: Algebra<F>,
}

impl<F: Field> TensorProduct<F> {
    /// `a ↦ a ⊗ 1`.
    pub fn left_embedding(&self) -> Mat<F> {
        let u = Mat::column_vector(self.left.field(), self.right.unit());
        Mat::identity(self.left.field(), self.left.dim()).kron(&u).expect("same field")
    }

    /// `b ↦ 1 ⊗ b`.
    pub fn right_embedding(&self) -> Mat<F> {
        let u = Mat::column_vector(self.left.field(), self.left.unit());
        u.kron(&Mat::identity(self.left.field(), self.right.dim())).expect("same field")
    }

    /// `a ⊗ b` as a vector of the tensor algebra.
    pub fn pure(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        let f = self.left.field();
        Mat::column_vector(f, a).kron(&Mat::column_vector(f, b)).expect("same field").column(0)
    }
}

/// Structure constants via Kronecker products; the radical and idempotents are
/// seeded from the factors.
pub fn tensor_algebra<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Result<TensorProduct<F>> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let f = a.field();
    let mut left = Vec::with_capacity(a.dim() * b.dim());
    let mut labels = Vec::with_capacity(a.dim() * b.dim());
    for (la, na) in a.left_basis_mats().iter().zip(a.labels()) {
        for (lb, nb) in b.left_basis_mats().iter().zip(b.labels()) {
            left.push(la.kron(lb)?);
            labels.push(format!("{na}⊗{nb}"));
        }
    }
    let unit = Mat::column_vector(f, a.unit()).kron(&Mat::column_vector(f, b.unit()))?.column(0);
    let t = Algebra::from_left_unchecked(f, left, unit, Some(labels), None);
    let tp = TensorProduct { left: a.clone(), right: b.clone(), algebra: t };

    // rad(A ⊗ B) = rad A ⊗ B + A ⊗ rad B
    let mut rad = Subspace::zero(f, tp.algebra.dim());
    for r in a.radical().basis() {
        for j in 0..b.dim() {
            rad.insert(&tp.pure(r, &b.basis_vector(j)));
        }
    }
    for r in b.radical().basis() {
        for i in 0..a.dim() {
            rad.insert(&tp.pure(&a.basis_vector(i), r));
        }
    }
    tp.algebra.seed_radical(rad);

    let gens: Vec<Vector<F>> = a
        .generators()
        .iter()
        .map(|g| tp.pure(g, b.unit()))
        .chain(b.generators().iter().map(|g| tp.pure(a.unit(), g)))
        .collect();
    tp.algebra.seed_generators(gens);

    // over split factors the products e ⊗ f of primitive idempotents stay primitive
    if let (Ok(sa), Ok(sb)) = (a.skeleton(), b.skeleton()) {
        let mut idempotents = Vec::new();
        let mut class_of = Vec::new();
        let mut representatives = Vec::new();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for (i, e) in sa.idempotents.iter().enumerate() {
            for (j, g) in sb.idempotents.iter().enumerate() {
                let key = (sa.class_of[i], sb.class_of[j]);
                let c = match seen.iter().position(|k| *k == key) {
                    Some(c) => c,
                    None => {
                        seen.push(key);
                        representatives.push(idempotents.len());
                        seen.len() - 1
                    }
                };
                class_of.push(c);
                idempotents.push(tp.pure(e, g));
            }
        }
        tp.algebra.seed_skeleton(Skeleton { idempotents, class_of, representatives });
    }
    Ok(tp)
}

/// `A ⊆ A ⊗ C` via `a ↦ a ⊗ 1`.
pub fn tensor_extension<F: Field>(a: &Algebra<F>, c: &Algebra<F>) -> Result<(Extension<F>, TensorProduct<F>)> {
    let tp = tensor_algebra(a, c)?;
    let ext = Extension::new(a, &tp.algebra, tp.left_embedding())?;
    Ok((ext, tp))
}

/// `M ⊗_k N` over given tensor algebras `B ⊗ D` and `A ⊗ C`.
pub fn tensor_bimodule_over<F: Field>(
    m: &Bimodule<F>,
    n: &Bimodule<F>,
    left: &TensorProduct<F>,
    right: &TensorProduct<F>,
) -> Result<Bimodule<F>> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    left.left.ensure_same(m.left_algebra())?;
    left.right.ensure_same(n.left_algebra())?;
    right.left.ensure_same(m.right_algebra())?;
    right.right.ensure_same(n.right_algebra())?;
    let kron_pairs = |xs: &[Mat<F>], ys: &[Mat<F>]| -> Result<Vec<Mat<F>>> {
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in xs {
            for y in ys {
                out.push(x.kron(y)?);
            }
        }
        Ok(out)
    };
    let lambda = kron_pairs(m.lambda(), n.lambda())?;
    let sigma = kron_pairs(m.sigma(), n.sigma())?;
    Ok(Bimodule::new_unchecked(&left.algebra, &right.algebra, lambda, sigma))
}

/// `M ⊗_k N` as a `(B ⊗ D, A ⊗ C)`-bimodule, building both tensor algebras.
pub fn tensor_bimodule<F: Field>(
    m: &Bimodule<F>,
    n: &Bimodule<F>,
) -> Result<(Bimodule<F>, TensorProduct<F>, TensorProduct<F>)> {
    let left = tensor_algebra(m.left_algebra(), n.left_algebra())?;
    let right = tensor_algebra(m.right_algebra(), n.right_algebra())?;
    let b = tensor_bimodule_over(m, n, &left, &right)?;
    Ok((b, left, right))
}
