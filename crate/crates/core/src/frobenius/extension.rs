use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};
use crate::module::Bimodule;

/// An injective unital algebra map `ι: B → A` (columns = images of the basis of `B`).
#[derive(Clone, Debug)]
pub struct Extension<F: Field> {
    pub small: Algebra<F>,
    pub big: Algebra<F>,
    pub embedding: Mat<F>,
}

impl<F: Field> Extension<F> {
    pub fn new(small: &Algebra<F>, big: &Algebra<F>, embedding: Mat<F>) -> Result<Self> {
        if small.field() != big.field() {
            return Err(Error::FieldMismatch);
        }
        if !small.is_homomorphism_to(big, &embedding) {
            return Err(Error::InvalidExtension("embedding is not a unital algebra homomorphism".into()));
        }
        if embedding.rank() != small.dim() {
            return Err(Error::InvalidExtension("embedding is not injective".into()));
        }
        Ok(Extension { small: small.clone(), big: big.clone(), embedding })
    }

    pub(crate) fn new_unchecked(small: &Algebra<F>, big: &Algebra<F>, embedding: Mat<F>) -> Self {
        Extension { small: small.clone(), big: big.clone(), embedding }
    }

    pub fn identity(a: &Algebra<F>) -> Self {
        Self::new_unchecked(a, a, Mat::identity(a.field(), a.dim()))
    }

    /// The subalgebra spanned by `vectors`, which must be closed under products and contain `1`.
    pub fn from_subalgebra(big: &Algebra<F>, vectors: &[Vector<F>]) -> Result<Self> {
        let f = big.field();
        let space = Subspace::span(f, big.dim(), vectors.iter());
        if !space.contains(big.unit()) {
            return Err(Error::InvalidExtension("span does not contain the unit".into()));
        }
        let basis = space.basis().to_vec();
        let m = basis.len();
        let mut left = Vec::with_capacity(m);
        for x in &basis {
            let mut cols = Vec::with_capacity(m);
            for y in &basis {
                let c = space
                    .coordinates(&big.mul(x, y))
                    .ok_or_else(|| Error::InvalidExtension("span is not closed under multiplication".into()))?;
                cols.push(c);
            }
            left.push(Mat::from_columns(f, m, &cols));
        }
        let unit = space.coordinates(big.unit()).expect("checked");
        let labels = basis.iter().map(|x| big.format_element(x)).collect();
        let small = Algebra::from_left_unchecked(f, left, unit, Some(labels), None);
        Ok(Self::new_unchecked(&small, big, space.basis_matrix()))
    }

    /// The same span, but keeping the given vectors as the basis of the subalgebra.
    pub fn from_subalgebra_basis(big: &Algebra<F>, basis: &[Vector<F>]) -> Result<Self> {
        let f = big.field();
        let emb = Mat::from_columns(f, big.dim(), basis);
        if emb.rank() != basis.len() {
            return Err(Error::InvalidExtension("basis vectors are dependent".into()));
        }
        let space = Subspace::column_space(&emb);
        // coordinates relative to `basis`: solve emb · c = v
        let coords = |v: &Vector<F>| -> Result<Vector<F>> {
            if !space.contains(v) {
                return Err(Error::InvalidExtension("span is not closed under multiplication".into()));
            }
            let sol = emb.solve(&Mat::column_vector(f, v))?.expect("member of the span");
            Ok(sol.column(0))
        };
        let n = basis.len();
        let mut structure = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                structure[i][j] = coords(&big.mul(&basis[i], &basis[j]))?;
            }
        }
        let unit = coords(&big.one())?;
        let labels = basis.iter().map(|x| big.format_element(x)).collect();
        let small = Algebra::from_structure(f, structure, unit, Some(labels))?;
        Self::new(&small, big, emb)
    }

    pub fn field(&self) -> &F {
        self.small.field()
    }

    /// `ι(b)`.
    pub fn embed(&self, b: &[F::Elem]) -> Vector<F> {
        self.embedding.mul_vec(b)
    }

    /// `_B A_A`.
    pub fn bimodule(&self) -> Bimodule<F> {
        Bimodule::from_embedding(&self.small, &self.big, &self.embedding)
    }

    /// `_A A_B`.
    pub fn bimodule_right(&self) -> Bimodule<F> {
        Bimodule::from_embedding_right(&self.small, &self.big, &self.embedding)
    }

    /// `_B A_B`.
    pub fn bimodule_both(&self) -> Bimodule<F> {
        self.bimodule_right().restrict(&self.small, &self.embedding, &self.small, &Mat::identity(self.field(), self.small.dim()))
    }

    /// `C ⊆ B ⊆ A` from `self: B ⊆ A` and `inner: C ⊆ B`.
    pub fn compose(&self, inner: &Extension<F>) -> Result<Extension<F>> {
        inner.big.ensure_same(&self.small)?;
        Ok(Self::new_unchecked(&inner.small, &self.big, self.embedding.mul(&inner.embedding)))
    }

    /// The opposite extension `B^op ⊆ A^op`.
    pub fn opposite(&self) -> Extension<F> {
        Self::new_unchecked(&self.small.opposite(), &self.big.opposite(), self.embedding.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverPresentation;
    use crate::linalg::Rationals;

    #[test]
    fn subalgebra_and_composition() {
        let a = QuiverPresentation::parse("vertex 1 2; arrow a: 1 -> 2;").unwrap().algebra(&Rationals).unwrap();
        let f = Rationals;
        let one = a.one();
        let e0 = a.basis_vector(0);
        let sub = Extension::from_subalgebra(&a, &[one.clone(), e0]).unwrap();
        assert_eq!(sub.small.dim(), 2);
        Extension::new(&sub.small, &a, sub.embedding.clone()).unwrap();
        let k = Extension::from_subalgebra(&sub.small, &[sub.small.one()]).unwrap();
        let c = sub.compose(&k).unwrap();
        assert_eq!(c.embed(&[f.one()]), one);
        assert!(Extension::from_subalgebra(&a, &[a.basis_vector(2)]).is_err());
        let again = Extension::from_subalgebra_basis(&a, &[one, a.basis_vector(0)]).unwrap();
        assert_eq!(again.small.dim(), 2);
    }
}
