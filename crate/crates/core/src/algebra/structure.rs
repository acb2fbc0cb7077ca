use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::linalg::echelon::unit;
use crate::linalg::{Field, Mat, Subspace};

use super::idempotents::Skeleton;
use super::quiver::QuiverPresentation;

/// Coordinate vector with respect to a fixed basis.
pub type Vector<F> = Vec<<F as Field>::Elem>;

/// Finite-dimensional unital associative algebra given by structure constants.
///
/// Cheap to clone; derived data (radical, idempotents, opposite, ...) is cached
/// behind the shared handle.
#[derive(Clone)]
pub struct Algebra<F: Field>(pub(crate) Arc<AlgebraData<F>>);

pub(crate) struct AlgebraData<F: Field> {
    field: F,
    dim: usize,
    /// `left[i]` is the matrix of `x ↦ b_i x`; column `j` holds `b_i b_j`.
    left: Vec<Mat<F>>,
    unit: Vector<F>,
    labels: Vec<String>,
    presentation: Option<QuiverPresentation>,
    pub(crate) cache: Cache<F>,
}

pub(crate) struct Cache<F: Field> {
    pub(crate) right: OnceLock<Vec<Mat<F>>>,
    pub(crate) radical: OnceLock<Subspace<F>>,
    pub(crate) skeleton: OnceLock<Result<Arc<Skeleton<F>>>>,
    pub(crate) generators: OnceLock<Vec<Vector<F>>>,
    pub(crate) opposite: OnceLock<OppositeLink<F>>,
    pub(crate) projectives: OnceLock<Result<Arc<crate::module::ProjectiveData<F>>>>,
    pub(crate) homology: OnceLock<Result<Arc<crate::homology::ClassData<F>>>>,
}

impl<F: Field> Default for Cache<F> {
    fn default() -> Self {
        Cache {
            right: OnceLock::new(),
            radical: OnceLock::new(),
            skeleton: OnceLock::new(),
            generators: OnceLock::new(),
            opposite: OnceLock::new(),
            projectives: OnceLock::new(),
            homology: OnceLock::new(),
        }
    }
}

pub(crate) enum OppositeLink<F: Field> {
    Owned(Algebra<F>),
    Back(Weak<AlgebraData<F>>),
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field().spec())
            .field("dim", &self.dim())
            .field("labels", &self.0.labels)
            .finish()
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("b{i}")).collect()
}

impl<F: Field> Algebra<F> {
    /// Validated constructor; `structure[i][j]` is the coordinate vector of `b_i b_j`.
    pub fn from_structure(
        field: &F,
        structure: Vec<Vec<Vector<F>>>,
        unit: Vector<F>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = structure.len();
        if n == 0 {
            return Err(Error::InvalidStructure("dimension must be positive".into()));
        }
        if unit.len() != n {
            return Err(Error::InvalidStructure(format!("unit has {} entries, expected {n}", unit.len())));
        }
        for (i, row) in structure.iter().enumerate() {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(Error::InvalidStructure(format!("row {i} of the structure tensor has the wrong shape")));
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidStructure(format!("{} labels for dimension {n}", l.len())));
            }
        }
        let left = (0..n)
            .map(|i| Mat::from_fn(field, n, n, |k, j| structure[i][j][k].clone()))
            .collect();
        let a = Self::from_left_unchecked(field, left, unit, labels, None);
        a.validate()?;
        Ok(a)
    }

    pub(crate) fn from_left_unchecked(
        field: &F,
        left: Vec<Mat<F>>,
        unit: Vector<F>,
        labels: Option<Vec<String>>,
        presentation: Option<QuiverPresentation>,
    ) -> Self {
        let dim = unit.len();
        Algebra(Arc::new(AlgebraData {
            field: field.clone(),
            dim,
            left,
            unit,
            labels: labels.unwrap_or_else(|| default_labels(dim)),
            presentation,
            cache: Cache::default(),
        }))
    }

    /// Checks associativity on basis triples and the unit laws.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let f = self.field();
        for i in 0..n {
            let ubi = self.mul(&self.0.unit, &self.basis_vector(i));
            let biu = self.mul(&self.basis_vector(i), &self.0.unit);
            if ubi != self.basis_vector(i) || biu != self.basis_vector(i) {
                return Err(Error::UnitViolation(i));
            }
        }
        // L(b_i) L(b_j) = L(b_i b_j) column by column
        for i in 0..n {
            for j in 0..n {
                let lhs = self.0.left[i].mul(&self.0.left[j]);
                let rhs = self.left_mat(&self.0.left[i].column(j));
                if lhs != rhs {
                    let l = (0..n)
                        .find(|&l| (0..n).any(|k| !f.is_zero(&f.sub(&lhs[(k, l)], &rhs[(k, l)]))))
                        .expect("matrices differ");
                    return Err(Error::AssociativityViolation(i, j, l));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.0.unit
    }

    pub fn one(&self) -> Vector<F> {
        self.0.unit.clone()
    }

    pub fn zero(&self) -> Vector<F> {
        vec![self.field().zero(); self.dim()]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        self.0.presentation.as_ref()
    }

    pub fn basis_vector(&self, i: usize) -> Vector<F> {
        unit(self.field(), self.dim(), i)
    }

    /// `structure[i][j]`, the coordinates of `b_i b_j`.
    pub fn structure(&self) -> Vec<Vec<Vector<F>>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.0.left[i].column(j)).collect())
            .collect()
    }

    pub fn left_basis_mats(&self) -> &[Mat<F>] {
        &self.0.left
    }

    /// `right[j]` is the matrix of `x ↦ x b_j`.
    pub fn right_basis_mats(&self) -> &[Mat<F>] {
        self.0.cache.right.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .map(|j| Mat::from_fn(self.field(), n, n, |k, i| self.0.left[i][(k, j)].clone()))
                .collect()
        })
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mat(&self, a: &[F::Elem]) -> Mat<F> {
        Mat::combination(self.field(), self.dim(), self.dim(), a, &self.0.left)
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_mat(&self, a: &[F::Elem]) -> Mat<F> {
        Mat::combination(self.field(), self.dim(), self.dim(), a, self.right_basis_mats())
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        let f = self.field();
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            let li = &self.0.left[i];
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, o) in out.iter_mut().enumerate() {
                    f.add_mul_assign(o, &c, &li[(k, j)]);
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        a.iter().zip(b).map(|(x, y)| self.field().add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        a.iter().zip(b).map(|(x, y)| self.field().sub(x, y)).collect()
    }

    pub fn scale(&self, s: &F::Elem, a: &[F::Elem]) -> Vector<F> {
        a.iter().map(|x| self.field().mul(s, x)).collect()
    }

    pub fn is_zero_element(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field().is_zero(x))
    }

    pub fn is_idempotent(&self, e: &[F::Elem]) -> bool {
        self.mul(e, e) == e
    }

    pub fn is_central(&self, x: &[F::Elem]) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis_vector(i);
            self.mul(x, &b) == self.mul(&b, x)
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.0.left[i].column(j) == self.0.left[j].column(i)))
    }

    /// Solutions of `xa = ax` for every basis element `a`.
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        let right = self.right_basis_mats();
        // x ↦ b_i x - x b_i, stacked
        let mut stacked: Option<Mat<F>> = None;
        for i in 0..n {
            // L(x) b_i = x b_i = R(b_i) x and b_i x = L(b_i) x
            let d = self.0.left[i].sub(&right[i]);
            stacked = Some(match stacked {
                None => d,
                Some(s) => s.vstack(&d),
            });
        }
        Subspace::kernel(&stacked.expect("positive dimension"))
    }

    /// Same handle, or identical structure constants and unit.
    pub fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.field() == other.field()
                && self.dim() == other.dim()
                && self.0.unit == other.0.unit
                && self.0.left == other.0.left)
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// The opposite algebra; `a.opposite().opposite()` is `a` itself.
    pub fn opposite(&self) -> Algebra<F> {
        let link = self.0.cache.opposite.get_or_init(|| {
            let op = Algebra::from_left_unchecked(
                self.field(),
                self.right_basis_mats().to_vec(),
                self.0.unit.clone(),
                Some(self.0.labels.clone()),
                self.0.presentation.as_ref().map(QuiverPresentation::opposite),
            );
            let _ = op.0.cache.opposite.set(OppositeLink::Back(Arc::downgrade(&self.0)));
            let _ = op.0.cache.right.set(self.0.left.clone());
            if let Some(r) = self.0.cache.radical.get() {
                let _ = op.0.cache.radical.set(r.clone());
            }
            OppositeLink::Owned(op)
        });
        match link {
            OppositeLink::Owned(op) => op.clone(),
            OppositeLink::Back(w) => match w.upgrade() {
                Some(data) => Algebra(data),
                None => Algebra::from_left_unchecked(
                    self.field(),
                    self.right_basis_mats().to_vec(),
                    self.0.unit.clone(),
                    Some(self.0.labels.clone()),
                    self.0.presentation.as_ref().map(QuiverPresentation::opposite),
                ),
            },
        }
    }

    /// Smallest unital subalgebra containing `gens`.
    pub fn subalgebra_closure(&self, gens: &[Vector<F>]) -> Subspace<F> {
        let mut span = Subspace::zero(self.field(), self.dim());
        span.insert(&self.0.unit);
        let mut frontier: Vec<Vector<F>> = vec![self.one()];
        for g in gens {
            if span.insert(g) {
                frontier.push(g.clone());
            }
        }
        let mut queue = frontier.clone();
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = self.mul(g, &x);
                if span.insert(&y) {
                    queue.push(y);
                }
            }
        }
        span
    }

    /// Greedy subset of basis vectors generating the algebra.
    pub fn generators(&self) -> &[Vector<F>] {
        self.0.cache.generators.get_or_init(|| {
            let mut gens: Vec<Vector<F>> = Vec::new();
            let mut closure = self.subalgebra_closure(&gens);
            for i in 0..self.dim() {
                if closure.dim() == self.dim() {
                    break;
                }
                let b = self.basis_vector(i);
                if !closure.contains(&b) {
                    gens.push(b);
                    closure = self.subalgebra_closure(&gens);
                }
            }
            gens
        })
    }

    pub(crate) fn seed_generators(&self, gens: Vec<Vector<F>>) {
        let _ = self.0.cache.generators.set(gens);
    }

    pub(crate) fn seed_radical(&self, rad: Subspace<F>) {
        let _ = self.0.cache.radical.set(rad);
    }

    pub(crate) fn seed_skeleton(&self, sk: Skeleton<F>) {
        let _ = self.0.cache.skeleton.set(Ok(Arc::new(sk)));
    }

    /// Whether `ideal` is closed under multiplication by basis elements on both sides.
    pub fn is_two_sided_ideal(&self, ideal: &Subspace<F>) -> bool {
        let right = self.right_basis_mats();
        ideal.basis().iter().all(|v| {
            (0..self.dim()).all(|i| ideal.contains(&self.0.left[i].mul_vec(v)) && ideal.contains(&right[i].mul_vec(v)))
        })
    }

    /// The quotient algebra by a two-sided ideal, on the canonical complement basis.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(Algebra<F>, Vec<usize>)> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::InvalidStructure("quotient by a subspace that is not an ideal".into()));
        }
        let keep = ideal.free_positions();
        if keep.is_empty() {
            return Err(Error::InvalidStructure("quotient by the whole algebra".into()));
        }
        let f = self.field();
        let m = keep.len();
        let left: Vec<Mat<F>> = keep
            .iter()
            .map(|&i| {
                let cols: Vec<Vector<F>> = keep
                    .iter()
                    .map(|&j| ideal.quotient_coordinates(&self.0.left[i].column(j)))
                    .collect();
                Mat::from_columns(f, m, &cols)
            })
            .collect();
        let unit = ideal.quotient_coordinates(&self.0.unit);
        let labels = keep.iter().map(|&i| self.0.labels[i].clone()).collect();
        Ok((Algebra::from_left_unchecked(f, left, unit, Some(labels), None), keep))
    }

    /// `eAe` with unit `e`, together with the inclusion matrix `eAe → A`.
    pub fn corner(&self, e: &[F::Elem]) -> Result<(Algebra<F>, Mat<F>)> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        if self.is_zero_element(e) {
            return Err(Error::InvalidStructure("corner at the zero idempotent".into()));
        }
        let f = self.field();
        let proj = self.left_mat(e).mul(&self.right_mat(e));
        let space = Subspace::column_space(&proj);
        let basis: Vec<Vector<F>> = space.basis().to_vec();
        let m = basis.len();
        let left: Vec<Mat<F>> = basis
            .iter()
            .map(|x| {
                let cols: Vec<Vector<F>> = basis
                    .iter()
                    .map(|y| space.coordinates(&self.mul(x, y)).expect("corner is closed"))
                    .collect();
                Mat::from_columns(f, m, &cols)
            })
            .collect();
        let unit = space.coordinates(e).expect("e lies in its corner");
        let labels = basis.iter().map(|x| self.format_element(x)).collect();
        let corner = Algebra::from_left_unchecked(f, left, unit, Some(labels), None);
        Ok((corner, space.basis_matrix()))
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, a: &[F::Elem]) -> String {
        let f = self.field();
        let mut parts = Vec::new();
        for (c, l) in a.iter().zip(&self.0.labels) {
            if f.is_zero(c) {
                continue;
            }
            if f.is_one(c) {
                parts.push(l.clone());
            } else {
                parts.push(format!("{}*{}", f.format(c), l));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Whether `m` (columns = images of basis vectors) is a unital algebra map `self → target`.
    pub fn is_homomorphism_to(&self, target: &Algebra<F>, m: &Mat<F>) -> bool {
        if m.rows() != target.dim() || m.cols() != self.dim() {
            return false;
        }
        if m.mul_vec(&self.0.unit) != target.0.unit {
            return false;
        }
        let imgs = m.columns();
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                target.mul(&imgs[i], &imgs[j]) == m.mul_vec(&self.0.left[i].column(j))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    fn kx2() -> Algebra<Rationals> {
        let f = Rationals;
        let v = |a: i64, b: i64| vec![f.from_i64(a), f.from_i64(b)];
        Algebra::from_structure(
            &f,
            vec![vec![v(1, 0), v(0, 1)], vec![v(0, 1), v(0, 0)]],
            v(1, 0),
            Some(vec!["1".into(), "x".into()]),
        )
        .unwrap()
    }

    #[test]
    fn field_itself_and_dual_numbers() {
        let f = Rationals;
        let k = Algebra::from_structure(&f, vec![vec![vec![f.one()]]], vec![f.one()], None).unwrap();
        assert_eq!(k.dim(), 1);
        let a = kx2();
        let x = a.basis_vector(1);
        assert!(a.is_zero_element(&a.mul(&x, &x)));
        assert!(a.is_commutative());
        assert_eq!(a.center().dim(), 2);
    }

    #[test]
    fn rejects_non_associative() {
        let f = Rationals;
        // basis 1, p, q, r with p q = r but p (q q) != (p q) q
        let n = 4;
        let z = || vec![f.zero(); n];
        let e = |i: usize| unit(&f, n, i);
        let mut s = vec![vec![z(); n]; n];
        for i in 0..n {
            s[0][i] = e(i);
            s[i][0] = e(i);
        }
        s[1][2] = e(3);
        s[2][2] = e(2);
        let err = Algebra::from_structure(&f, s, e(0), None).unwrap_err();
        assert!(matches!(err, Error::AssociativityViolation(..)));
    }

    #[test]
    fn rejects_bad_unit() {
        let f = Rationals;
        let err = Algebra::from_structure(&f, vec![vec![vec![f.one()]]], vec![f.from_i64(2)], None).unwrap_err();
        assert_eq!(err, Error::UnitViolation(0));
    }

    #[test]
    fn opposite_is_involutive() {
        let a = kx2();
        let op = a.opposite();
        assert!(op.opposite().ptr_eq(&a));
        assert!(op.same(&a));
    }
}
