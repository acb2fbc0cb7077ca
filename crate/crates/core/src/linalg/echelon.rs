use super::field::Field;
use super::mat::Mat;

/// A subspace of `F^n` kept as the rows of a reduced echelon matrix.
///
/// Coordinates of a member are its entries at the pivot positions; the quotient
/// `F^n / U` is identified with the non-pivot positions.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| unit(field, ambient, i)).collect();
        Subspace { field: field.clone(), ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span<'a, I>(field: &F, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<F::Elem>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), ambient);
            rows.push(v.clone());
        }
        if rows.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Mat::from_rows(field, rows).expect("equal lengths");
        Self::from_row_space(&m)
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Mat<F>) -> Self {
        Self::from_row_space(&m.transpose())
    }

    pub fn from_row_space(m: &Mat<F>) -> Self {
        let r = m.rref();
        let rows = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Subspace { field: m.field().clone(), ambient: m.cols(), rows, pivots: r.pivots }
    }

    /// Null space of `m` as a subspace of `F^{cols}`.
    pub fn kernel(m: &Mat<F>) -> Self {
        Self::column_space(&m.kernel_basis())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Positions spanning the canonical complement.
    pub fn free_positions(&self) -> Vec<usize> {
        let mut mark = vec![false; self.ambient];
        for &p in &self.pivots {
            mark[p] = true;
        }
        (0..self.ambient).filter(|&i| !mark[i]).collect()
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Mat<F> {
        Mat::from_columns(&self.field, self.ambient, &self.rows)
    }

    /// Remainder of `v` after clearing every pivot position.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row).skip(p) {
                f.sub_mul_assign(x, &c, y);
            }
        }
        r
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates with respect to `basis()`, or `None` for non-members.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of the class of `v` in the quotient by this subspace.
    pub fn quotient_coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.reduce(v);
        self.free_positions().into_iter().map(|i| r[i].clone()).collect()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        for row in &mut self.rows {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                f.sub_mul_assign(x, &c, y);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(&self.field, self.ambient);
        }
        // a·U = b·W  ⇔  (a, -b) in the kernel of [U; W]^T
        let f = &self.field;
        let u = self.basis_matrix();
        let w = other.basis_matrix();
        let k = u.hstack(&w.scale(&f.neg(&f.one()))).kernel_basis();
        let coeffs = k.select_rows(&(0..self.dim()).collect::<Vec<_>>());
        Self::column_space(&u.mul(&coeffs))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    /// Image of the subspace under the linear map `m`.
    pub fn image_under(&self, m: &Mat<F>) -> Self {
        let imgs: Vec<_> = self.rows.iter().map(|v| m.mul_vec(v)).collect();
        Self::span(&self.field, m.rows(), imgs.iter())
    }
}

pub fn unit<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rationals;

    fn v(xs: &[i64]) -> Vec<<Rationals as Field>::Elem> {
        xs.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn insert_keeps_reduced_form() {
        let mut s = Subspace::zero(&Rationals, 3);
        assert!(s.insert(&v(&[0, 2, 2])));
        assert!(s.insert(&v(&[1, 1, 0])));
        assert!(!s.insert(&v(&[1, 2, 1])));
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s, Subspace::span(&Rationals, 3, [v(&[1, 1, 0]), v(&[0, 1, 1])].iter()));
    }

    #[test]
    fn coordinates_and_quotient() {
        let s = Subspace::span(&Rationals, 3, [v(&[1, 0, 1]), v(&[0, 1, 1])].iter());
        assert_eq!(s.coordinates(&v(&[2, 3, 5])), Some(v(&[2, 3])));
        assert_eq!(s.coordinates(&v(&[0, 0, 1])), None);
        assert_eq!(s.free_positions(), vec![2]);
        assert_eq!(s.quotient_coordinates(&v(&[0, 0, 1])), v(&[1]));
        assert_eq!(s.quotient_coordinates(&v(&[1, 0, 0])), v(&[-1]));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(&Rationals, 3, [v(&[1, 0, 0]), v(&[0, 1, 0])].iter());
        let b = Subspace::span(&Rationals, 3, [v(&[0, 1, 0]), v(&[0, 0, 1])].iter());
        let c = a.intersection(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&v(&[0, 1, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
