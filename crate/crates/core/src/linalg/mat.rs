use std::ops::Index;

use super::field::Field;
use super::LinalgError;
use crate::parallel;

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Result of Gauss–Jordan elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub reduced: Mat<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Index<(usize, usize)> for Mat<F> {
    type Output = F::Elem;

    fn index(&self, (i, j): (usize, usize)) -> &F::Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Ok(Mat {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for literals in tests and corpus builders.
    pub fn from_i64(field: &F, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        Self::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn column_vector(field: &F, v: &[F::Elem]) -> Self {
        Mat { field: field.clone(), rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product of {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        let oc = other.cols;
        for i in 0..self.rows {
            let out_row = &mut out.data[i * oc..(i + 1) * oc];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let orow = &other.data[k * oc..(k + 1) * oc];
                for (o, b) in out_row.iter_mut().zip(orow) {
                    f.add_mul_assign(o, a, b);
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    f.add_mul_assign(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.rows, v.len());
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(i)) {
                f.add_mul_assign(o, a, b);
            }
        }
        out
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| self.field.mul(a, s)).collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &F::Elem, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if self.field.is_zero(s) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            self.field.add_mul_assign(a, s, b);
        }
    }

    /// Linear combination `Σ coeffs[i] * mats[i]` of equally shaped matrices.
    pub fn combination(field: &F, rows: usize, cols: usize, coeffs: &[F::Elem], mats: &[Self]) -> Self {
        let mut out = Self::zeros(field, rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            out.add_scaled(c, m);
        }
        out
    }

    /// Kronecker product; row `(i, j)` of the result is `i * other.rows + j`.
    pub fn kron(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if f.is_zero(b) {
                            continue;
                        }
                        out.data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Stacks blocks with `cols` columns on top of each other.
    pub fn vstack_all(field: &F, cols: usize, blocks: &[Self]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn block_diag(field: &F, blocks: &[Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.data[(r0 + i) * c + c0 + j] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, &self[(i, i)]))
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref<F> {
        let f = self.field.clone();
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !f.is_zero(&m.data[i * cols + c])) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(&m.data[r * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                let x = &mut m.data[r * cols + j];
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                }
            }
            // sparse copy of the pivot row
            let pivot_row: Vec<(usize, F::Elem)> = (c..cols)
                .filter_map(|j| {
                    let x = &m.data[r * cols + j];
                    (!f.is_zero(x)).then(|| (j, x.clone()))
                })
                .collect();
            let work = rows * pivot_row.len();
            let fr = &f;
            parallel::for_each_row(&mut m.data, cols, work, |i, row| {
                if i == r {
                    return;
                }
                let factor = row[c].clone();
                if fr.is_zero(&factor) {
                    return;
                }
                for (j, v) in &pivot_row {
                    fr.sub_mul_assign(&mut row[*j], &factor, v);
                }
            });
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the right null space.
    pub fn kernel_basis(&self) -> Self {
        let Rref { reduced, pivots, .. } = self.rref();
        kernel_from_rref(&self.field, &reduced, &pivots, self.cols)
    }

    /// Some `X` with `self * X = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "solve with {} equations but right-hand side of {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs);
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let f = &self.field;
        let mut x = Self::zeros(f, self.cols, rhs.cols);
        for (k, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[pc * rhs.cols + j] = reduced[(k, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve(&Self::identity(&self.field, n)).ok()??;
        // solve may return a particular solution for singular input
        (self.rank() == n).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        let mut p = self.clone();
        let mut rank = p.rank();
        loop {
            if rank == 0 {
                return true;
            }
            p = p.mul(self);
            let r = p.rank();
            if r == rank {
                return false;
            }
            rank = r;
        }
    }
}

pub(crate) fn kernel_from_rref<F: Field>(field: &F, reduced: &Mat<F>, pivots: &[usize], cols: usize) -> Mat<F> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Mat::zeros(field, cols, free.len());
    for (t, &fc) in free.iter().enumerate() {
        k.data[fc * free.len() + t] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            let v = &reduced[(row, fc)];
            if !field.is_zero(v) {
                k.data[pc * free.len() + t] = field.neg(v);
            }
        }
    }
    k
}
