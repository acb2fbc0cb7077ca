use crate::algebra::{Algebra, Skeleton, Vector};
use crate::error::{Error, Result};
use crate::frobenius::Extension;
use crate::linalg::echelon::unit;
use crate::linalg::{Field, Mat, Subspace};

use super::tensor::tensor_algebra;

/// `M_n(k)` on the matrix units `e_ij` (index `i · n + j`, 0-based).
pub fn full_matrix_algebra<F: Field>(f: &F, n: usize) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(Error::InvalidStructure("matrix size must be positive".into()));
    }
    let d = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let left = (0..d)
        .map(|p| {
            let (i, j) = (p / n, p % n);
            // e_ij e_jl = e_il
            Mat::from_fn(f, d, d, |r, c| if c / n == j && r == idx(i, c % n) { f.one() } else { f.zero() })
        })
        .collect();
    let mut one = vec![f.zero(); d];
    for i in 0..n {
        one[idx(i, i)] = f.one();
    }
    let labels = (0..d).map(|p| format!("e{}{}", p / n + 1, p % n + 1)).collect();
    let a = Algebra::from_left_unchecked(f, left, one, Some(labels), None);
    a.seed_radical(Subspace::zero(f, d));
    let idempotents: Vec<Vector<F>> = (0..n).map(|i| unit(f, d, idx(i, i))).collect();
    a.seed_skeleton(Skeleton { idempotents, class_of: vec![0; n], representatives: vec![0] });
    Ok(a)
}

/// `M_n(A) = M_n(k) ⊗ A`.
pub fn matrix_algebra<F: Field>(a: &Algebra<F>, n: usize) -> Result<Algebra<F>> {
    if n == 1 {
        return Ok(a.clone());
    }
    Ok(tensor_algebra(&full_matrix_algebra(a.field(), n)?, a)?.algebra)
}

/// Lower triangular `T_n(A) ⊆ M_n(A)`.
pub fn triangular_extension<F: Field>(a: &Algebra<F>, n: usize) -> Result<Extension<F>> {
    let f = a.field();
    let mn = full_matrix_algebra(f, n)?;
    let basis: Vec<Vector<F>> = (0..n)
        .flat_map(|i| (0..=i).map(move |j| (i, j)))
        .map(|(i, j)| unit(f, n * n, i * n + j))
        .collect();
    let tn = Extension::from_subalgebra_basis(&mn, &basis)?;
    if a.dim() == 1 {
        return Ok(tn);
    }
    let small = tensor_algebra(&tn.small, a)?;
    let big = tensor_algebra(&mn, a)?;
    let emb = tn.embedding.kron(&Mat::identity(f, a.dim()))?;
    Extension::new(&small.algebra, &big.algebra, emb)
}

pub fn triangular_algebra<F: Field>(a: &Algebra<F>, n: usize) -> Result<Algebra<F>> {
    if n == 1 {
        return Ok(a.clone());
    }
    Ok(triangular_extension(a, n)?.small)
}
