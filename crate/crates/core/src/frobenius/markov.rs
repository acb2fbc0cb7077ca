//! Frobenius systems for `A ⊆ A ⊗ C` built from a nondegenerate form on `C`.

use crate::algebra::Vector;
use crate::constructions::TensorProduct;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

use super::extension::Extension;
use super::verdict::FrobeniusSystem;

/// `E(a ⊗ c) = t(c) a` with dual bases `x_i = 1 ⊗ c_i`, `y_i = 1 ⊗ c'_i` where `t(c'_i c_j) = δ_ij`.
///
/// The form `t` must be nondegenerate (`t(c c')` invertible as a Gram matrix); the result is verified
/// against the extension.
pub fn tensor_frobenius_system<F: Field>(
    tp: &TensorProduct<F>,
    ext: &Extension<F>,
    form: &[F::Elem],
) -> Result<FrobeniusSystem<F>> {
    let f = tp.left.field();
    let (a, c) = (&tp.left, &tp.right);
    if form.len() != c.dim() {
        return Err(Error::InvalidSystem("form has the wrong length".into()));
    }
    let t = |v: &[F::Elem]| v.iter().zip(form).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)));
    let n = c.dim();
    // gram[i][j] = t(c_i c_j)
    let gram = Mat::from_fn(f, n, n, |i, j| t(&c.mul(&c.basis_vector(i), &c.basis_vector(j))));
    let inv = gram
        .inverse()
        .ok_or_else(|| Error::InvalidSystem("form is degenerate".into()))?;
    // c'_i = Σ_k inv[k][i] c_k gives t(c'_i c_j) = Σ_k inv[k][i] gram[k][j] = δ_ij
    let dual: Vec<Vector<F>> = (0..n).map(|i| inv.column(i)).collect();
    let e = Mat::from_fn(f, a.dim(), a.dim() * n, |r, col| {
        let (i, j) = (col / n, col % n);
        if i == r {
            form[j].clone()
        } else {
            f.zero()
        }
    });
    let x = (0..n).map(|i| tp.pure(a.unit(), &dual[i])).collect();
    let y = (0..n).map(|i| tp.pure(a.unit(), &c.basis_vector(i))).collect();
    let sys = FrobeniusSystem { e, x, y };
    sys.verify(ext)?;
    Ok(sys)
}
