use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::frobenius::Extension;
use crate::linalg::{Field, Mat, Subspace};
use crate::module::Bimodule;

/// `A ⋉ M` with `(a, m)(b, n) = (ab, an + mb)`, basis `A` then `M`, and the inclusion `A → A ⋉ M`.
pub fn trivial_extension<F: Field>(a: &Algebra<F>, m: &Bimodule<F>) -> Result<(Algebra<F>, Extension<F>)> {
    a.ensure_same(m.left_algebra())?;
    a.ensure_same(m.right_algebra())?;
    let f = a.field();
    let (n, d) = (a.dim(), m.dim());
    let total = n + d;
    let mut left = Vec::with_capacity(total);
    for i in 0..n {
        let mut l = Mat::zeros(f, total, total);
        let (la, lm) = (&a.left_basis_mats()[i], &m.lambda()[i]);
        for r in 0..n {
            for c in 0..n {
                l.set(r, c, la.get(r, c).clone());
            }
        }
        for r in 0..d {
            for c in 0..d {
                l.set(n + r, n + c, lm.get(r, c).clone());
            }
        }
        left.push(l);
    }
    for k in 0..d {
        // (0, m_k)(b_j, n) = (0, m_k b_j)
        let mut l = Mat::zeros(f, total, total);
        for j in 0..n {
            let col = m.sigma()[j].column(k);
            for (r, v) in col.into_iter().enumerate() {
                l.set(n + r, j, v);
            }
        }
        left.push(l);
    }
    let mut unit = a.unit().to_vec();
    unit.resize(total, f.zero());
    let labels = a.labels().iter().cloned().chain((0..d).map(|k| format!("m{k}"))).collect();
    let t = Algebra::from_left_unchecked(f, left, unit, Some(labels), None);
    let lift = |v: &Vector<F>| {
        let mut w = v.clone();
        w.resize(total, f.zero());
        w
    };
    let mut rad = Subspace::zero(f, total);
    for r in a.radical().basis() {
        rad.insert(&lift(r));
    }
    for k in 0..d {
        rad.insert(&crate::linalg::echelon::unit(f, total, n + k));
    }
    t.seed_radical(rad);
    let emb = Mat::from_fn(f, total, n, |r, c| if r == c { f.one() } else { f.zero() });
    let ext = Extension::new(a, &t, emb)?;
    Ok((t, ext))
}

/// The two-sided ideal `A e A` as an `(A, A)`-bimodule; for central `e` this is `Ae`.
pub fn ideal_bimodule<F: Field>(a: &Algebra<F>, e: &[F::Elem]) -> Result<Bimodule<F>> {
    if !a.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let f = a.field();
    let ae = Subspace::column_space(&a.right_mat(e));
    let mut ideal = Subspace::zero(f, a.dim());
    for v in ae.basis() {
        for i in 0..a.dim() {
            ideal.insert(&a.mul(v, &a.basis_vector(i)));
        }
    }
    Ok(Bimodule::regular(a).submodule(&ideal)?.0)
}
