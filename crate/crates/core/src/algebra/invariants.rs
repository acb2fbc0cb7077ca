//! Cartan matrices, basic algebras, Morita fingerprints and a small
//! isomorphism search for basic algebras.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{Field, Mat, Subspace};

use super::structure::{Algebra, Vector};

/// Largest basic dimension for which an explicit isomorphism is searched.
pub const ISOMORPHISM_SEARCH_DIM: usize = 8;
const SEARCH_BUDGET: usize = 200_000;

/// Morita-invariant data: equal fingerprints are necessary for Morita equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoritaFingerprint {
    pub basic_dim: usize,
    pub simples: usize,
    /// Cartan matrix under the lexicographically least simultaneous permutation.
    pub cartan: Vec<Vec<usize>>,
    pub radical_layers: Vec<usize>,
}

impl MoritaFingerprint {
    /// Fingerprint of the zero algebra.
    pub fn zero() -> Self {
        MoritaFingerprint { basic_dim: 0, simples: 0, cartan: Vec::new(), radical_layers: Vec::new() }
    }
}

/// Outcome of comparing two algebras up to Morita equivalence.
#[derive(Clone, Debug, PartialEq)]
pub enum MoritaComparison<F: Field> {
    Different,
    /// Explicit isomorphism between the basic algebras (columns = images of basis vectors).
    Isomorphic(Mat<F>),
    /// Fingerprints agree but no isomorphism was certified.
    FingerprintEqual,
    /// Both algebras are zero.
    BothZero,
}

impl<F: Field> MoritaComparison<F> {
    pub fn equivalent_or_unknown(&self) -> bool {
        !matches!(self, MoritaComparison::Different)
    }

    pub fn status(&self) -> &'static str {
        match self {
            MoritaComparison::Different => "different",
            MoritaComparison::Isomorphic(_) | MoritaComparison::BothZero => "isomorphic",
            MoritaComparison::FingerprintEqual => "fingerprint-equal, isomorphism not certified",
        }
    }
}

impl<F: Field> Algebra<F> {
    /// `C[i][j]` = multiplicity of `S_j` in `P_i` = `dim e_j A e_i`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<usize>>> {
        let sk = self.skeleton()?;
        let n = sk.num_classes();
        let mut c = vec![vec![0; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            let ei = self.right_mat(sk.representative(i));
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.left_mat(sk.representative(j)).mul(&ei).rank();
            }
        }
        Ok(c)
    }

    /// The basic algebra `eAe` with `e` one primitive idempotent per class.
    pub fn basic_algebra(&self) -> Result<(Algebra<F>, Vector<F>)> {
        let sk = self.skeleton()?;
        let mut e = self.zero();
        for c in 0..sk.num_classes() {
            e = self.add(&e, sk.representative(c));
        }
        if e == self.one() {
            return Ok((self.clone(), e));
        }
        let (b, _) = self.corner(&e)?;
        Ok((b, e))
    }

    pub fn is_basic(&self) -> Result<bool> {
        let sk = self.skeleton()?;
        Ok(sk.num_classes() == sk.idempotents.len())
    }

    pub fn morita_fingerprint(&self) -> Result<MoritaFingerprint> {
        let (b, _) = self.basic_algebra()?;
        let cartan = canonical_cartan(&b.cartan_matrix()?);
        Ok(MoritaFingerprint {
            basic_dim: b.dim(),
            simples: cartan.len(),
            cartan,
            radical_layers: b.radical_layers(),
        })
    }
}

pub fn fingerprint_of<F: Field>(a: Option<&Algebra<F>>) -> Result<MoritaFingerprint> {
    match a {
        None => Ok(MoritaFingerprint::zero()),
        Some(a) => a.morita_fingerprint(),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // Heap's algorithm
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn permuted(c: &[Vec<usize>], p: &[usize]) -> Vec<Vec<usize>> {
    p.iter().map(|&i| p.iter().map(|&j| c[i][j]).collect()).collect()
}

/// Lexicographically least simultaneous row/column permutation; for more than
/// eight simples the rows are ordered by a permutation-invariant key instead.
pub fn canonical_cartan(c: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = c.len();
    if n <= 8 {
        permutations(n).iter().map(|p| permuted(c, p)).min().unwrap_or_default()
    } else {
        let mut order: Vec<usize> = (0..n).collect();
        let key = |i: usize| {
            let mut row: Vec<usize> = c[i].clone();
            row.sort_unstable();
            let mut col: Vec<usize> = (0..n).map(|j| c[j][i]).collect();
            col.sort_unstable();
            (c[i][i], row, col)
        };
        order.sort_by_key(|&i| key(i));
        permuted(c, &order)
    }
}

/// Compares two possibly-zero algebras up to Morita equivalence.
pub fn morita_compare<F: Field>(a: Option<&Algebra<F>>, b: Option<&Algebra<F>>) -> Result<MoritaComparison<F>> {
    let (fa, fb) = (fingerprint_of(a)?, fingerprint_of(b)?);
    if fa != fb {
        return Ok(MoritaComparison::Different);
    }
    let (Some(a), Some(b)) = (a, b) else {
        return Ok(MoritaComparison::BothZero);
    };
    let (ba, _) = a.basic_algebra()?;
    let (bb, _) = b.basic_algebra()?;
    if ba.dim() > ISOMORPHISM_SEARCH_DIM {
        return Ok(MoritaComparison::FingerprintEqual);
    }
    Ok(match find_isomorphism(&ba, &bb)? {
        Some(m) => MoritaComparison::Isomorphic(m),
        None => MoritaComparison::FingerprintEqual,
    })
}

struct Quiverish<F: Field> {
    idempotents: Vec<Vector<F>>,
    /// (source class, target class, element of e_s J e_t)
    arrows: Vec<(usize, usize, Vector<F>)>,
}

fn arrow_data<F: Field>(a: &Algebra<F>) -> Result<Quiverish<F>> {
    let sk = a.skeleton()?;
    let n = sk.num_classes();
    let idempotents: Vec<Vector<F>> = (0..n).map(|c| sk.representative(c).clone()).collect();
    let rad = a.radical().clone();
    let rad2 = a.radical_power(2);
    let mut arrows = Vec::new();
    for (i, ei) in idempotents.iter().enumerate() {
        for (j, ej) in idempotents.iter().enumerate() {
            let proj = a.left_mat(ei).mul(&a.right_mat(ej));
            let piece = Subspace::span(a.field(), a.dim(), rad.basis().iter().map(|r| proj.mul_vec(r)).collect::<Vec<_>>().iter());
            let mut low = Subspace::span(a.field(), a.dim(), rad2.basis().iter().map(|r| proj.mul_vec(r)).collect::<Vec<_>>().iter());
            for v in piece.basis() {
                if low.insert(v) {
                    arrows.push((i, j, v.clone()));
                }
            }
        }
    }
    Ok(Quiverish { idempotents, arrows })
}

fn coefficient_set<F: Field>(f: &F) -> Vec<F::Elem> {
    let p = f.characteristic();
    if p != 0 && p <= 7 {
        (1..p as i64).map(|x| f.from_i64(x)).collect()
    } else {
        [1, -1, 2, -2].iter().map(|&x| f.from_i64(x)).collect()
    }
}

/// Searches an algebra isomorphism between basic split algebras by mapping
/// primitive idempotents to primitive idempotents and arrows to small
/// combinations inside the matching `f_i J f_j`.
pub fn find_isomorphism<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Result<Option<Mat<F>>> {
    if a.dim() != b.dim() || a.field() != b.field() {
        return Ok(None);
    }
    let f = a.field();
    let qa = arrow_data(a)?;
    let qb = arrow_data(b)?;
    let n = qa.idempotents.len();
    if n != qb.idempotents.len() || qa.arrows.len() != qb.arrows.len() {
        return Ok(None);
    }
    let gens: Vec<Vector<F>> = qa.idempotents.iter().cloned().chain(qa.arrows.iter().map(|x| x.2.clone())).collect();
    if a.subalgebra_closure(&gens).dim() != a.dim() {
        return Ok(None);
    }
    let ca = a.cartan_matrix()?;
    let cb = b.cartan_matrix()?;
    let rad_b = b.radical().clone();
    let coeffs = coefficient_set(f);
    let mut budget = SEARCH_BUDGET;

    for sigma in permutations(n) {
        if (0..n).any(|i| (0..n).any(|j| ca[i][j] != cb[sigma[i]][sigma[j]])) {
            continue;
        }
        // candidate images for each arrow
        let mut options: Vec<Vec<Vector<F>>> = Vec::new();
        for (s, t, _) in &qa.arrows {
            let proj = b.left_mat(&qb.idempotents[sigma[*s]]).mul(&b.right_mat(&qb.idempotents[sigma[*t]]));
            let target = Subspace::span(f, b.dim(), rad_b.basis().iter().map(|r| proj.mul_vec(r)).collect::<Vec<_>>().iter());
            options.push(small_combinations(f, target.basis(), &coeffs, 512));
        }
        if options.iter().any(Vec::is_empty) && !qa.arrows.is_empty() {
            continue;
        }
        let mut choice = vec![0usize; options.len()];
        loop {
            if budget == 0 {
                return Ok(None);
            }
            budget -= 1;
            let images: Vec<Vector<F>> = qb
                .idempotents
                .iter()
                .enumerate()
                .map(|(i, _)| qb.idempotents[sigma[i]].clone())
                .chain(choice.iter().enumerate().map(|(k, &c)| options[k][c].clone()))
                .collect();
            if let Some(m) = extend_to_homomorphism(a, b, &gens, &images) {
                return Ok(Some(m));
            }
            // odometer
            let mut k = 0;
            loop {
                if k == choice.len() {
                    break;
                }
                choice[k] += 1;
                if choice[k] < options[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    Ok(None)
}

fn small_combinations<F: Field>(f: &F, basis: &[Vector<F>], coeffs: &[F::Elem], cap: usize) -> Vec<Vector<F>> {
    let mut out: Vec<Vector<F>> = Vec::new();
    if basis.is_empty() {
        return out;
    }
    let len = basis[0].len();
    let base = coeffs.len() + 1;
    let total = (base as u64).checked_pow(basis.len() as u32).unwrap_or(u64::MAX);
    let mut idx = 1u64;
    while idx < total && out.len() < cap {
        let mut v = vec![f.zero(); len];
        let mut rest = idx;
        for b in basis {
            let d = (rest % base as u64) as usize;
            rest /= base as u64;
            if d > 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    f.add_mul_assign(x, &coeffs[d - 1], y);
                }
            }
        }
        out.push(v);
        idx += 1;
    }
    out
}

/// The algebra map determined by `gens ↦ images`, if it is a well-defined isomorphism.
fn extend_to_homomorphism<F: Field>(
    a: &Algebra<F>,
    b: &Algebra<F>,
    gens: &[Vector<F>],
    images: &[Vector<F>],
) -> Option<Mat<F>> {
    let f = a.field();
    let mut span = Subspace::zero(f, a.dim());
    let mut src: Vec<Vector<F>> = Vec::new();
    let mut dst: Vec<Vector<F>> = Vec::new();
    let mut queue: Vec<(Vector<F>, Vector<F>)> = vec![(a.one(), b.one())];
    queue.extend(gens.iter().cloned().zip(images.iter().cloned()));
    let mut head = 0;
    while head < queue.len() && span.dim() < a.dim() {
        let (x, y) = queue[head].clone();
        head += 1;
        if span.insert(&x) {
            src.push(x.clone());
            dst.push(y.clone());
            for (g, h) in gens.iter().zip(images) {
                queue.push((a.mul(&x, g), b.mul(&y, h)));
            }
        }
    }
    if span.dim() < a.dim() {
        return None;
    }
    let s = Mat::from_columns(f, a.dim(), &src);
    let d = Mat::from_columns(f, b.dim(), &dst);
    let m = d.mul(&s.inverse()?);
    (m.is_invertible() && a.is_homomorphism_to(b, &m)).then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quiver::QuiverPresentation;
    use crate::linalg::Rationals;

    #[test]
    fn cartan_of_small_algebras() {
        let a2 = QuiverPresentation::parse("vertex 1 2; arrow a: 1 -> 2;").unwrap().algebra(&Rationals).unwrap();
        assert_eq!(a2.cartan_matrix().unwrap(), vec![vec![1, 0], vec![1, 1]]);
        let kx2 = QuiverPresentation::parse("vertex 1; arrow x: 1 -> 1; relation x*x;")
            .unwrap()
            .algebra(&Rationals)
            .unwrap();
        assert_eq!(kx2.cartan_matrix().unwrap(), vec![vec![2]]);
    }

    #[test]
    fn opposite_quivers_are_isomorphic_for_a2() {
        let a = QuiverPresentation::parse("vertex 1 2; arrow a: 1 -> 2;").unwrap();
        let b = QuiverPresentation::parse("vertex x y; arrow b: y -> x;").unwrap();
        let (a, b) = (a.algebra(&Rationals).unwrap(), b.algebra(&Rationals).unwrap());
        let m = find_isomorphism(&a, &b).unwrap().unwrap();
        assert!(a.is_homomorphism_to(&b, &m));
        let c = morita_compare(Some(&a), Some(&a.opposite())).unwrap();
        assert!(matches!(c, MoritaComparison::Isomorphic(_)));
    }

    #[test]
    fn non_isomorphic_with_equal_dimensions() {
        let kx2 = QuiverPresentation::parse("vertex 1; arrow x: 1 -> 1; relation x*x;")
            .unwrap()
            .algebra(&Rationals)
            .unwrap();
        let kk = QuiverPresentation::parse("vertex 1 2;").unwrap().algebra(&Rationals).unwrap();
        assert_eq!(morita_compare(Some(&kx2), Some(&kk)).unwrap(), MoritaComparison::Different);
        assert_eq!(morita_compare(Some(&kx2), None).unwrap(), MoritaComparison::Different);
    }
}
