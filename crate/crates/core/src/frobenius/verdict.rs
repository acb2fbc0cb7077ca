use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};
use crate::module::{Bimodule, Module};

use super::extension::Extension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    NotProjectiveLeft,
    NotProjectiveRight,
    NoBimoduleIso,
}

/// `E: A → B` (a `B`-`B`-bimodule map, as a `dim B × dim A` matrix) with dual bases `(x_i, y_i)`:
/// `Σ x_i E(y_i a) = a = Σ E(a x_i) y_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusSystem<F: Field> {
    pub e: Mat<F>,
    pub x: Vec<Vector<F>>,
    pub y: Vec<Vector<F>>,
}

#[derive(Clone, Debug)]
pub enum Witness<F: Field> {
    /// Invertible `(R, S)`-bimodule map `*M → M*`.
    BimoduleIso(Mat<F>),
    System(FrobeniusSystem<F>),
}

#[derive(Clone, Debug)]
pub struct FrobeniusVerdict<F: Field> {
    pub holds: bool,
    pub witness: Option<Witness<F>>,
    pub failure: Option<FailureReason>,
}

impl<F: Field> FrobeniusVerdict<F> {
    fn fail(reason: FailureReason) -> Self {
        FrobeniusVerdict { holds: false, witness: None, failure: Some(reason) }
    }

    fn pass(w: Witness<F>) -> Self {
        FrobeniusVerdict { holds: true, witness: Some(w), failure: None }
    }

    pub fn system(&self) -> Option<&FrobeniusSystem<F>> {
        match &self.witness {
            Some(Witness::System(s)) => Some(s),
            _ => None,
        }
    }
}

impl<F: Field> FrobeniusSystem<F> {
    /// `E(a)` as an element of `B`.
    pub fn apply(&self, a: &[F::Elem]) -> Vector<F> {
        self.e.mul_vec(a)
    }

    /// Checks bimodule linearity of `E` and both dual-basis identities.
    pub fn verify(&self, ext: &Extension<F>) -> Result<()> {
        let (b, a) = (&ext.small, &ext.big);
        if self.e.rows() != b.dim() || self.e.cols() != a.dim() || self.x.len() != self.y.len() {
            return Err(Error::InvalidSystem("shape mismatch".into()));
        }
        for i in 0..b.dim() {
            let bi = b.basis_vector(i);
            let ib = ext.embed(&bi);
            for j in 0..a.dim() {
                let aj = a.basis_vector(j);
                let ea = self.apply(&aj);
                if self.apply(&a.mul(&ib, &aj)) != b.mul(&bi, &ea) || self.apply(&a.mul(&aj, &ib)) != b.mul(&ea, &bi) {
                    return Err(Error::InvalidSystem("E is not a B-B-bimodule map".into()));
                }
            }
        }
        for j in 0..a.dim() {
            let aj = a.basis_vector(j);
            let mut left = a.zero();
            let mut right = a.zero();
            for (x, y) in self.x.iter().zip(&self.y) {
                left = a.add(&left, &a.mul(x, &ext.embed(&self.apply(&a.mul(y, &aj)))));
                right = a.add(&right, &a.mul(&ext.embed(&self.apply(&a.mul(&aj, x))), y));
            }
            if left != aj || right != aj {
                return Err(Error::InvalidSystem(format!("dual-basis identity fails at basis element {j}")));
            }
        }
        Ok(())
    }

    /// `Σ x_i y_i`.
    pub fn casimir(&self, a: &Algebra<F>) -> Vector<F> {
        self.x.iter().zip(&self.y).fold(a.zero(), |acc, (x, y)| a.add(&acc, &a.mul(x, y)))
    }
}

/// Projective on both sides, and `*M ≅ M*` as bimodules.
pub fn is_frobenius_bimodule<F: Field>(m: &Bimodule<F>) -> Result<FrobeniusVerdict<F>> {
    if !m.left_module().is_projective()? {
        return Ok(FrobeniusVerdict::fail(FailureReason::NotProjectiveLeft));
    }
    if !m.right_module().is_projective()? {
        return Ok(FrobeniusVerdict::fail(FailureReason::NotProjectiveRight));
    }
    let ld = m.left_dual()?;
    let rd = m.right_dual()?;
    Ok(match ld.is_isomorphic(&rd)? {
        Some(iso) => FrobeniusVerdict::pass(Witness::BimoduleIso(iso)),
        None => FrobeniusVerdict::fail(FailureReason::NoBimoduleIso),
    })
}

/// `_B A` projective and `_A A_B ≅ Hom_B(_B A, B)`; on success the witness is a verified Frobenius system.
pub fn is_frobenius_extension<F: Field>(ext: &Extension<F>) -> Result<FrobeniusVerdict<F>> {
    let m = ext.bimodule();
    if !m.left_module().is_projective()? {
        return Ok(FrobeniusVerdict::fail(FailureReason::NotProjectiveLeft));
    }
    let dual = m.left_dual()?;
    let hom = m.left_module().hom_space(&Module::regular(&ext.small))?;
    let Some(phi) = ext.bimodule_right().is_isomorphic(&dual)? else {
        return Ok(FrobeniusVerdict::fail(FailureReason::NoBimoduleIso));
    };
    let sys = frobenius_system(ext, &phi, &hom)?;
    sys.verify(ext)?;
    Ok(FrobeniusVerdict::pass(Witness::System(sys)))
}

/// `E = φ(1)` and dual bases from a splitting of the projective cover of `_B A`.
fn frobenius_system<F: Field>(
    ext: &Extension<F>,
    phi: &Mat<F>,
    hom: &crate::module::HomSpace<F>,
) -> Result<FrobeniusSystem<F>> {
    let f = ext.field();
    let (b, a) = (&ext.small, &ext.big);
    let e = hom.combine(&phi.mul_vec(a.unit()));
    let phi_inv = phi.inverse().expect("isomorphism");

    let am = ext.bimodule().left_module();
    let (cover, epi) = am.projective_cover()?;
    let top = am.top_data()?;
    let pd = b.projective_data()?;
    // a section s: A → P with epi · s = id
    let hs = am.hom_space(&cover)?;
    let cols: Vec<Vector<F>> = hs.basis().iter().map(|s| epi.mul(s).data().to_vec()).collect();
    let system = Mat::from_columns(f, a.dim() * a.dim(), &cols);
    let target = Mat::column_vector(f, Mat::identity(f, a.dim()).data());
    let c = system
        .solve(&target)?
        .ok_or_else(|| Error::InvalidSystem("cover of _B A does not split".into()))?;
    let section = hs.combine(&c.column(0));

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (s, (class, v)) in top.generators.iter().enumerate() {
        let space = &pd.spaces[*class];
        let off = top.offsets[s];
        // f_s(m) = component s of section(m), read as an element of B
        let block = section.select_rows(&(off..off + space.dim()).collect::<Vec<_>>());
        let fs = space.basis_matrix().mul(&block);
        let x = phi_inv.mul_vec(&hom.coordinates(&fs));
        xs.push(x);
        ys.push(v.clone());
    }
    Ok(FrobeniusSystem { e, x: xs, y: ys })
}

/// Whether `ι` splits as a map of left (resp. right) `B`-modules.
pub fn split_type<F: Field>(ext: &Extension<F>) -> Result<(bool, bool)> {
    let left = {
        let m = ext.bimodule().left_module();
        retraction_exists(&m, &Module::regular(&ext.small), &ext.embedding)?
    };
    let right = {
        let m = ext.bimodule_right().right_module();
        retraction_exists(&m, &Bimodule::regular(&ext.small).right_module(), &ext.embedding)?
    };
    Ok((left, right))
}

fn retraction_exists<F: Field>(big: &Module<F>, small: &Module<F>, emb: &Mat<F>) -> Result<bool> {
    let f = big.field();
    let h = big.hom_space(small)?;
    let n = small.dim();
    if h.dim() == 0 {
        return Ok(n == 0);
    }
    let cols: Vec<Vector<F>> = h.basis().iter().map(|r| r.mul(emb).data().to_vec()).collect();
    let system = Mat::from_columns(f, n * n, &cols);
    let target = Mat::column_vector(f, Mat::identity(f, n).data());
    Ok(system.solve(&target)?.is_some())
}

/// `(1)E = 1`, `Σ x_i y_i` a nonzero scalar, and `T ∘ E` a trace on `A`.
pub fn is_markov<F: Field>(ext: &Extension<F>, sys: &FrobeniusSystem<F>, trace: &[F::Elem]) -> Result<bool> {
    let f = ext.field();
    let (b, a) = (&ext.small, &ext.big);
    if trace.len() != b.dim() {
        return Err(Error::InvalidSystem("trace has the wrong length".into()));
    }
    let t = |v: &[F::Elem]| v.iter().zip(trace).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)));
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            let (bi, bj) = (b.basis_vector(i), b.basis_vector(j));
            if t(&b.mul(&bi, &bj)) != t(&b.mul(&bj, &bi)) {
                return Err(Error::NotATrace);
            }
        }
    }
    sys.verify(ext).map_err(|e| match e {
        Error::InvalidSystem(s) => Error::InvalidSystem(s),
        other => Error::InvalidSystem(other.to_string()),
    })?;
    if sys.apply(a.unit()) != b.one() {
        return Ok(false);
    }
    let cas = sys.casimir(a);
    let unit = a.unit();
    let pivot = unit.iter().position(|x| !f.is_zero(x)).expect("nonzero unit");
    let lambda = f.div(&cas[pivot], &unit[pivot]).expect("nonzero");
    if f.is_zero(&lambda) || a.scale(&lambda, unit) != cas {
        return Ok(false);
    }
    let te = |v: &[F::Elem]| t(&sys.apply(v));
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (ai, aj) = (a.basis_vector(i), a.basis_vector(j));
            if te(&a.mul(&ai, &aj)) != te(&a.mul(&aj, &ai)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `D(A_A) ≅ _A A`.
pub fn is_frobenius_algebra<F: Field>(a: &Algebra<F>) -> Result<bool> {
    let dual = Module::regular(&a.opposite()).dual();
    Ok(Module::regular(a).is_isomorphic(&dual)?.is_some())
}

/// A symmetrizing form exists: `A ≅ D(A)` as bimodules.
pub fn is_symmetric_algebra<F: Field>(a: &Algebra<F>) -> Result<bool> {
    let r = Bimodule::regular(a);
    Ok(r.is_isomorphic(&r.dual())?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{named, tensor_extension};
    use crate::linalg::Rationals;

    #[test]
    fn algebra_predicates() {
        let f = Rationals;
        assert!(is_symmetric_algebra(&named::dual_numbers(&f)).unwrap());
        assert!(is_symmetric_algebra(&named::kxy(&f)).unwrap());
        assert!(!is_frobenius_algebra(&named::a2(&f)).unwrap());
        assert!(is_frobenius_algebra(&named::matrices(&f, 2)).unwrap());
    }

    #[test]
    fn tensor_extension_system_is_markov() {
        let f = Rationals;
        let k = named::ground(&f);
        let (ext, _) = tensor_extension(&k, &named::group_algebra_c2(&f)).unwrap();
        let v = is_frobenius_extension(&ext).unwrap();
        let sys = v.system().unwrap();
        sys.verify(&ext).unwrap();
        assert_eq!(split_type(&ext).unwrap(), (true, true));
        // E is unique up to a unit of the commutative centralizer; normalize E(1) = 1
        let e1 = sys.apply(ext.big.unit());
        let s = f.inv(&e1[0]).unwrap();
        let norm = FrobeniusSystem {
            e: sys.e.scale(&s),
            x: sys.x.iter().map(|x| ext.big.scale(&e1[0], x)).collect(),
            y: sys.y.clone(),
        };
        assert!(is_markov(&ext, &norm, &[f.one()]).unwrap());
    }

    #[test]
    fn ground_field_in_non_frobenius_algebra() {
        let f = Rationals;
        let a = named::a2(&f);
        let ext = Extension::from_subalgebra(&a, &[a.one()]).unwrap();
        let v = is_frobenius_extension(&ext).unwrap();
        assert!(!v.holds);
        assert_eq!(v.failure, Some(FailureReason::NoBimoduleIso));
        assert!(is_frobenius_bimodule(&Bimodule::regular(&a)).unwrap().holds);
    }
}
