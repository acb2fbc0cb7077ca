//! End-to-end checks for Frobenius bimodules: the canonical maps between
//! Frobenius parts, and dominant dimension inequalities.

use serde::{Deserialize, Serialize};

use crate::algebra::Vector;
use crate::error::{Error, Result};
use crate::homology::ExtendedNat;
use crate::linalg::{Field, Mat};
use crate::module::{endomorphism_algebra, Bimodule};

use super::extension::Extension;
use super::verdict::{is_frobenius_bimodule, is_frobenius_extension, split_type};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    VacuousPass,
    Unknown,
    Fail,
}

impl CheckStatus {
    pub fn is_ok(self) -> bool {
        matches!(self, CheckStatus::Pass | CheckStatus::VacuousPass)
    }

    /// Worst of two statuses (`Fail` > `Unknown` > `Pass` > `VacuousPass`).
    pub fn combine(self, other: CheckStatus) -> CheckStatus {
        use CheckStatus::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Unknown, _) | (_, Unknown) => Unknown,
            (Pass, _) | (_, Pass) => Pass,
            _ => VacuousPass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

fn hyp(name: &str, holds: bool) -> Hypothesis {
    Hypothesis { name: name.into(), holds }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalMapReport {
    pub name: String,
    pub source_dim: usize,
    pub target_dim: usize,
    pub homomorphism: bool,
    pub injective: bool,
    pub frobenius: bool,
    pub left_split: bool,
    pub right_split: bool,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem11Report {
    pub hypotheses: Vec<Hypothesis>,
    pub stp_dims: [usize; 2],
    pub maps: Vec<CanonicalMapReport>,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: String,
    pub lhs: ExtendedNat,
    pub rhs: ExtendedNat,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem12Report {
    pub hypotheses: Vec<Hypothesis>,
    pub cutoff: usize,
    pub inequalities: Vec<InequalityReport>,
    pub status: CheckStatus,
}

fn vacuous(name: &str) -> CanonicalMapReport {
    CanonicalMapReport {
        name: name.into(),
        source_dim: 0,
        target_dim: 0,
        homomorphism: true,
        injective: true,
        frobenius: true,
        left_split: true,
        right_split: true,
        status: CheckStatus::VacuousPass,
    }
}

/// `End_A(X) → End_B(M ⊗_A X)` and `End_B(Y) → End_A(Hom_B(M, Y))` for stp generators `X`, `Y`.
///
/// `None` where the generator is zero.
pub fn canonical_maps<F: Field>(m: &Bimodule<F>) -> Result<(Option<Extension<F>>, Option<Extension<F>>)> {
    let f = m.field();
    let (b, a) = (m.left_algebra(), m.right_algebra());
    let x = a.stp_generator()?;
    let phi = if x.is_zero() {
        None
    } else {
        let (end_x, hx) = endomorphism_algebra(&x)?;
        let (t, proj, sec) = m.tensor_with_projection(&x)?;
        let (end_t, ht) = endomorphism_algebra(&t)?;
        let id = Mat::identity(f, m.dim());
        let mut cols: Vec<Vector<F>> = Vec::with_capacity(hx.dim());
        for g in hx.basis() {
            let induced = proj.mul(&id.kron(g)?).mul(&sec);
            if !ht.contains(&induced) {
                return Err(Error::InvalidModule("induced map is not an endomorphism".into()));
            }
            cols.push(ht.coordinates(&induced));
        }
        Some(Extension::new_unchecked(&end_x, &end_t, Mat::from_columns(f, end_t.dim(), &cols)))
    };
    let y = b.stp_generator()?;
    let psi = if y.is_zero() {
        None
    } else {
        let (end_y, hy) = endomorphism_algebra(&y)?;
        let (h, hh) = m.hom_module_with_space(&y)?;
        if h.is_zero() {
            return Err(Error::InvalidModule("Hom_B(M, Y) vanishes".into()));
        }
        let (end_h, heh) = endomorphism_algebra(&h)?;
        let mut cols: Vec<Vector<F>> = Vec::with_capacity(hy.dim());
        for g in hy.basis() {
            let on_h: Vec<Vector<F>> = hh.basis().iter().map(|fj| hh.coordinates(&g.mul(fj))).collect();
            let induced = Mat::from_columns(f, h.dim(), &on_h);
            if !heh.contains(&induced) {
                return Err(Error::InvalidModule("induced map is not an endomorphism".into()));
            }
            cols.push(heh.coordinates(&induced));
        }
        Some(Extension::new_unchecked(&end_y, &end_h, Mat::from_columns(f, end_h.dim(), &cols)))
    };
    Ok((phi, psi))
}

fn map_report<F: Field>(name: &str, ext: &Extension<F>) -> Result<CanonicalMapReport> {
    let homomorphism = ext.small.is_homomorphism_to(&ext.big, &ext.embedding);
    let injective = ext.embedding.rank() == ext.small.dim();
    let (frobenius, left_split, right_split) = if homomorphism && injective {
        let (l, r) = split_type(ext)?;
        (is_frobenius_extension(ext)?.holds, l, r)
    } else {
        (false, false, false)
    };
    let ok = homomorphism && injective && frobenius && left_split && right_split;
    Ok(CanonicalMapReport {
        name: name.into(),
        source_dim: ext.small.dim(),
        target_dim: ext.big.dim(),
        homomorphism,
        injective,
        frobenius,
        left_split,
        right_split,
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
    })
}

/// Faithful Frobenius bimodule ⇒ both canonical maps are injective, left- and right-split Frobenius extensions.
pub fn theorem_1_1_check<F: Field>(m: &Bimodule<F>) -> Result<Theorem11Report> {
    let frob = is_frobenius_bimodule(m)?.holds;
    let lf = m.is_left_faithful();
    let rf = m.is_right_faithful();
    let hypotheses = vec![hyp("frobenius_bimodule", frob), hyp("left_faithful", lf), hyp("right_faithful", rf)];
    if !(frob && lf && rf) {
        let failed: Vec<&str> = hypotheses.iter().filter(|h| !h.holds).map(|h| h.name.as_str()).collect();
        return Err(Error::HypothesisFailed(failed.join(", ")));
    }
    let x = m.right_algebra().stp_generator()?;
    let y = m.left_algebra().stp_generator()?;
    let (phi, psi) = canonical_maps(m)?;
    let maps = vec![
        match &phi {
            Some(e) => map_report("End_A(X) -> End_B(M (x)_A X)", e)?,
            None => vacuous("End_A(X) -> End_B(M (x)_A X)"),
        },
        match &psi {
            Some(e) => map_report("End_B(Y) -> End_A(Hom_B(M, Y))", e)?,
            None => vacuous("End_B(Y) -> End_A(Hom_B(M, Y))"),
        },
    ];
    let status = maps.iter().fold(CheckStatus::VacuousPass, |s, r| s.combine(r.status));
    Ok(Theorem11Report { hypotheses, stp_dims: [x.dim(), y.dim()], maps, status })
}

fn inequality(name: &str, lhs: ExtendedNat, rhs: ExtendedNat) -> InequalityReport {
    let status = match lhs.le(&rhs) {
        Some(true) => CheckStatus::Pass,
        Some(false) => CheckStatus::Fail,
        None => CheckStatus::Unknown,
    };
    InequalityReport { name: name.into(), lhs, rhs, status }
}

/// `dm(A) ≤ dm(_B M)`, `dm(B) ≤ dm(_A *M)` and the ν-analogues.
pub fn theorem_1_2_check<F: Field>(m: &Bimodule<F>, cutoff: usize) -> Result<Theorem12Report> {
    let frob = is_frobenius_bimodule(m)?.holds;
    if !frob {
        return Err(Error::HypothesisFailed("frobenius_bimodule".into()));
    }
    let (b, a) = (m.left_algebra(), m.right_algebra());
    let bm = m.left_module();
    let am = m.left_dual()?.left_module();
    let inequalities = vec![
        inequality("dm(A) <= dm(_B M)", a.dominant_dimension(cutoff)?, bm.dominant_dimension(cutoff)?),
        inequality("dm(B) <= dm(_A *M)", b.dominant_dimension(cutoff)?, am.dominant_dimension(cutoff)?),
        inequality("nu-dm(A) <= nu-dm(_B M)", a.nu_dominant_dimension(cutoff)?, bm.nu_dominant_dimension(cutoff)?),
        inequality("nu-dm(B) <= nu-dm(_A *M)", b.nu_dominant_dimension(cutoff)?, am.nu_dominant_dimension(cutoff)?),
    ];
    let status = inequalities.iter().fold(CheckStatus::Pass, |s, r| s.combine(r.status));
    Ok(Theorem12Report { hypotheses: vec![hyp("frobenius_bimodule", true)], cutoff, inequalities, status })
}

/// For a left-split Frobenius extension `B ⊆ A`: `dm(A) = dm(B)`.
pub fn left_split_equality<F: Field>(ext: &Extension<F>, cutoff: usize) -> Result<InequalityReport> {
    let (l, _) = split_type(ext)?;
    let frob = is_frobenius_extension(ext)?.holds;
    if !(l && frob) {
        return Err(Error::HypothesisFailed("left-split Frobenius extension".into()));
    }
    let (da, db) = (ext.big.dominant_dimension(cutoff)?, ext.small.dominant_dimension(cutoff)?);
    let status = match da.same_value(&db) {
        Some(true) => CheckStatus::Pass,
        Some(false) => CheckStatus::Fail,
        None => CheckStatus::Unknown,
    };
    Ok(InequalityReport { name: "dm(A) = dm(B)".into(), lhs: da, rhs: db, status })
}

/// For `B ⊆ A` split on one side with `A` projective over `B` on both sides: `dm(A) ≤ dm(B)`.
pub fn split_extension_inequality<F: Field>(ext: &Extension<F>, cutoff: usize) -> Result<InequalityReport> {
    let (l, r) = split_type(ext)?;
    if !(l || r) {
        return Err(Error::HypothesisFailed("split extension".into()));
    }
    if !ext.bimodule().is_projective_both_sides()? {
        return Err(Error::HypothesisFailed("projective on both sides".into()));
    }
    Ok(inequality("dm(A) <= dm(B)", ext.big.dominant_dimension(cutoff)?, ext.small.dominant_dimension(cutoff)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{named, tensor_extension};
    use crate::linalg::Rationals;

    #[test]
    fn regular_bimodules() {
        let f = Rationals;
        let kx2 = named::dual_numbers(&f);
        let r = theorem_1_1_check(&Bimodule::regular(&kx2)).unwrap();
        assert_eq!(r.status, CheckStatus::Pass);
        assert_eq!(r.stp_dims, [2, 2]);
        let a2 = named::a2(&f);
        let r = theorem_1_1_check(&Bimodule::regular(&a2)).unwrap();
        assert_eq!(r.status, CheckStatus::VacuousPass);
        let r = theorem_1_2_check(&Bimodule::regular(&a2), 20).unwrap();
        assert_eq!(r.status, CheckStatus::Pass);
    }

    #[test]
    fn tensor_extension_is_left_split() {
        let f = Rationals;
        let (ext, _) = tensor_extension(&named::a2(&f), &named::dual_numbers(&f)).unwrap();
        let eq = left_split_equality(&ext, 20).unwrap();
        assert_eq!(eq.status, CheckStatus::Pass);
        assert_eq!(eq.lhs, ExtendedNat::finite(1));
        let r = theorem_1_2_check(&ext.bimodule(), 20).unwrap();
        assert_eq!(r.status, CheckStatus::Pass);
    }

    #[test]
    fn morita_example() {
        let f = Rationals;
        let ext = named::morita_extension(&f);
        assert!(is_frobenius_extension(&ext).unwrap().holds);
        let r = theorem_1_1_check(&ext.bimodule()).unwrap();
        assert_eq!(r.status, CheckStatus::Pass);
        let (_, psi) = canonical_maps(&ext.bimodule()).unwrap();
        let psi = psi.unwrap();
        assert_eq!((psi.small.dim(), psi.big.dim()), (2, 4));
        assert!(left_split_equality(&ext, 20).is_err());
    }

    #[test]
    fn split_lemma_and_its_failure_without_splitting() {
        let f = Rationals;
        let (ext, _) = tensor_extension(&named::a2(&f), &named::kxy(&f)).unwrap();
        assert_eq!(split_extension_inequality(&ext, 20).unwrap().status, CheckStatus::Pass);
        // T2 ⊆ M2 is projective on both sides but not split, and dm(T2) = 1 < dm(M2)
        let t = crate::constructions::triangular_extension(&named::ground(&f), 2).unwrap();
        assert!(t.bimodule().is_projective_both_sides().unwrap());
        assert_eq!(split_type(&t).unwrap(), (false, false));
        assert!(split_extension_inequality(&t, 20).is_err());
    }

    #[test]
    fn status_combination() {
        use CheckStatus::*;
        assert_eq!(Pass.combine(VacuousPass), Pass);
        assert_eq!(VacuousPass.combine(VacuousPass), VacuousPass);
        assert_eq!(Pass.combine(Unknown), Unknown);
        assert_eq!(Unknown.combine(Fail), Fail);
    }
}
