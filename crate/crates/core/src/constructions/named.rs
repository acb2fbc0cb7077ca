//! Small algebras used throughout the examples and tests.

use crate::algebra::{Algebra, QuiverPresentation, Vector};
use crate::frobenius::Extension;
use crate::linalg::echelon::unit;
use crate::linalg::Field;
use crate::module::Module;

use super::matrix::{full_matrix_algebra, triangular_extension};
use super::skew::{skew_group_algebra, GroupAction};

pub const DUAL_NUMBERS: &str = "vertex 1; arrow x: 1 -> 1; relation x*x;";
pub const A2: &str = "vertex 1 2; arrow a: 1 -> 2;";
pub const KXY: &str = "vertex 1; arrow x: 1 -> 1; arrow y: 1 -> 1; relation x*x; relation y*y; relation x*y - y*x;";
pub const AUSLANDER: &str = "vertex 1 2; arrow a: 1 -> 2; arrow b: 2 -> 1; relation a*b;";

fn quiver<F: Field>(f: &F, src: &str) -> Algebra<F> {
    QuiverPresentation::parse(src).and_then(|q| q.algebra(f)).expect("built-in presentation")
}

/// `k`.
pub fn ground<F: Field>(f: &F) -> Algebra<F> {
    semisimple(f, 1)
}

/// `k × ⋯ × k`.
pub fn semisimple<F: Field>(f: &F, n: usize) -> Algebra<F> {
    let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    quiver(f, &format!("vertex {};", vs.join(" ")))
}

/// `k[x]/(x²)`.
pub fn dual_numbers<F: Field>(f: &F) -> Algebra<F> {
    quiver(f, DUAL_NUMBERS)
}

/// Path algebra of `1 → 2`.
pub fn a2<F: Field>(f: &F) -> Algebra<F> {
    quiver(f, A2)
}

/// `k[x, y]/(x², y²)`, a 4-dimensional symmetric local algebra.
pub fn kxy<F: Field>(f: &F) -> Algebra<F> {
    quiver(f, KXY)
}

/// `T_n(k)`.
pub fn triangular<F: Field>(f: &F, n: usize) -> Algebra<F> {
    triangular_extension(&ground(f), n).expect("n ≥ 1").small
}

pub fn matrices<F: Field>(f: &F, n: usize) -> Algebra<F> {
    full_matrix_algebra(f, n).expect("n ≥ 1")
}

/// Group algebra of `C₂` as the skew group algebra of the trivial action on `k`.
pub fn group_algebra_c2<F: Field>(f: &F) -> Algebra<F> {
    let k = ground(f);
    let g = GroupAction::trivial_cyclic(&k, 2).expect("valid action");
    skew_group_algebra(&k, &g).expect("valid action")
}

/// `End(k[x]/(x²) ⊕ k)` over the dual numbers: the Auslander algebra of `k[x]/(x²)`.
pub fn auslander<F: Field>(f: &F) -> Algebra<F> {
    let d = dual_numbers(f);
    let r = Module::regular(&d);
    let s = r.quotient(&r.radical_submodule()).expect("radical is a submodule").0;
    r.oplus(&s).and_then(|m| m.endomorphism_algebra()).expect("endomorphism algebra")
}

/// Index of the matrix unit `e_ij` (1-based) in `M_n(k)`.
pub fn matrix_unit_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

fn matrix_element<F: Field>(f: &F, n: usize, units: &[(usize, usize)]) -> Vector<F> {
    let mut v = vec![f.zero(); n * n];
    for &(i, j) in units {
        v[matrix_unit_index(n, i, j)] = f.one();
    }
    v
}

/// `B ⊆ M₄(k)` spanned by `e11+e44, e22+e33, e21, e31, e41, e42, e43`, in this basis order.
pub fn morita_extension<F: Field>(f: &F) -> Extension<F> {
    let m4 = matrices(f, 4);
    let spans: [&[(usize, usize)]; 7] =
        [&[(1, 1), (4, 4)], &[(2, 2), (3, 3)], &[(2, 1)], &[(3, 1)], &[(4, 1)], &[(4, 2)], &[(4, 3)]];
    let basis: Vec<Vector<F>> = spans.iter().map(|s| matrix_element(f, 4, s)).collect();
    Extension::from_subalgebra_basis(&m4, &basis).expect("closed subalgebra")
}

/// The idempotent `e11 + e44` of the Morita subalgebra, in its own basis.
pub fn morita_idempotent<F: Field>(f: &F) -> Vector<F> {
    unit(f, 7, 0)
}

/// `D⁺ = span{e11+e44, e22+e33, e41} ⊆ B`, the unital hull of the corner at `e11 + e44`.
pub fn morita_inner_extension<F: Field>(b: &Extension<F>) -> Extension<F> {
    let f = b.field();
    let basis = [unit(f, 7, 0), unit(f, 7, 1), unit(f, 7, 4)];
    Extension::from_subalgebra_basis(&b.small, &basis).expect("closed subalgebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::invariants::find_isomorphism;
    use crate::linalg::Rationals;

    #[test]
    fn named_dimensions() {
        let f = Rationals;
        assert_eq!(ground(&f).dim(), 1);
        assert_eq!(dual_numbers(&f).dim(), 2);
        assert_eq!(a2(&f).dim(), 3);
        assert_eq!(kxy(&f).dim(), 4);
        assert_eq!(triangular(&f, 2).dim(), 3);
        assert_eq!(triangular(&f, 3).dim(), 6);
        assert_eq!(group_algebra_c2(&f).dim(), 2);
        assert_eq!(auslander(&f).dim(), 5);
        assert_eq!(morita_extension(&f).small.dim(), 7);
    }

    #[test]
    fn auslander_matches_its_quiver() {
        let f = Rationals;
        let a = auslander(&f);
        a.validate().unwrap();
        let q = quiver(&f, AUSLANDER);
        assert_eq!(q.dim(), 5);
        assert!(find_isomorphism(&a, &q).unwrap().is_some());
    }

    #[test]
    fn t2_is_a2() {
        let f = Rationals;
        assert!(find_isomorphism(&triangular(&f, 2), &a2(&f)).unwrap().is_some());
    }
}
