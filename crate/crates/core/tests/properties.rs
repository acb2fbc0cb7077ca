mod common;

use common::{hom_dim, RawModule};
use domdim::algebra::{Algebra, QuiverPresentation};
use domdim::constructions::{named, tensor_algebra};
use domdim::homology::{Certificate, ExtendedNat};
use domdim::io::AlgebraJson;
use domdim::linalg::{Mat, PrimeField, Rationals};
use domdim::module::random::random_module;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn algebras() -> Vec<Algebra<Rationals>> {
    let f = Rationals;
    vec![
        named::dual_numbers(&f),
        named::a2(&f),
        named::triangular(&f, 2),
        named::auslander(&f),
        named::kxy(&f),
        named::group_algebra_c2(&f),
        named::morita_extension(&f).small,
    ]
}

fn extended() -> impl Strategy<Value = ExtendedNat> {
    prop_oneof![
        (0usize..6).prop_map(ExtendedNat::finite),
        Just(ExtendedNat::infinite(Certificate::SelfInjective)),
        (0usize..6).prop_map(|c| ExtendedNat::AtLeast { cutoff: c }),
    ]
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn min_is_a_lower_bound(a in extended(), b in extended()) {
        let m = a.min(&b);
        prop_assert_eq!(m, b.min(&a));
        prop_assert_ne!(m.le(&a), Some(false));
        prop_assert_ne!(m.le(&b), Some(false));
        if a.is_certified() && b.is_certified() {
            prop_assert!(m.is_certified());
            prop_assert!(m == a || m == b);
        }
    }

    #[test]
    fn extended_json_round_trips(a in extended()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExtendedNat>(&s).unwrap(), a);
    }

    #[test]
    fn rank_nullity_over_q(rows in small_matrix()) {
        let f = Rationals;
        let m = Mat::from_i64(&f, &rows);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn rank_nullity_over_f5(rows in small_matrix()) {
        let f = PrimeField::new(5).unwrap();
        let m = Mat::from_i64(&f, &rows);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert!(m.rank() <= Mat::from_i64(&Rationals, &rows).rank());
    }

    #[test]
    fn inverse_is_two_sided(rows in small_matrix()) {
        let f = Rationals;
        let m = Mat::from_i64(&f, &rows);
        if let Some(inv) = m.inverse() {
            prop_assert!(m.mul(&inv).is_identity());
            prop_assert!(inv.mul(&m).is_identity());
        } else {
            prop_assert!(!m.is_square() || m.rank() < m.rows());
        }
    }

    #[test]
    fn hom_dim_matches_naive_intertwiners(seed in any::<u64>(), which in 0usize..7) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_module(a, 7, &mut rng).unwrap();
        let y = random_module(a, 7, &mut rng).unwrap();
        prop_assert_eq!(x.hom_dim(&y).unwrap(), hom_dim(&RawModule::from_module(&x), &RawModule::from_module(&y)));
    }

    #[test]
    fn ext_is_balanced(seed in any::<u64>(), which in 0usize..7, degree in 0usize..3) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_module(a, 6, &mut rng).unwrap();
        let y = random_module(a, 6, &mut rng).unwrap();
        prop_assert_eq!(x.ext_dimension(&y, degree).unwrap(), x.ext_dimension_injective(&y, degree).unwrap());
    }

    #[test]
    fn random_modules_are_modules(seed in any::<u64>(), which in 0usize..7, max_dim in 1usize..12) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(a, max_dim, &mut rng).unwrap();
        prop_assert!(m.dim() >= 1);
        m.validate().unwrap();
        // the double dual is the module itself
        prop_assert!(m.dual().dual().is_isomorphic(&m).unwrap().is_some());
    }

    #[test]
    fn nakayama_sends_projectives_to_injectives(which in 0usize..7) {
        let a = &algebras()[which];
        let pd = a.projective_data().unwrap();
        for (p, e) in pd.modules.iter().zip(&pd.idempotents) {
            // ν(A e) = D(e A)
            let nu = p.nakayama().unwrap();
            prop_assert_eq!(nu.dim(), a.left_mat(e).rank());
            prop_assert!(nu.is_injective().unwrap());
            prop_assert!(nu.decompose().unwrap().is_indecomposable());
        }
    }

    #[test]
    fn cosyzygy_dims_add_up(seed in any::<u64>(), which in 0usize..7) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(a, 8, &mut rng).unwrap();
        let r = m.minimal_injective_resolution(4).unwrap();
        for (n, term) in r.terms.iter().enumerate() {
            prop_assert_eq!(term.dim(), r.cosyzygies[n].dim() + r.cosyzygies[n + 1].dim());
            prop_assert!(term.is_injective().unwrap());
        }
        for pair in r.differentials.windows(2) {
            prop_assert!(pair[1].mul(&pair[0]).is_zero());
        }
    }
}

#[test]
fn tensor_dimensions_multiply() {
    let list = algebras();
    for a in &list[..4] {
        for b in &list[..4] {
            let t = tensor_algebra(a, b).unwrap();
            assert_eq!(t.algebra.dim(), a.dim() * b.dim());
            t.algebra.validate().unwrap();
            // pure tensors multiply componentwise
            let (x, y) = (a.basis_vector(a.dim() - 1), b.basis_vector(b.dim() - 1));
            let lhs = t.algebra.mul(&t.pure(&x, &b.one()), &t.pure(&a.one(), &y));
            assert_eq!(lhs, t.pure(&x, &y));
        }
    }
}

#[test]
fn algebra_json_round_trips() {
    for a in algebras() {
        let j = AlgebraJson::from_algebra(&a);
        let text = serde_json::to_string(&j).unwrap();
        let back = serde_json::from_str::<AlgebraJson>(&text).unwrap().to_algebra(&Rationals).unwrap();
        assert_eq!(back.structure(), a.structure());
        assert_eq!(back.unit(), a.unit());
    }
}

#[test]
fn quiver_text_round_trips() {
    for src in [named::A2, named::AUSLANDER, named::KXY, named::DUAL_NUMBERS] {
        let q = QuiverPresentation::parse(src).unwrap();
        let again = QuiverPresentation::parse(&q.to_text()).unwrap();
        assert_eq!(q.algebra(&Rationals).unwrap().structure(), again.algebra(&Rationals).unwrap().structure());
    }
}
