mod common;

use common::*;
use domdim::homology::ExtendedNat;
use domdim::module::random::random_module;
use domdim::module::Module;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CUTOFF: usize = 8;

#[test]
fn socle_resolution_matches_engine_on_regular_modules() {
    for (name, a, raw) in small_algebras() {
        let n = compare_resolution(&a, &raw, &Module::regular(&a), CUTOFF).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(n > 0 || a.dim() == 0, "{name}");
    }
}

#[test]
fn socle_resolution_matches_engine_on_random_modules() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, a, raw) in small_algebras() {
        for _ in 0..4 {
            let m = random_module(&a, 8, &mut rng).unwrap();
            compare_resolution(&a, &raw, &m, CUTOFF).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}

#[test]
fn dominant_dimension_matches_oracle() {
    for (name, a, raw) in small_algebras() {
        let terms = socle_resolution(&raw, &raw.regular(), CUTOFF);
        let dm = a.dominant_dimension(CUTOFF).unwrap();
        match oracle_dominant_dimension(&terms) {
            Some(d) => assert_eq!(dm, ExtendedNat::finite(d), "{name}"),
            None => assert!(!dm.is_finite() || dm.value().unwrap() >= terms.len(), "{name}: {dm}"),
        }
    }
}

#[test]
fn expected_dominant_dimensions() {
    let expect = [
        ("k", None),
        ("kx2", None),
        ("a2", Some(1)),
        ("t2", Some(1)),
        ("t3", Some(1)),
        ("kc2", None),
        ("kxy", None),
        ("aus", Some(2)),
        ("a2k", Some(1)),
        ("a3", Some(1)),
        ("nakayama3", Some(2)),
        ("cyclic2", None),
        ("morita_b", Some(1)),
    ];
    for ((name, _, raw), (ename, want)) in small_algebras().into_iter().zip(expect) {
        assert_eq!(name, ename);
        let terms = socle_resolution(&raw, &raw.regular(), CUTOFF);
        assert_eq!(oracle_dominant_dimension(&terms), want, "{name}");
    }
}

#[test]
fn hom_dimensions_match_naive_intertwiners() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (name, a, _) in small_algebras() {
        for _ in 0..4 {
            let x = random_module(&a, 6, &mut rng).unwrap();
            let y = random_module(&a, 6, &mut rng).unwrap();
            let naive = hom_dim(&RawModule::from_module(&x), &RawModule::from_module(&y));
            assert_eq!(x.hom_dim(&y).unwrap(), naive, "{name}");
        }
    }
}

#[test]
fn radical_matches_trace_form() {
    for (name, a, raw) in small_algebras() {
        let layers = a.radical_layers();
        assert_eq!(a.dim() - layers[0], raw.radical().len(), "{name}");
    }
}
