//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use common::{compare_resolution, oracle_dominant_dimension, socle_resolution, small_algebras, RawAlgebra};
use domdim::algebra::{fingerprint_of, Algebra};
use domdim::constructions::{
    ideal_bimodule, named, skew_group_extension, tensor_algebra, tensor_extension, triangular_extension,
    trivial_extension, GroupAction,
};
use domdim::frobenius::{
    canonical_maps, check_facts, is_frobenius_bimodule, is_frobenius_extension, left_split_equality, split_type,
    theorem_1_1_check, theorem_1_2_check, Extension,
};
use domdim::homology::{Certificate, ExtendedNat, DEFAULT_CUTOFF};
use domdim::linalg::{Mat, Rationals};
use domdim::module::random::random_module;
use domdim::module::{Bimodule, Module};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Alg = Algebra<Rationals>;
type Check = Result<String, String>;

const F: Rationals = Rationals;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

/// The Auslander algebra of `k[x]/(x²)` from its quiver, so the oracle can read its vertex idempotents.
fn auslander() -> Alg {
    common::quiver(named::AUSLANDER)
}

/// `(name, bimodule, extension it comes from)`.
fn frobenius_bimodules() -> Vec<(String, Bimodule<Rationals>, Option<Extension<Rationals>>)> {
    let mut out = Vec::new();
    for (name, a) in [("kx2", named::dual_numbers(&F)), ("a2", named::a2(&F)), ("aus", auslander())] {
        out.push((format!("regular {name}"), Bimodule::regular(&a), Some(Extension::identity(&a))));
    }
    let cs = [("kx2", named::dual_numbers(&F)), ("kc2", named::group_algebra_c2(&F)), ("kxy", named::kxy(&F))];
    for (an, a) in [("a2", named::a2(&F)), ("aus", auslander())] {
        for (cn, c) in &cs {
            if an == "aus" && *cn != "kx2" {
                continue;
            }
            let (ext, _) = tensor_extension(&a, c).expect("tensor extension");
            out.push((format!("{an} in {an}(x){cn}"), ext.bimodule(), Some(ext)));
        }
    }
    let kk = named::semisimple(&F, 2);
    let swap = GroupAction::cyclic(&kk, 2, &Mat::from_i64(&F, &[vec![0, 1], vec![1, 0]])).expect("swap");
    let kx2 = named::dual_numbers(&F);
    let sign = GroupAction::cyclic(&kx2, 2, &Mat::from_i64(&F, &[vec![1, 0], vec![0, -1]])).expect("sign");
    let aus = auslander();
    let trivial = GroupAction::trivial_cyclic(&aus, 2).expect("trivial action");
    for (name, a, g) in [("kk swap", &kk, &swap), ("kx2 sign", &kx2, &sign), ("aus trivial", &aus, &trivial)] {
        let ext = skew_group_extension(a, g).expect("skew extension");
        out.push((format!("{name} skew"), ext.bimodule(), Some(ext)));
    }
    let a2k = common::quiver("vertex 1 2 3; arrow a: 1 -> 2;");
    let e3 = a2k.basis_vector(a2k.labels().iter().position(|l| l == "e3").expect("e3"));
    let m = ideal_bimodule(&a2k, &e3).expect("central ideal");
    let (_, ext) = trivial_extension(&a2k, &m).expect("trivial extension");
    out.push(("a2k trivial extension by Ae3".into(), ext.bimodule(), Some(ext)));
    let morita = named::morita_extension(&F);
    out.push(("morita".into(), morita.bimodule(), Some(morita)));
    out
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let ext = named::morita_extension(&F);
    let (b, a) = (&ext.small, &ext.big);
    ensure(b.dim() == 7 && a.dim() == 16, "dimensions")?;
    let dm_b = ok(b.dominant_dimension(DEFAULT_CUTOFF))?;
    let dm_a = ok(a.dominant_dimension(DEFAULT_CUTOFF))?;
    ensure(dm_b == ExtendedNat::finite(1), format!("dm(B) = {dm_b}"))?;
    ensure(dm_a == ExtendedNat::infinite(Certificate::SelfInjective), format!("dm(M4) = {dm_a}"))?;
    ensure(ok(is_frobenius_extension(&ext))?.holds, "B in M4 is not Frobenius")?;
    let fb = ok(b.frobenius_part())?.ok_or("B has no Frobenius part")?;
    ensure(fb.dim() == 2, format!("Frobenius part of B has dim {}", fb.dim()))?;
    let fp = |x: &Alg| ok(fingerprint_of(Some(x)));
    ensure(fp(&fb)? == fp(&named::dual_numbers(&F))?, "Frobenius part of B is not k[x]/(x^2)")?;
    let fa = ok(a.frobenius_part())?.ok_or("M4 has no Frobenius part")?;
    ensure(fp(&fa)? == fp(&named::ground(&F))?, "Frobenius part of M4 is not Morita equivalent to k")?;
    // D = k(e11+e44) + k e41, reached as its unital hull inside B and as the canonical map
    let hull = ext.compose(&named::morita_inner_extension(&ext)).map_err(|e| e.to_string())?;
    ensure(ok(is_frobenius_extension(&hull))?.holds, "D+ in M4 is not Frobenius")?;
    let (_, psi) = ok(canonical_maps(&ext.bimodule()))?;
    let psi = psi.ok_or("no canonical map")?;
    ensure(ok(is_frobenius_extension(&psi))?.holds, "End(Y) -> End(Hom(M, Y)) is not Frobenius")?;
    ensure(fp(&psi.small)? == fp(&fb)?, "canonical map source is not the Frobenius part of B")?;
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("dm(B) = {dm_b}, dm(M4) = {dm_a}, D+ and End-map Frobenius, {t:.2?}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let algs: Vec<(&str, Alg)> = vec![
        ("k", named::ground(&F)),
        ("kx2", named::dual_numbers(&F)),
        ("a2", named::a2(&F)),
        ("t2", named::triangular(&F, 2)),
        ("aus", auslander()),
    ];
    // the oracle certifies dm(Aus) = 2 independently
    let raw = RawAlgebra::by_labels(&algs[4].1, &["e1", "e2"]);
    let oracle = oracle_dominant_dimension(&socle_resolution(&raw, &raw.regular(), 6));
    ensure(oracle == Some(2), format!("oracle dm(Aus) = {oracle:?}"))?;
    ensure(ok(algs[4].1.dominant_dimension(DEFAULT_CUTOFF))? == ExtendedNat::finite(2), "engine dm(Aus)")?;
    let dms: Vec<ExtendedNat> = algs.iter().map(|(_, a)| a.dominant_dimension(DEFAULT_CUTOFF)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let mut pairs = 0;
    for i in 0..algs.len() {
        for j in i..algs.len() {
            let t = ok(tensor_algebra(&algs[i].1, &algs[j].1))?;
            let dt = ok(t.algebra.dominant_dimension(DEFAULT_CUTOFF))?;
            let want = dms[i].min(&dms[j]);
            ensure(dt.is_certified(), format!("{} (x) {}: {dt} not certified", algs[i].0, algs[j].0))?;
            ensure(dt.same_value(&want) == Some(true), format!("{} (x) {}: {dt} vs min {want}", algs[i].0, algs[j].0))?;
            if want.is_infinite() {
                ensure(dt.is_infinite(), "infinite case without certificate")?;
            }
            pairs += 1;
        }
    }
    ensure(pairs >= 9, "grid too small")?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{pairs} pairs exact, oracle dm(Aus) = 2, {t:.2?}"))
}

fn criterion_3() -> Check {
    let list = frobenius_bimodules();
    ensure(list.len() >= 8, "fewer than 8 bimodules")?;
    let mut left_split = 0;
    for (name, m, ext) in &list {
        ensure(ok(is_frobenius_bimodule(m))?.holds, format!("{name}: not Frobenius"))?;
        let r = ok(theorem_1_2_check(m, DEFAULT_CUTOFF))?;
        ensure(r.inequalities.len() == 4, "expected four inequalities")?;
        ensure(r.status.is_ok(), format!("{name}: {:?}", r.inequalities))?;
        if let Some(ext) = ext {
            if ok(split_type(ext))?.0 {
                let eq = ok(left_split_equality(ext, DEFAULT_CUTOFF))?;
                ensure(eq.status.is_ok(), format!("{name}: dm(A) = {} vs dm(B) = {}", eq.lhs, eq.rhs))?;
                left_split += 1;
            }
        }
    }
    ensure(left_split > 0, "no left-split instance")?;
    Ok(format!("{} bimodules, {left_split} left-split equalities", list.len()))
}

fn criterion_4() -> Check {
    let mut faithful = 0;
    let mut vacuous = 0;
    for (name, m, _) in frobenius_bimodules() {
        if !(m.is_left_faithful() && m.is_right_faithful()) {
            continue;
        }
        faithful += 1;
        let r = ok(theorem_1_1_check(&m))?;
        ensure(r.status.is_ok(), format!("{name}: {:?}", r.maps))?;
        for map in &r.maps {
            if map.status == domdim::frobenius::CheckStatus::VacuousPass {
                vacuous += 1;
                // vacuous only where stp really is empty
                ensure(r.stp_dims.contains(&0), format!("{name}: vacuous with nonzero stp"))?;
            } else {
                ensure(map.injective && map.frobenius && map.left_split && map.right_split, format!("{name}: {map:?}"))?;
            }
        }
    }
    ensure(faithful >= 8, format!("only {faithful} faithful bimodules"))?;
    Ok(format!("{faithful} faithful bimodules, {vacuous} vacuous maps"))
}

fn criterion_5() -> Check {
    let algs: Vec<(&str, Alg)> = vec![
        ("k", named::ground(&F)),
        ("kx2", named::dual_numbers(&F)),
        ("a2", named::a2(&F)),
        ("t2", named::triangular(&F, 2)),
        ("aus", auslander()),
        ("kc2", named::group_algebra_c2(&F)),
    ];
    let mut pairs = 0;
    let mut free = 0;
    for i in 0..algs.len() {
        for j in i..algs.len() {
            let (a, b) = (&algs[i].1, &algs[j].1);
            let t = ok(tensor_algebra(a, b))?;
            let lhs = ok(t.algebra.frobenius_part())?;
            let rhs = match (ok(a.frobenius_part())?, ok(b.frobenius_part())?) {
                (Some(x), Some(y)) => Some(ok(tensor_algebra(&x, &y))?.algebra),
                _ => None,
            };
            if rhs.is_none() {
                free += 1;
                ensure(ok(t.algebra.is_frobenius_free())?, format!("{} (x) {} should be Frobenius-free", algs[i].0, algs[j].0))?;
            }
            let (fl, fr) = (ok(fingerprint_of(lhs.as_ref()))?, ok(fingerprint_of(rhs.as_ref()))?);
            ensure(fl == fr, format!("{} (x) {}: {fl:?} vs {fr:?}", algs[i].0, algs[j].0))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, {free} Frobenius-free"))
}

fn criterion_6() -> Check {
    const SAMPLES: usize = 20;
    const MAX_DIM: usize = 12;
    const DEGREE: usize = 3;
    let mut total = 0;
    let list = frobenius_bimodules();
    for (k, (name, m, _)) in list.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + k as u64);
        let xs: Vec<Module<Rationals>> =
            (0..SAMPLES).map(|_| random_module(m.right_algebra(), MAX_DIM, &mut rng)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let ys: Vec<Module<Rationals>> =
            (0..SAMPLES).map(|_| random_module(m.left_algebra(), MAX_DIM, &mut rng)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        ensure(xs.iter().chain(&ys).all(|x| x.dim() <= MAX_DIM), "sample too large")?;
        let report = ok(check_facts(m, &xs, &ys, DEGREE))?;
        if let Some(bad) = report.outcomes.iter().find(|o| !o.holds) {
            return Err(format!("{name}: {} on sample {} ({})", bad.fact, bad.sample, bad.detail));
        }
        total += report.passed;
    }
    Ok(format!("{} bimodules x {SAMPLES} samples, {total} identities, Ext degrees 0..={DEGREE}", list.len()))
}

fn criterion_7() -> Check {
    let t2 = named::triangular(&F, 2);
    let t3 = named::triangular(&F, 3);
    let (d2, d3) = (ok(t2.dominant_dimension(DEFAULT_CUTOFF))?, ok(t3.dominant_dimension(DEFAULT_CUTOFF))?);
    ensure(d2 == ExtendedNat::finite(1) && d3 == ExtendedNat::finite(1), format!("dm(T2) = {d2}, dm(T3) = {d3}"))?;
    let ext = ok(triangular_extension(&named::ground(&F), 2))?;
    ensure(ext.big.dim() == 4 && ext.small.dim() == 3, "T2 in M2 dimensions")?;
    ensure(ok(ext.bimodule_both().is_projective_both_sides())?, "M2 not projective over T2 on both sides")?;
    let dm_big = ok(ext.big.dominant_dimension(DEFAULT_CUTOFF))?;
    let dm_small = ok(ext.small.dominant_dimension(DEFAULT_CUTOFF))?;
    ensure(dm_small == ExtendedNat::finite(1) && dm_big.is_infinite(), format!("dm(T2) = {dm_small}, dm(M2) = {dm_big}"))?;
    ensure(ok(split_type(&ext))? == (false, false), "T2 in M2 unexpectedly split")?;
    Ok(format!("dm(T2) = dm(T3) = 1 < dm(M2) = {dm_big}, not split"))
}

fn criterion_8() -> Check {
    let mut algebras = 0;
    let mut terms = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (name, a, raw) in small_algebras().into_iter().filter(|(_, a, _)| a.dim() <= 6) {
        algebras += 1;
        terms += compare_resolution(&a, &raw, &Module::regular(&a), 8).map_err(|e| format!("{name}: {e}"))?;
        for _ in 0..3 {
            let m = ok(random_module(&a, 8, &mut rng))?;
            terms += compare_resolution(&a, &raw, &m, 6).map_err(|e| format!("{name}: {e}"))?;
        }
        let oracle = socle_resolution(&raw, &raw.regular(), 8);
        let dm = ok(a.dominant_dimension(DEFAULT_CUTOFF))?;
        match oracle_dominant_dimension(&oracle) {
            Some(d) => ensure(dm == ExtendedNat::finite(d), format!("{name}: dm {dm} vs oracle {d}"))?,
            None => ensure(dm.is_infinite(), format!("{name}: dm {dm}, oracle finds no non-projective term"))?,
        }
    }
    Ok(format!("{algebras} algebras, {terms} terms matched"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("Morita example", criterion_1),
        ("tensor product rule for dm", criterion_2),
        ("dm inequalities for Frobenius bimodules", criterion_3),
        ("canonical maps of Frobenius parts", criterion_4),
        ("Frobenius part of a tensor product", criterion_5),
        ("bimodule identities on random modules", criterion_6),
        ("triangular matrix algebras", criterion_7),
        ("socle-series oracle", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {}: pass  {title}: {detail} [{:.1?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {why} [{:.1?}]", i + 1, start.elapsed());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
