//! Sequential (one worker) against the default rayon pool on the hot paths:
//! elimination, intertwiner spaces and full dominant dimension computations.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use domdim::constructions::{named, tensor_algebra};
use domdim::linalg::{Field, Mat, PrimeField, Rationals};
use domdim::module::random::random_module;
use domdim::module::Module;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("pool");
    let all = rayon::ThreadPoolBuilder::new().build().expect("pool");
    vec![("sequential", one), ("parallel", all)]
}

/// Dense random matrices over `F_101`: rational ones of this size are dominated by coefficient growth.
fn random_matrix(n: usize, seed: u64) -> Mat<PrimeField> {
    let f = PrimeField::new(101).expect("prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Mat::from_fn(&f, n, n + 8, |_, _| f.from_i64(rng.gen_range(0..101)))
}

fn elimination(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    g.sample_size(10);
    for n in [128, 384] {
        let m = random_matrix(n, n as u64);
        for (name, pool) in pools() {
            g.bench_with_input(BenchmarkId::new(name, n), &m, |b, m| b.iter(|| pool.install(|| black_box(m.rank()))));
        }
    }
    g.finish();
}

fn hom_spaces(c: &mut Criterion) {
    let f = Rationals;
    let t = tensor_algebra(&named::auslander(&f), &named::auslander(&f)).expect("tensor").algebra;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let x = random_module(&t, 24, &mut rng).expect("module");
    let reg = Module::regular(&t);
    let mut g = c.benchmark_group("hom_space");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(name, |b| b.iter(|| pool.install(|| black_box(x.hom_dim(&reg).expect("hom")))));
    }
    g.finish();
}

fn dominant_dimensions(c: &mut Criterion) {
    let f = Rationals;
    let mut g = c.benchmark_group("dominant_dimension");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new(name, "aus(x)a2"), |b| {
            b.iter(|| {
                pool.install(|| {
                    // rebuilt each time so cached projectives do not carry over
                    let t = tensor_algebra(&named::auslander(&f), &named::a2(&f)).expect("tensor").algebra;
                    black_box(t.dominant_dimension(20).expect("dm"))
                })
            })
        });
        g.bench_function(BenchmarkId::new(name, "morita"), |b| {
            b.iter(|| {
                pool.install(|| {
                    let ext = named::morita_extension(&f);
                    black_box(ext.small.nu_dominant_dimension(20).expect("dm"))
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, elimination, hom_spaces, dominant_dimensions);
criterion_main!(benches);
