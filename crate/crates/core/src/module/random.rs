//! Seeded random modules: quotients of small projectives by random cyclic
//! submodules, optionally dualized.

use rand::Rng;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::linalg::{Field, Subspace};

use super::module::Module;

const ATTEMPTS: usize = 64;

/// Submodule generated by `gens`.
pub fn generated_submodule<F: Field>(m: &Module<F>, gens: &[Vec<F::Elem>]) -> Subspace<F> {
    let mut s = Subspace::zero(m.field(), m.dim());
    for g in gens {
        for a in m.action() {
            s.insert(&a.mul_vec(g));
        }
    }
    s
}

/// A random nonzero module of dimension at most `max_dim`.
///
/// Falls back to a simple module if no attempt lands in range.
pub fn random_module<F: Field, R: Rng + ?Sized>(a: &Algebra<F>, max_dim: usize, rng: &mut R) -> Result<Module<F>> {
    let pd = a.projective_data()?;
    let n = pd.num_classes();
    for _ in 0..ATTEMPTS {
        let summands = rng.gen_range(1..=3);
        let parts: Vec<Module<F>> = (0..summands).map(|_| pd.modules[rng.gen_range(0..n)].clone()).collect();
        let p = Module::direct_sum(a, &parts);
        let gens: Vec<Vec<F::Elem>> = (0..rng.gen_range(0..=2))
            .map(|_| (0..p.dim()).map(|_| a.field().sample(rng, 2)).collect())
            .collect();
        let sub = generated_submodule(&p, &gens);
        let q = if rng.gen_bool(0.5) { p.quotient(&sub)?.0 } else if sub.dim() > 0 { p.submodule(&sub)?.0 } else { p };
        if q.is_zero() || q.dim() > max_dim {
            continue;
        }
        // duals of modules over A^op give A-modules with different shapes
        if rng.gen_bool(0.3) {
            let r = random_module(&a.opposite(), max_dim, rng)?;
            return Ok(r.dual());
        }
        return Ok(q);
    }
    let r = Module::regular(a);
    let top = r.quotient(&r.radical_submodule())?.0;
    Ok(top.decompose()?.summands[0].summand.clone())
}
