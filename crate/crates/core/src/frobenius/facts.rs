//! Functorial identities of a Frobenius bimodule `_B M_A` with `N = *M`,
//! checked on sample modules.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::Field;
use crate::module::{Bimodule, Module};

/// One identity on one sample, or on the pair `(xs[i], ys[i])` for the two-variable identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactOutcome {
    pub fact: String,
    pub sample: usize,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactsReport {
    pub outcomes: Vec<FactOutcome>,
    pub passed: usize,
    pub failed: usize,
}

impl FactsReport {
    fn new(outcomes: Vec<FactOutcome>) -> Self {
        let passed = outcomes.iter().filter(|o| o.holds).count();
        let failed = outcomes.len() - passed;
        FactsReport { outcomes, passed, failed }
    }

    pub fn all_hold(&self) -> bool {
        self.failed == 0
    }
}

fn outcome(fact: &str, sample: usize, holds: bool, detail: String) -> FactOutcome {
    FactOutcome { fact: fact.into(), sample, holds, detail }
}

fn iso<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<bool> {
    Ok(x.is_isomorphic(y)?.is_some_and(|f| x.is_hom_to(y, &f) && f.is_invertible()))
}

/// The four identities on the `A`-modules `xs` and `B`-modules `ys`; the two-variable ones
/// (adjunction, Ext) run on index-aligned pairs for degrees `0..=max_degree`.
pub fn check_facts<F: Field>(
    m: &Bimodule<F>,
    xs: &[Module<F>],
    ys: &[Module<F>],
    max_degree: usize,
) -> Result<FactsReport> {
    let n = m.left_dual()?;
    let mx: Vec<Module<F>> = xs.iter().map(|x| m.tensor(x)).collect::<Result<_>>()?;
    let ny: Vec<Module<F>> = ys.iter().map(|y| n.tensor(y)).collect::<Result<_>>()?;
    let hom_my: Vec<Module<F>> = ys.iter().map(|y| m.hom_module(y)).collect::<Result<_>>()?;
    let hom_nx: Vec<Module<F>> = xs.iter().map(|x| n.hom_module(x)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (s, x) in xs.iter().enumerate() {
        // (1) M ⊗_A X ≅ Hom_A(N, X)
        let (l, r) = (&mx[s], &hom_nx[s]);
        out.push(outcome("tensor_is_hom", s, iso(l, r)?, format!("dims {} {}", l.dim(), r.dim())));
        // (2) projective or injective X stays so
        let (p, i) = (x.is_projective()?, x.is_injective()?);
        let ok = (!p || l.is_projective()?) && (!i || l.is_injective()?);
        out.push(outcome("transport", s, ok, format!("projective {p} injective {i}")));
        // (4) ν_B(M ⊗ X) ≅ M ⊗ ν_A X
        let lhs = l.nakayama()?;
        let rhs = m.tensor(&x.nakayama()?)?;
        out.push(outcome("nakayama_tensor", s, iso(&lhs, &rhs)?, format!("dims {} {}", lhs.dim(), rhs.dim())));
    }
    for (s, y) in ys.iter().enumerate() {
        // (1) N ⊗_B Y ≅ Hom_B(M, Y)
        let (l, r) = (&ny[s], &hom_my[s]);
        out.push(outcome("hom_is_tensor", s, iso(l, r)?, format!("dims {} {}", l.dim(), r.dim())));
        let (p, i) = (y.is_projective()?, y.is_injective()?);
        let ok = (!p || l.is_projective()?) && (!i || l.is_injective()?);
        out.push(outcome("transport_dual", s, ok, format!("projective {p} injective {i}")));
        // (4) ν_A Hom_B(M, Y) ≅ Hom_B(M, ν_B Y)
        let lhs = r.nakayama()?;
        let rhs = m.hom_module(&y.nakayama()?)?;
        out.push(outcome("nakayama_hom", s, iso(&lhs, &rhs)?, format!("dims {} {}", lhs.dim(), rhs.dim())));
    }
    for (s, (x, y)) in xs.iter().zip(ys).enumerate() {
        // Hom_B(M ⊗ X, Y) ≅ Hom_A(X, Hom_B(M, Y))
        let (a, b) = (mx[s].hom_dim(y)?, x.hom_dim(&hom_my[s])?);
        out.push(outcome("adjunction", s, a == b, format!("{a} vs {b}")));
        for d in 0..=max_degree {
            // (3) Ext_B(Y, M ⊗ X) = Ext_A(Hom_B(M, Y), X)
            let (l, r) = (y.ext_dimension(&mx[s], d)?, hom_my[s].ext_dimension(x, d)?);
            out.push(outcome("ext_hom", s, l == r, format!("degree {d}: {l} vs {r}")));
            // Ext_A(X, N ⊗ Y) = Ext_B(Hom_A(N, X), Y)
            let (l, r) = (x.ext_dimension(&ny[s], d)?, hom_nx[s].ext_dimension(y, d)?);
            out.push(outcome("ext_hom_dual", s, l == r, format!("degree {d}: {l} vs {r}")));
            // (3') Ext_B(M ⊗ X, Y) = Ext_A(X, N ⊗ Y)
            let (l, r) = (mx[s].ext_dimension(y, d)?, x.ext_dimension(&ny[s], d)?);
            out.push(outcome("ext_tensor", s, l == r, format!("degree {d}: {l} vs {r}")));
            // Ext_A(N ⊗ Y, X) = Ext_B(Y, M ⊗ X)
            let (l, r) = (ny[s].ext_dimension(x, d)?, y.ext_dimension(&mx[s], d)?);
            out.push(outcome("ext_tensor_dual", s, l == r, format!("degree {d}: {l} vs {r}")));
        }
    }
    Ok(FactsReport::new(out))
}
