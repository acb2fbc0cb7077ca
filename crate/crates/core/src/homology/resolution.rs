//! Minimal injective resolutions by iterated envelopes.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{Field, Mat, Subspace};
use crate::module::Module;

use super::{Certificate, ExtendedNat, DEFAULT_CUTOFF};

/// Which terms count as "good" when reading off a dominant dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermTest {
    Projective,
    NuStablyProjective,
}

/// How a resolution computation stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResolutionEnd {
    /// `Ω^length = 0`: finite injective dimension `length - 1`.
    Vanished { length: usize },
    /// `Ω^{offset+period} ≅ Ω^{offset}`.
    Cycle { period: usize, offset: usize },
    Cutoff,
}

/// `0 → M → I^0 → I^1 → ⋯` with `I^n` the envelope of the cosyzygy `Ω^n` (`Ω^0 = M`).
#[derive(Clone, Debug)]
pub struct InjectiveResolution<F: Field> {
    pub module: Module<F>,
    pub terms: Vec<Module<F>>,
    /// Multiplicity of each indecomposable injective `I_c` in `I^n`.
    pub term_multiplicities: Vec<Vec<usize>>,
    /// `M → I^0`.
    pub coaugmentation: Mat<F>,
    /// `d^n: I^n → I^{n+1}`.
    pub differentials: Vec<Mat<F>>,
    pub cosyzygies: Vec<Module<F>>,
    pub end: ResolutionEnd,
}

/// `Ω^{n+1}` with the envelope of `Ω^n`, the inclusion and the projection onto the cosyzygy.
pub(crate) struct Step<F: Field> {
    pub envelope: Module<F>,
    pub mono: Mat<F>,
    pub cosyzygy: Module<F>,
    pub projection: Mat<F>,
}

pub(crate) fn step<F: Field>(m: &Module<F>) -> Result<Step<F>> {
    let (envelope, mono) = m.injective_envelope()?;
    let (cosyzygy, projection) = envelope.quotient(&Subspace::column_space(&mono))?;
    Ok(Step { envelope, mono, cosyzygy, projection })
}

/// Index `j` of an earlier cosyzygy isomorphic to `m`.
fn find_repeat<F: Field>(m: &Module<F>, earlier: &[Module<F>], dims: &[Vec<usize>]) -> Result<Option<usize>> {
    let dv = m.dimension_vector()?;
    for (j, e) in earlier.iter().enumerate() {
        if dims[j] == dv && e.is_isomorphic(m)?.is_some() {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

impl<F: Field> Module<F> {
    /// Minimal injective resolution up to `cutoff` terms, stopping early at a zero or repeated cosyzygy.
    pub fn minimal_injective_resolution(&self, cutoff: usize) -> Result<InjectiveResolution<F>> {
        let mut cosyzygies = vec![self.clone()];
        let mut dims = vec![self.dimension_vector()?];
        let mut terms = Vec::new();
        let mut mults = Vec::new();
        let mut monos: Vec<Mat<F>> = Vec::new();
        let mut projections: Vec<Mat<F>> = Vec::new();
        let mut end = ResolutionEnd::Cutoff;
        for n in 0..cutoff.max(1) {
            let cur = &cosyzygies[n];
            if cur.is_zero() {
                end = ResolutionEnd::Vanished { length: n };
                break;
            }
            mults.push(cur.socle_vector()?);
            let s = step(cur)?;
            terms.push(s.envelope);
            monos.push(s.mono);
            projections.push(s.projection);
            let repeat = if s.cosyzygy.is_zero() { None } else { find_repeat(&s.cosyzygy, &cosyzygies, &dims)? };
            dims.push(s.cosyzygy.dimension_vector()?);
            cosyzygies.push(s.cosyzygy);
            if let Some(j) = repeat {
                end = ResolutionEnd::Cycle { period: n + 1 - j, offset: j };
                break;
            }
        }
        if end == ResolutionEnd::Cutoff && cosyzygies.last().is_some_and(Module::is_zero) {
            end = ResolutionEnd::Vanished { length: cosyzygies.len() - 1 };
        }
        let differentials = (0..terms.len().saturating_sub(1))
            .map(|n| monos[n + 1].mul(&projections[n]))
            .collect();
        let coaugmentation = monos.first().cloned().unwrap_or_else(|| Mat::zeros(self.field(), 0, self.dim()));
        Ok(InjectiveResolution {
            module: self.clone(),
            terms,
            term_multiplicities: mults,
            coaugmentation,
            differentials,
            cosyzygies,
            end,
        })
    }

    /// Least `n` with `I^n` not projective.
    pub fn dominant_dimension(&self, cutoff: usize) -> Result<ExtendedNat> {
        self.dominant_dimension_with(TermTest::Projective, cutoff)
    }

    /// Least `n` with `I^n` not ν-stably projective.
    pub fn nu_dominant_dimension(&self, cutoff: usize) -> Result<ExtendedNat> {
        self.dominant_dimension_with(TermTest::NuStablyProjective, cutoff)
    }

    pub fn dominant_dimension_with(&self, test: TermTest, cutoff: usize) -> Result<ExtendedNat> {
        let a = self.algebra();
        let cd = a.class_data()?;
        if cd.self_injective {
            // ν permutes the projectives of a self-injective algebra, so both tests pass everywhere
            return Ok(ExtendedNat::infinite(Certificate::SelfInjective));
        }
        let good = |c: usize| match test {
            TermTest::Projective => cd.injective_is_projective[c],
            TermTest::NuStablyProjective => cd.injective_is_nu_stable(c),
        };
        let mut cosyzygies = vec![self.clone()];
        let mut dims = vec![self.dimension_vector()?];
        for n in 0..cutoff {
            let cur = cosyzygies[n].clone();
            if cur.is_zero() {
                return Ok(ExtendedNat::infinite(Certificate::FiniteResolution { length: n }));
            }
            let socle = cur.socle_vector()?;
            if socle.iter().enumerate().any(|(c, &m)| m > 0 && !good(c)) {
                return Ok(ExtendedNat::finite(n));
            }
            let next = step(&cur)?.cosyzygy;
            if next.is_zero() {
                return Ok(ExtendedNat::infinite(Certificate::FiniteResolution { length: n + 1 }));
            }
            if let Some(j) = find_repeat(&next, &cosyzygies, &dims)? {
                return Ok(ExtendedNat::infinite(Certificate::CosyzygyCycle { period: n + 1 - j, offset: j }));
            }
            dims.push(next.dimension_vector()?);
            cosyzygies.push(next);
        }
        Ok(ExtendedNat::AtLeast { cutoff })
    }
}

impl<F: Field> crate::algebra::Algebra<F> {
    /// `dm(A) = dm(_A A)`, memoised per cutoff.
    pub fn dominant_dimension(&self, cutoff: usize) -> Result<ExtendedNat> {
        self.memo_dimension(TermTest::Projective, cutoff)
    }

    pub fn nu_dominant_dimension(&self, cutoff: usize) -> Result<ExtendedNat> {
        self.memo_dimension(TermTest::NuStablyProjective, cutoff)
    }

    pub fn dominant_dimension_default(&self) -> Result<ExtendedNat> {
        self.dominant_dimension(DEFAULT_CUTOFF)
    }

    fn memo_dimension(&self, test: TermTest, cutoff: usize) -> Result<ExtendedNat> {
        let cd = self.class_data()?;
        let key = (test == TermTest::NuStablyProjective, cutoff);
        if let Some(v) = cd.memo.lock().expect("memo lock").get(&key) {
            return Ok(*v);
        }
        let v = Module::regular(self).dominant_dimension_with(test, cutoff)?;
        cd.memo.lock().expect("memo lock").insert(key, v);
        Ok(v)
    }
}
