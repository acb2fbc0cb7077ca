//! Ext dimensions from minimal resolutions.
//!
//! For `0 → Ω^n → P_{n-1} → Ω^{n-1} → 0` with `P_{n-1}` the projective cover,
//! `dim Ext^n(M, N) = dim Hom(Ω^n, N) - dim Hom(P_{n-1}, N) + dim Hom(Ω^{n-1}, N)`,
//! and dually along an injective coresolution of `N`.

use crate::error::Result;
use crate::linalg::Field;
use crate::module::Module;

use super::resolution::step;

impl<F: Field> Module<F> {
    /// `n`-th syzygy in a minimal projective resolution.
    pub fn nth_syzygy(&self, n: usize) -> Result<Module<F>> {
        let mut cur = self.clone();
        for _ in 0..n {
            if cur.is_zero() {
                break;
            }
            cur = cur.syzygy()?.0;
        }
        Ok(cur)
    }

    /// `n`-th cosyzygy in a minimal injective resolution.
    pub fn nth_cosyzygy(&self, n: usize) -> Result<Module<F>> {
        let mut cur = self.clone();
        for _ in 0..n {
            if cur.is_zero() {
                break;
            }
            cur = step(&cur)?.cosyzygy;
        }
        Ok(cur)
    }

    /// `dim Ext^degree_A(self, n)` via a projective resolution of `self`.
    pub fn ext_dimension(&self, n: &Module<F>, degree: usize) -> Result<usize> {
        self.algebra().ensure_same(n.algebra())?;
        if degree == 0 {
            return self.hom_dim(n);
        }
        let prev = self.nth_syzygy(degree - 1)?;
        if prev.is_zero() {
            return Ok(0);
        }
        let cur = prev.syzygy()?.0;
        let pd = self.algebra().projective_data()?;
        let top = prev.top_vector()?;
        let cover_hom: usize = top
            .iter()
            .zip(&pd.idempotents)
            .map(|(&t, e)| t * n.act(e).rank())
            .sum();
        Ok(cur.hom_dim(n)? + prev.hom_dim(n)? - cover_hom)
    }

    /// `dim Ext^degree_A(self, n)` via an injective coresolution of `n`.
    pub fn ext_dimension_injective(&self, n: &Module<F>, degree: usize) -> Result<usize> {
        self.algebra().ensure_same(n.algebra())?;
        if degree == 0 {
            return self.hom_dim(n);
        }
        let prev = n.nth_cosyzygy(degree - 1)?;
        if prev.is_zero() {
            return Ok(0);
        }
        let cur = step(&prev)?.cosyzygy;
        let pd = self.algebra().projective_data()?;
        let soc = prev.socle_vector()?;
        // Hom(M, I_c) ≅ D(e_c M)
        let envelope_hom: usize = soc
            .iter()
            .zip(&pd.idempotents)
            .map(|(&t, e)| t * self.act(e).rank())
            .sum();
        Ok(self.hom_dim(&cur)? + self.hom_dim(&prev)? - envelope_hom)
    }
}
