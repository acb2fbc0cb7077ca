//! Jacobson radical.
//!
//! Characteristic 0: the radical is the kernel of the trace form
//! `(a, b) ↦ tr L(ab)`. Characteristic p: the Cohen–Ivanyos–Wales refinement
//! with the functionals `g_i(a) = tr(L̃(a)^{p^i}) / p^i mod p` on integer lifts.
//! Quiver algebras carry their arrow ideal, seeded at construction.

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};

use super::structure::Algebra;

impl<F: Field> Algebra<F> {
    /// The Jacobson radical as a subspace of the algebra.
    pub fn radical(&self) -> &Subspace<F> {
        self.0.cache.radical.get_or_init(|| compute_radical(self).expect("prime characteristic handled"))
    }

    pub fn try_radical(&self) -> Result<Subspace<F>> {
        if let Some(r) = self.0.cache.radical.get() {
            return Ok(r.clone());
        }
        let r = compute_radical(self)?;
        let _ = self.0.cache.radical.set(r.clone());
        Ok(r)
    }

    /// `rad^k`, the span of all `k`-fold products of radical elements.
    pub fn radical_power(&self, k: usize) -> Subspace<F> {
        let rad = self.radical();
        if k == 0 {
            return Subspace::full(self.field(), self.dim());
        }
        let mut cur = rad.clone();
        for _ in 1..k {
            if cur.dim() == 0 {
                break;
            }
            let mut next = Subspace::zero(self.field(), self.dim());
            for x in cur.basis() {
                for r in rad.basis() {
                    next.insert(&self.mul(x, r));
                }
            }
            cur = next;
        }
        cur
    }

    /// Dimensions of `rad^k / rad^{k+1}` for `k = 0, 1, ...` until zero.
    pub fn radical_layers(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut k = 1;
        loop {
            let d = self.radical_power(k).dim();
            dims.push(d);
            if d == 0 || k > self.dim() {
                break;
            }
            k += 1;
        }
        dims.windows(2).map(|w| w[0] - w[1]).filter(|&d| d > 0).collect()
    }

    /// Least `m` with `rad^m = 0`.
    pub fn loewy_length(&self) -> usize {
        (0..=self.dim()).find(|&k| self.radical_power(k).dim() == 0).unwrap_or(self.dim() + 1)
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().dim() == 0
    }
}

fn compute_radical<F: Field>(a: &Algebra<F>) -> Result<Subspace<F>> {
    let p = a.field().characteristic();
    if p == 0 {
        Ok(trace_form_radical(a))
    } else {
        modular_radical(a, p)
    }
}

fn trace_form_radical<F: Field>(a: &Algebra<F>) -> Subspace<F> {
    let f = a.field();
    let n = a.dim();
    let left = a.left_basis_mats();
    let tau: Vec<F::Elem> = left.iter().map(Mat::trace).collect();
    // G_ij = tr L(b_i b_j) = Σ_k c_ij^k τ_k
    let g = Mat::from_fn(f, n, n, |i, j| {
        let mut acc = f.zero();
        for (k, t) in tau.iter().enumerate() {
            f.add_mul_assign(&mut acc, &left[i][(k, j)], t);
        }
        acc
    });
    Subspace::kernel(&g)
}

/// `tr(M^e) mod m` for an integer matrix with entries already reduced mod `m`.
fn trace_of_power(m: &[Vec<u128>], e: u64, modulus: u128) -> u128 {
    let n = m.len();
    let mul = |x: &Vec<Vec<u128>>, y: &Vec<Vec<u128>>| -> Vec<Vec<u128>> {
        let mut out = vec![vec![0u128; n]; n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i][k];
                if xik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i][j] = (out[i][j] + xik * y[k][j]) % modulus;
                }
            }
        }
        out
    };
    let mut acc: Vec<Vec<u128>> = (0..n).map(|i| (0..n).map(|j| u128::from(i == j)).collect()).collect();
    let mut base = m.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    (0..n).fold(0, |s, i| (s + acc[i][i]) % modulus)
}

fn modular_radical<F: Field>(a: &Algebra<F>, p: u64) -> Result<Subspace<F>> {
    let f = a.field();
    let n = a.dim();
    // l = floor(log_p n)
    let mut l = 0u32;
    while (p as u128).pow(l + 1) <= n as u128 {
        l += 1;
    }
    let mut current = Subspace::full(f, n);
    for i in 0..=l {
        if current.dim() == 0 {
            break;
        }
        let pi = (p as u128).pow(i);
        let modulus = pi * p as u128;
        // modulus^2 * n must fit in u128
        if modulus.checked_mul(modulus).and_then(|m| m.checked_mul(n as u128)).is_none() {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        let basis = current.basis().to_vec();
        let mut rows: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
        for j in 0..n {
            let bj = a.basis_vector(j);
            let row: Vec<F::Elem> = basis
                .iter()
                .map(|x| {
                    let prod = a.mul(x, &bj);
                    let lm = a.left_mat(&prod);
                    let lifted: Vec<Vec<u128>> = (0..n)
                        .map(|r| {
                            (0..n)
                                .map(|c| u128::from(f.residue(&lm[(r, c)]).expect("prime field elements have residues")))
                                .collect()
                        })
                        .collect();
                    let t = trace_of_power(&lifted, pi as u64, modulus);
                    f.from_i64(((t / pi) % p as u128) as i64)
                })
                .collect();
            rows.push(row);
        }
        let m = Mat::from_rows(f, rows)?;
        let k = m.kernel_basis();
        let new_basis: Vec<Vec<F::Elem>> = (0..k.cols())
            .map(|c| {
                let coeffs = k.column(c);
                let mut v = vec![f.zero(); n];
                for (coef, b) in coeffs.iter().zip(&basis) {
                    for (x, y) in v.iter_mut().zip(b) {
                        f.add_mul_assign(x, coef, y);
                    }
                }
                v
            })
            .collect();
        current = Subspace::span(f, n, new_basis.iter());
    }
    Ok(current)
}
