//! Independent brute-force oracles over `Q`, written against plain
//! `Vec<Vec<BigRational>>` matrices and nothing from the engine beyond raw
//! structure constants and action matrices.

#![allow(dead_code)]

use domdim::algebra::Algebra;
use domdim::linalg::{Mat, Rationals};
use domdim::module::Module;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
/// Row-major dense matrix.
pub type M = Vec<Vec<Q>>;

pub fn zeros(r: usize, c: usize) -> M {
    vec![vec![Q::zero(); c]; r]
}

pub fn identity(n: usize) -> M {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn from_mat(m: &Mat<Rationals>) -> M {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn cols(m: &M, fallback: usize) -> usize {
    m.first().map_or(fallback, Vec::len)
}

pub fn mul(a: &M, b: &M, inner: usize, b_cols: usize) -> M {
    let mut out = zeros(a.len(), b_cols);
    for (i, row) in a.iter().enumerate() {
        for k in 0..inner {
            if row[k].is_zero() {
                continue;
            }
            for j in 0..b_cols {
                let t = &row[k] * &b[k][j];
                out[i][j] += t;
            }
        }
    }
    out
}

pub fn mul_vec(a: &M, v: &[Q]) -> Vec<Q> {
    a.iter().map(|row| row.iter().zip(v).fold(Q::zero(), |s, (x, y)| s + x * y)).collect()
}

pub fn transpose(a: &M, c: usize) -> M {
    (0..c).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduced row echelon form; returns pivot columns.
pub fn rref(a: &mut M) -> Vec<usize> {
    let rows = a.len();
    let c = cols(a, 0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..c {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Q::one() / &a[r][col];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..c {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(a: &M) -> usize {
    let mut b = a.clone();
    rref(&mut b).len()
}

/// Rank of a list of column vectors.
pub fn rank_of_vectors(vs: &[Vec<Q>]) -> usize {
    rank(&vs.to_vec())
}

/// Basis of `{x : a x = 0}` for `a` with `c` columns.
pub fn kernel(a: &M, c: usize) -> Vec<Vec<Q>> {
    let mut b = a.clone();
    let pivots = rref(&mut b);
    let free: Vec<usize> = (0..c).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&fcol| {
            let mut v = vec![Q::zero(); c];
            v[fcol] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -b[r][fcol].clone();
            }
            v
        })
        .collect()
}

/// Greedy linearly independent subset of `vs`, kept in order: the pivot
/// columns of the matrix with the `vs` as columns.
pub fn independent(vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let Some(dim) = vs.first().map(Vec::len) else { return Vec::new() };
    let mut m = transpose(&vs.to_vec(), dim);
    rref(&mut m).into_iter().map(|j| vs[j].clone()).collect()
}

/// Solves `basis · x = v` where `basis` lists columns; panics if unsolvable.
pub fn coordinates(basis: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    let n = basis.len();
    let dim = v.len();
    let mut aug: M = (0..dim).map(|i| basis.iter().map(|b| b[i].clone()).chain([v[i].clone()]).collect()).collect();
    let pivots = rref(&mut aug);
    assert!(!pivots.contains(&n), "vector outside span");
    let mut x = vec![Q::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][n].clone();
    }
    x
}

/// A finite-dimensional algebra as raw structure constants plus a chosen
/// complete set of primitive orthogonal idempotents (the algebra must be basic
/// and split, so every simple is one-dimensional).
pub struct RawAlgebra {
    pub n: usize,
    /// `left[i]` is the matrix of left multiplication by basis element `i`.
    pub left: Vec<M>,
    pub right: Vec<M>,
    pub idempotents: Vec<Vec<Q>>,
}

impl RawAlgebra {
    pub fn new(a: &Algebra<Rationals>, idempotents: Vec<Vec<Q>>) -> Self {
        let n = a.dim();
        let s = a.structure();
        // column j of left[i] is b_i b_j
        let left = (0..n).map(|i| transpose(&(0..n).map(|j| s[i][j].clone()).collect(), n)).collect();
        let right = (0..n).map(|i| transpose(&(0..n).map(|j| s[j][i].clone()).collect(), n)).collect();
        let raw = RawAlgebra { n, left, right, idempotents };
        raw.check_idempotents();
        raw
    }

    /// Idempotents read off basis labels.
    pub fn by_labels(a: &Algebra<Rationals>, labels: &[&str]) -> Self {
        let ids = labels
            .iter()
            .map(|l| {
                let i = a.labels().iter().position(|x| x == l).unwrap_or_else(|| panic!("no label {l}"));
                let mut v = vec![Q::zero(); a.dim()];
                v[i] = Q::one();
                v
            })
            .collect();
        RawAlgebra::new(a, ids)
    }

    fn element_mat(&self, mats: &[M], x: &[Q]) -> M {
        let mut out = zeros(self.n, self.n);
        for (c, m) in x.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.n {
                for j in 0..self.n {
                    out[i][j] += c * &m[i][j];
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        mul_vec(&self.element_mat(&self.left, x), y)
    }

    fn check_idempotents(&self) {
        let mut sum = vec![Q::zero(); self.n];
        for (i, e) in self.idempotents.iter().enumerate() {
            for (j, f) in self.idempotents.iter().enumerate() {
                let p = self.mul(e, f);
                let want = if i == j { e.clone() } else { vec![Q::zero(); self.n] };
                assert_eq!(p, want, "idempotents not orthogonal");
            }
            for (s, x) in sum.iter_mut().zip(e) {
                *s += x;
            }
        }
        let one = self.element_mat(&self.left, &sum);
        assert_eq!(one, identity(self.n), "idempotents do not sum to 1");
    }

    /// Radical from the trace form: `rad A = {a : tr(L_{ab}) = 0 for all b}` (characteristic zero).
    pub fn radical(&self) -> Vec<Vec<Q>> {
        let tr = |m: &M| (0..self.n).fold(Q::zero(), |s, i| s + &m[i][i]);
        let gram: M = (0..self.n)
            .map(|i| (0..self.n).map(|j| tr(&mul(&self.left[i], &self.left[j], self.n, self.n))).collect())
            .collect();
        kernel(&gram, self.n)
    }

    pub fn regular(&self) -> RawModule {
        RawModule { dim: self.n, act: self.left.clone() }
    }

    /// `D(e_i A)` with `(a f)(x) = f(x a)`: the injective envelope of the simple at `e_i`.
    pub fn injective(&self, i: usize) -> RawModule {
        let e = &self.idempotents[i];
        let span: Vec<Vec<Q>> = (0..self.n)
            .map(|j| {
                let mut b = vec![Q::zero(); self.n];
                b[j] = Q::one();
                self.mul(e, &b)
            })
            .collect();
        let basis = independent(&span);
        let d = basis.len();
        let act = (0..self.n)
            .map(|a| {
                // right multiplication by b_a on e_i A, then transpose for the dual
                let r: M = transpose(&basis.iter().map(|w| coordinates(&basis, &mul_vec(&self.right[a], w))).collect(), d);
                transpose(&r, d)
            })
            .collect();
        RawModule { dim: d, act }
    }

    pub fn projective(&self, i: usize) -> RawModule {
        let e = &self.idempotents[i];
        let span: Vec<Vec<Q>> = (0..self.n)
            .map(|j| {
                let mut b = vec![Q::zero(); self.n];
                b[j] = Q::one();
                self.mul(&b, e)
            })
            .collect();
        let basis = independent(&span);
        let d = basis.len();
        let act = (0..self.n)
            .map(|a| transpose(&basis.iter().map(|w| coordinates(&basis, &mul_vec(&self.left[a], w))).collect(), d))
            .collect();
        RawModule { dim: d, act }
    }

    /// Top multiplicities `dim e_j (M / rad M)`.
    pub fn top_vector(&self, m: &RawModule) -> Vec<usize> {
        let rad_m: Vec<Vec<Q>> = self
            .radical()
            .iter()
            .flat_map(|r| {
                let ar = m.element(r);
                (0..m.dim).map(move |k| ar.iter().map(|row| row[k].clone()).collect::<Vec<Q>>())
            })
            .collect();
        self.idempotents
            .iter()
            .map(|e| {
                let ae = m.element(e);
                let em = rank(&ae);
                let erad: Vec<Vec<Q>> = rad_m.iter().map(|v| mul_vec(&ae, v)).collect();
                em - rank_of_vectors(&erad)
            })
            .collect()
    }

    /// Socle of `M`: vectors killed by the radical.
    pub fn socle(&self, m: &RawModule) -> Vec<Vec<Q>> {
        let rows: M = self.radical().iter().flat_map(|r| m.element(r)).collect();
        if rows.is_empty() {
            return identity(m.dim);
        }
        kernel(&rows, m.dim)
    }

    /// Projective iff the top is a single simple `S_j` and `dim M = dim A e_j`.
    pub fn is_projective(&self, m: &RawModule) -> bool {
        let top = self.top_vector(m);
        let nonzero: Vec<usize> = (0..top.len()).filter(|&j| top[j] > 0).collect();
        match nonzero[..] {
            [j] => top[j] == 1 && self.projective(j).dim == m.dim,
            _ => m.dim == 0,
        }
    }
}

/// A left module: one action matrix per algebra basis element.
#[derive(Clone, Debug)]
pub struct RawModule {
    pub dim: usize,
    pub act: Vec<M>,
}

impl RawModule {
    pub fn from_module(m: &Module<Rationals>) -> Self {
        RawModule { dim: m.dim(), act: m.action().iter().map(from_mat).collect() }
    }

    pub fn element(&self, x: &[Q]) -> M {
        let mut out = zeros(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.act) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    out[i][j] += c * &m[i][j];
                }
            }
        }
        out
    }
}

/// `dim Hom_A(M, N)` by solving `N(b) f = f M(b)` for every basis element `b`.
pub fn hom_dim(m: &RawModule, n: &RawModule) -> usize {
    let (p, q) = (n.dim, m.dim);
    let unknowns = p * q;
    if unknowns == 0 {
        return 0;
    }
    let mut rows: M = Vec::new();
    for (am, an) in m.act.iter().zip(&n.act) {
        for i in 0..p {
            for j in 0..q {
                // (an f - f am)_{ij} = Σ_k an[i][k] f[k][j] - Σ_k f[i][k] am[k][j]
                let mut row = vec![Q::zero(); unknowns];
                for k in 0..p {
                    row[k * q + j] += &an[i][k];
                }
                for k in 0..q {
                    row[i * q + k] -= &am[k][j];
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank(&rows)
}

/// Checks that `f` (target × source) intertwines the actions and is invertible.
pub fn is_module_isomorphism(m: &RawModule, n: &RawModule, f: &M) -> bool {
    if m.dim != n.dim {
        return false;
    }
    let d = m.dim;
    let commutes = m.act.iter().zip(&n.act).all(|(am, an)| mul(an, f, d, d) == mul(f, am, d, d));
    commutes && rank(f) == d
}

/// One step of the socle-series resolution: `Ω^n`, the socle multiplicities
/// (hence the term `I^n = ⊕ I_i^{s_i}`) and whether that term is projective.
#[derive(Clone, Debug)]
pub struct OracleTerm {
    pub cosyzygy_dim: usize,
    pub multiplicities: Vec<usize>,
    pub term_dim: usize,
    pub projective: bool,
}

/// Cosyzygies larger than this are not resolved further.
pub const ORACLE_MAX_DIM: usize = 16;

/// Minimal injective resolution by socle computations: the envelope of `M` is
/// `⊕ D(e_i A)^{dim e_i soc M}`, embedded through functionals on `e_i M` that
/// restrict to a dual basis of `e_i soc M`.
pub fn socle_resolution(a: &RawAlgebra, m: &RawModule, max_terms: usize) -> Vec<OracleTerm> {
    let injectives: Vec<RawModule> = (0..a.idempotents.len()).map(|i| a.injective(i)).collect();
    let inj_projective: Vec<bool> = injectives.iter().map(|i| a.is_projective(i)).collect();
    let mut out = Vec::new();
    let mut cur = m.clone();
    for _ in 0..max_terms {
        if cur.dim == 0 || cur.dim > ORACLE_MAX_DIM {
            break;
        }
        let soc = a.socle(&cur);
        let mut rows: M = Vec::new();
        let mut blocks: Vec<usize> = Vec::new();
        let mut mults = Vec::new();
        for (i, e) in a.idempotents.iter().enumerate() {
            let ae = cur.element(e);
            let esoc = independent(&soc.iter().map(|v| mul_vec(&ae, v)).collect::<Vec<_>>());
            mults.push(esoc.len());
            if esoc.is_empty() {
                continue;
            }
            // complete e_i soc to a basis of the whole module, then dualise
            let mut basis = esoc.clone();
            basis.extend(identity(cur.dim));
            let basis = independent(&basis);
            let inv_rows = invert(&transpose(&basis, cur.dim));
            let ei_a = spanning_basis_of_ei_a(a, i);
            for f in inv_rows.iter().take(esoc.len()) {
                // φ(m)_k = f(w_k m)
                for w in &ei_a {
                    let wm = cur.element(w);
                    rows.push((0..cur.dim).map(|c| f.iter().zip(&wm).fold(Q::zero(), |s, (fi, row)| s + fi * &row[c])).collect());
                }
                blocks.push(i);
            }
        }
        let term_dim = rows.len();
        assert_eq!(rank(&rows), cur.dim, "socle embedding must be injective");
        let projective = blocks.iter().all(|&i| inj_projective[i]);
        let envelope = block_module(a, &injectives, &blocks);
        out.push(OracleTerm { cosyzygy_dim: cur.dim, multiplicities: mults, term_dim, projective });
        cur = quotient(&envelope, &transpose(&rows, cur.dim));
    }
    out
}

fn spanning_basis_of_ei_a(a: &RawAlgebra, i: usize) -> Vec<Vec<Q>> {
    let e = &a.idempotents[i];
    let span: Vec<Vec<Q>> = (0..a.n)
        .map(|j| {
            let mut b = vec![Q::zero(); a.n];
            b[j] = Q::one();
            a.mul(e, &b)
        })
        .collect();
    independent(&span)
}

fn invert(m: &M) -> M {
    let n = m.len();
    let mut aug: M = m.iter().zip(identity(n)).map(|(r, i)| r.iter().cloned().chain(i).collect()).collect();
    let pivots = rref(&mut aug);
    assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "singular");
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn block_module(a: &RawAlgebra, injectives: &[RawModule], blocks: &[usize]) -> RawModule {
    let dim: usize = blocks.iter().map(|&i| injectives[i].dim).sum();
    let act = (0..a.n)
        .map(|b| {
            let mut m = zeros(dim, dim);
            let mut off = 0;
            for &i in blocks {
                let inj = &injectives[i];
                for r in 0..inj.dim {
                    for c in 0..inj.dim {
                        m[off + r][off + c] = inj.act[b][r][c].clone();
                    }
                }
                off += inj.dim;
            }
            m
        })
        .collect();
    RawModule { dim, act }
}

/// `N / U` for a submodule `U` spanned by the given vectors of `N`.
fn quotient(n: &RawModule, spanning: &[Vec<Q>]) -> RawModule {
    let sub = independent(spanning);
    let mut basis = sub.clone();
    basis.extend(identity(n.dim));
    let basis = independent(&basis);
    let k = sub.len();
    let q = n.dim - k;
    let act = n
        .act
        .iter()
        .map(|am| {
            let imgs: Vec<Vec<Q>> = basis[k..].iter().map(|v| coordinates(&basis, &mul_vec(am, v))[k..].to_vec()).collect();
            transpose(&imgs, q)
        })
        .collect();
    RawModule { dim: q, act }
}

/// Dominant dimension read from the socle resolution of the regular module:
/// `Some(d)` for finite, `None` when every computed term is projective.
pub fn oracle_dominant_dimension(terms: &[OracleTerm]) -> Option<usize> {
    terms.iter().position(|t| !t.projective)
}

pub fn quiver(src: &str) -> Algebra<Rationals> {
    domdim::algebra::QuiverPresentation::parse(src).and_then(|q| q.algebra(&Rationals)).unwrap()
}

fn half(sign: i64) -> Q {
    Q::new(sign.into(), 2.into())
}

/// Basic split algebras of dimension at most 7 with known vertex idempotents.
pub fn small_algebras() -> Vec<(&'static str, Algebra<Rationals>, RawAlgebra)> {
    use domdim::constructions::named;
    let f = Rationals;
    let labelled = |name, a: Algebra<Rationals>, labels: &[&str]| {
        let raw = RawAlgebra::by_labels(&a, labels);
        (name, a, raw)
    };
    let kc2 = named::group_algebra_c2(&f);
    let kc2_raw = RawAlgebra::new(&kc2, vec![vec![half(1), half(1)], vec![half(1), half(-1)]]);
    vec![
        labelled("k", named::ground(&f), &["e1"]),
        labelled("kx2", named::dual_numbers(&f), &["e1"]),
        labelled("a2", named::a2(&f), &["e1", "e2"]),
        labelled("t2", named::triangular(&f, 2), &["e11", "e22"]),
        labelled("t3", named::triangular(&f, 3), &["e11", "e22", "e33"]),
        ("kc2", kc2, kc2_raw),
        labelled("kxy", named::kxy(&f), &["e1"]),
        labelled("aus", quiver(named::AUSLANDER), &["e1", "e2"]),
        labelled("a2k", quiver("vertex 1 2 3; arrow a: 1 -> 2;"), &["e1", "e2", "e3"]),
        labelled("a3", quiver("vertex 1 2 3; arrow a: 1 -> 2; arrow b: 2 -> 3;"), &["e1", "e2", "e3"]),
        labelled("nakayama3", quiver("vertex 1 2 3; arrow a: 1 -> 2; arrow b: 2 -> 3; relation a*b;"), &["e1", "e2", "e3"]),
        labelled(
            "cyclic2",
            quiver("vertex 1 2; arrow a: 1 -> 2; arrow b: 2 -> 1; relation a*b*a; relation b*a*b;"),
            &["e1", "e2"],
        ),
        labelled("morita_b", named::morita_extension(&f).small, &["e11 + e44", "e22 + e33"]),
    ]
}

/// Oracle idempotent index for each engine class, matched through the top of `A e_c`.
pub fn class_map(a: &Algebra<Rationals>, raw: &RawAlgebra) -> Vec<usize> {
    let pd = a.projective_data().unwrap();
    pd.modules
        .iter()
        .map(|p| {
            let top = raw.top_vector(&RawModule::from_module(p));
            assert_eq!(top.iter().sum::<usize>(), 1, "projective with non-simple top");
            top.iter().position(|&t| t == 1).unwrap()
        })
        .collect()
}

/// Compares the engine's minimal injective resolution of `m` with the socle
/// oracle term by term; returns the number of terms compared.
pub fn compare_resolution(a: &Algebra<Rationals>, raw: &RawAlgebra, m: &Module<Rationals>, cutoff: usize) -> Result<usize, String> {
    let res = m.minimal_injective_resolution(cutoff).map_err(|e| e.to_string())?;
    let oracle = socle_resolution(raw, &RawModule::from_module(m), cutoff);
    let map = class_map(a, raw);
    if let domdim::homology::ResolutionEnd::Vanished { length } = res.end {
        if oracle.len() != length {
            return Err(format!("engine resolution has length {length}, oracle {}", oracle.len()));
        }
    }
    let n = res.terms.len().min(oracle.len());
    let truncated = oracle.len() < cutoff && res.cosyzygies.get(oracle.len()).is_some_and(|c| c.dim() > ORACLE_MAX_DIM);
    if res.terms.len() > oracle.len() && !truncated {
        return Err(format!("engine has {} terms, oracle vanished after {}", res.terms.len(), oracle.len()));
    }
    for k in 0..n {
        let t = &oracle[k];
        if res.cosyzygies[k].dim() != t.cosyzygy_dim || res.terms[k].dim() != t.term_dim {
            return Err(format!("term {k}: dims differ"));
        }
        let mut mapped = vec![0; raw.idempotents.len()];
        for (c, &mult) in res.term_multiplicities[k].iter().enumerate() {
            mapped[map[c]] = mult;
        }
        if mapped != t.multiplicities {
            return Err(format!("term {k}: multiplicities {mapped:?} vs oracle {:?}", t.multiplicities));
        }
    }
    Ok(n)
}
