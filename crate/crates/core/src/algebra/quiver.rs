//! Quivers with relations and the bound path algebras they present.
//!
//! Paths concatenate left to right: `a*b` is `a` followed by `b`, so a nonzero
//! product `p q` requires `target(p) = source(q)`.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};

use super::idempotents::Skeleton;
use super::structure::{Algebra, Vector};

/// Paths longer than this without stabilization are treated as non-terminating.
pub const MAX_PATH_LENGTH: usize = 64;
/// Cap on the number of paths enumerated while searching for stabilization.
pub const MAX_PATHS: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Rational coefficient `num/den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coeff {
    pub num: i64,
    pub den: i64,
}

impl Coeff {
    pub const ONE: Coeff = Coeff { num: 1, den: 1 };

    fn to_field<F: Field>(self, field: &F) -> Option<F::Elem> {
        field.from_ratio(self.num, self.den)
    }
}

/// A relation `Σ cᵢ pᵢ`; each path is a sequence of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(Coeff, Vec<usize>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Path {
    // ordering: length, then vertex for trivial paths, then arrow sequence
    len: usize,
    source: usize,
    arrows: Vec<usize>,
}

impl QuiverPresentation {
    pub fn new(vertices: Vec<String>) -> Self {
        QuiverPresentation { vertices, arrows: Vec::new(), relations: Vec::new() }
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<()> {
        let s = self.vertex_index(source).ok_or_else(|| Error::NonAdmissible(format!("unknown vertex {source}")))?;
        let t = self.vertex_index(target).ok_or_else(|| Error::NonAdmissible(format!("unknown vertex {target}")))?;
        if self.arrow_index(name).is_some() {
            return Err(Error::NonAdmissible(format!("duplicate arrow {name}")));
        }
        self.arrows.push(Arrow { name: name.into(), source: s, target: t });
        Ok(())
    }

    /// Adds a relation given as `(coefficient, arrow names)` terms.
    pub fn add_relation(&mut self, terms: &[(i64, &[&str])]) -> Result<()> {
        let mut rel = Relation { terms: Vec::new() };
        for (c, path) in terms {
            let idx = path
                .iter()
                .map(|n| self.arrow_index(n).ok_or_else(|| Error::NonAdmissible(format!("unknown arrow {n}"))))
                .collect::<Result<Vec<_>>>()?;
            rel.terms.push((Coeff { num: *c, den: 1 }, idx));
        }
        self.relations.push(rel);
        Ok(())
    }

    /// The quiver with all arrows reversed; presents the opposite algebra.
    pub fn opposite(&self) -> Self {
        QuiverPresentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r.terms.iter().map(|(c, p)| (*c, p.iter().rev().copied().collect())).collect(),
                })
                .collect(),
        }
    }

    fn endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.target;
        for &a in &path[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    fn check_admissible(&self) -> Result<Vec<(usize, usize)>> {
        for a in &self.arrows {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::NonAdmissible(format!("arrow {} has an unknown endpoint", a.name)));
            }
        }
        let mut ends = Vec::new();
        for (k, r) in self.relations.iter().enumerate() {
            let mut common = None;
            if r.terms.is_empty() {
                return Err(Error::NonAdmissible(format!("relation {k} is empty")));
            }
            for (c, p) in &r.terms {
                if c.den == 0 {
                    return Err(Error::NonAdmissible(format!("relation {k} has a zero denominator")));
                }
                if p.len() < 2 {
                    return Err(Error::NonAdmissible(format!("relation {k} contains a path of length {}", p.len())));
                }
                let e = self
                    .endpoints(p)
                    .ok_or_else(|| Error::NonAdmissible(format!("relation {k} contains a non-composable path")))?;
                if common.is_some_and(|c| c != e) {
                    return Err(Error::NonAdmissible(format!("relation {k} mixes non-parallel paths")));
                }
                common = Some(e);
            }
            ends.push(common.expect("nonempty"));
        }
        Ok(ends)
    }

    fn path_target(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.source, |&a| self.arrows[a].target)
    }

    fn label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// All paths of length at most `max_len`, sorted; `None` past [`MAX_PATHS`].
    fn paths_up_to(&self, max_len: usize) -> Option<Vec<Path>> {
        let mut out: Vec<Path> = (0..self.vertices.len())
            .map(|v| Path { len: 0, source: v, arrows: Vec::new() })
            .collect();
        let mut layer: Vec<Path> = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            layer.push(Path { len: 1, source: a.source, arrows: vec![i] });
        }
        for len in 1..=max_len {
            if layer.is_empty() {
                break;
            }
            out.extend(layer.iter().cloned());
            if out.len() > MAX_PATHS {
                return None;
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for p in &layer {
                let t = self.path_target(p);
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.source == t {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        next.push(Path { len: len + 1, source: p.source, arrows });
                    }
                }
            }
            layer = next;
        }
        out.sort();
        Some(out)
    }

    /// The bound path algebra `kQ/I` over `field`.
    ///
    /// Relations are read in the completed path algebra: the quotient is
    /// computed modulo all paths of length `T`, for the least `T` such that
    /// every path of length `T` already lies in the ideal modulo longer paths.
    pub fn algebra<F: Field>(&self, field: &F) -> Result<Algebra<F>> {
        let ends = self.check_admissible()?;
        if self.vertices.is_empty() {
            return Err(Error::NonAdmissible("quiver has no vertices".into()));
        }
        let rels: Vec<Vec<(F::Elem, &Vec<usize>)>> = self
            .relations
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(c, p)| {
                        c.to_field(field)
                            .map(|x| (x, p))
                            .ok_or_else(|| Error::NonAdmissible("coefficient denominator vanishes in the field".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;

        for t in 1..=MAX_PATH_LENGTH {
            let paths = self.paths_up_to(t).ok_or(Error::InfiniteDimensional(t))?;
            let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let n = paths.len();
            // elimination coordinate: longest paths first so they become pivots
            let elim = |i: usize| n - 1 - i;
            let mut ideal = Subspace::zero(field, n);
            for (r, &(s, tgt)) in rels.iter().zip(&ends) {
                let min_len = r.iter().map(|(_, p)| p.len()).min().expect("nonempty");
                if min_len > t {
                    continue;
                }
                let prefixes: Vec<&Path> = paths
                    .iter()
                    .filter(|p| self.path_target(p) == s && p.len + min_len <= t)
                    .collect();
                let suffixes: Vec<&Path> = paths.iter().filter(|p| p.source == tgt).collect();
                for u in &prefixes {
                    for v in &suffixes {
                        if u.len + min_len + v.len > t {
                            continue;
                        }
                        let mut vec = vec![field.zero(); n];
                        for (c, p) in r {
                            let len = u.len + p.len() + v.len;
                            if len > t {
                                continue;
                            }
                            let mut arrows = u.arrows.clone();
                            arrows.extend_from_slice(p);
                            arrows.extend_from_slice(&v.arrows);
                            let q = Path { len, source: u.source, arrows };
                            let i = elim(index[&q]);
                            vec[i] = field.add(&vec[i], c);
                        }
                        ideal.insert(&vec);
                    }
                }
            }
            let top: Vec<usize> = (0..n).filter(|&i| paths[i].len == t).collect();
            let stable = top.iter().all(|&i| {
                let mut e = vec![field.zero(); n];
                e[elim(i)] = field.one();
                ideal.contains(&e)
            });
            if !stable {
                continue;
            }
            return Ok(self.build(field, &paths, &ideal, t));
        }
        Err(Error::InfiniteDimensional(MAX_PATH_LENGTH))
    }

    fn build<F: Field>(&self, field: &F, paths: &[Path], ideal: &Subspace<F>, t: usize) -> Algebra<F> {
        let n = paths.len();
        let elim = |i: usize| n - 1 - i;
        let free = ideal.free_positions();
        // free positions are in elimination order; basis in path order
        let mut basis: Vec<usize> = free.iter().map(|&e| n - 1 - e).collect();
        basis.sort_unstable();
        let quotient_to_basis: Vec<usize> = free
            .iter()
            .map(|&e| basis.iter().position(|&b| b == n - 1 - e).expect("present"))
            .collect();
        let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let dim = basis.len();

        let reduce_path = |q: &Path| -> Vector<F> {
            let mut out = vec![field.zero(); dim];
            if q.len >= t {
                return out;
            }
            let mut e = vec![field.zero(); n];
            e[elim(index[q])] = field.one();
            let coords = ideal.quotient_coordinates(&e);
            for (k, c) in coords.into_iter().enumerate() {
                out[quotient_to_basis[k]] = c;
            }
            out
        };

        let concat = |p: &Path, q: &Path| -> Option<Path> {
            if self.path_target(p) != q.source {
                return None;
            }
            let mut arrows = p.arrows.clone();
            arrows.extend_from_slice(&q.arrows);
            Some(Path { len: p.len + q.len, source: p.source, arrows })
        };

        let left: Vec<Mat<F>> = basis
            .iter()
            .map(|&i| {
                let cols: Vec<Vector<F>> = basis
                    .iter()
                    .map(|&j| match concat(&paths[i], &paths[j]) {
                        Some(q) => reduce_path(&q),
                        None => vec![field.zero(); dim],
                    })
                    .collect();
                Mat::from_columns(field, dim, &cols)
            })
            .collect();
        let nv = self.vertices.len();
        let mut unit = vec![field.zero(); dim];
        for v in unit.iter_mut().take(nv) {
            *v = field.one();
        }
        let labels: Vec<String> = basis.iter().map(|&i| self.label(&paths[i])).collect();
        let a = Algebra::from_left_unchecked(field, left, unit, Some(labels), Some(self.clone()));

        // the arrow ideal is the radical; trivial paths are primitive and pairwise non-isomorphic
        let rad_vectors: Vec<Vector<F>> = (nv..dim).map(|i| a.basis_vector(i)).collect();
        a.seed_radical(Subspace::span(field, dim, rad_vectors.iter()));
        let idempotents: Vec<Vector<F>> = (0..nv).map(|i| a.basis_vector(i)).collect();
        let arrow_gens: Vec<Vector<F>> = basis
            .iter()
            .enumerate()
            .filter(|(_, &i)| paths[i].len == 1)
            .map(|(k, _)| a.basis_vector(k))
            .collect();
        let mut gens = idempotents.clone();
        gens.extend(arrow_gens);
        a.seed_generators(gens);
        a.seed_skeleton(Skeleton::basic(idempotents));
        a
    }
}

// ---------------------------------------------------------------------------
// text format

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn location(&self, at: usize) -> (usize, usize) {
        let before = &self.src[..at];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(at, |i| at - i - 1) + 1;
        (line, column)
    }

    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(at);
        Error::Parse { line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start_matches([' ', '\t', '\r', '\n']);
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                let end = trimmed.find('\n').unwrap_or(trimmed.len());
                self.pos += end;
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(self.pos, format!("expected `{s}`")))
        }
    }

    fn word(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .find(|(_, c)| !(c.is_alphanumeric() || *c == '_' || *c == '\''))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &rest[..len]))
    }
}

fn is_number(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_digit())
}

impl QuiverPresentation {
    /// Parses the text format, e.g.
    /// `vertex 1 2 3; arrow a: 1 -> 2; arrow b: 2 -> 3; relation a*b;`
    pub fn parse(src: &str) -> Result<Self> {
        let mut q = QuiverPresentation::default();
        let mut cur = Cursor { src, pos: 0 };
        while cur.peek().is_some() {
            let (at, kw) = cur.word().ok_or_else(|| cur.error(cur.pos, "expected a statement"))?;
            match kw {
                "vertex" | "vertices" => {
                    while cur.peek() != Some(';') {
                        let (vat, name) = cur.word().ok_or_else(|| cur.error(cur.pos, "expected a vertex name"))?;
                        if q.vertex_index(name).is_some() {
                            return Err(cur.error(vat, format!("duplicate vertex {name}")));
                        }
                        q.vertices.push(name.to_string());
                    }
                }
                "arrow" => {
                    let (aat, name) = cur.word().ok_or_else(|| cur.error(cur.pos, "expected an arrow name"))?;
                    cur.expect(":")?;
                    let (sat, s) = cur.word().ok_or_else(|| cur.error(cur.pos, "expected a source vertex"))?;
                    cur.expect("->")?;
                    let (tat, t) = cur.word().ok_or_else(|| cur.error(cur.pos, "expected a target vertex"))?;
                    let s = q.vertex_index(s).ok_or_else(|| cur.error(sat, format!("unknown vertex {s}")))?;
                    let t = q.vertex_index(t).ok_or_else(|| cur.error(tat, format!("unknown vertex {t}")))?;
                    if q.arrow_index(name).is_some() || is_number(name) {
                        return Err(cur.error(aat, format!("invalid or duplicate arrow name {name}")));
                    }
                    q.arrows.push(Arrow { name: name.to_string(), source: s, target: t });
                }
                "relation" => {
                    let rel = parse_relation(&mut cur, &q)?;
                    q.relations.push(rel);
                }
                other => return Err(cur.error(at, format!("unknown statement `{other}`"))),
            }
            cur.expect(";")?;
        }
        Ok(q)
    }

    /// Inverse of [`QuiverPresentation::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "vertex {};", self.vertices.join(" "));
        for a in &self.arrows {
            let _ = writeln!(s, "arrow {}: {} -> {};", a.name, self.vertices[a.source], self.vertices[a.target]);
        }
        for r in &self.relations {
            let mut expr = String::new();
            for (k, (c, p)) in r.terms.iter().enumerate() {
                let neg = c.num < 0;
                if k == 0 {
                    if neg {
                        expr.push('-');
                    }
                } else {
                    expr.push_str(if neg { " - " } else { " + " });
                }
                let (n, d) = (c.num.unsigned_abs(), c.den);
                if d != 1 {
                    let _ = write!(expr, "{n}/{d}*");
                } else if n != 1 {
                    let _ = write!(expr, "{n}*");
                }
                let names: Vec<&str> = p.iter().map(|&a| self.arrows[a].name.as_str()).collect();
                expr.push_str(&names.join("*"));
            }
            let _ = writeln!(s, "relation {expr};");
        }
        s
    }
}

fn parse_relation(cur: &mut Cursor<'_>, q: &QuiverPresentation) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    if cur.eat("-") {
        sign = -1;
    } else {
        cur.eat("+");
    }
    loop {
        let mut coeff = Coeff { num: sign, den: 1 };
        let mut path = Vec::new();
        loop {
            let (at, w) = cur.word().ok_or_else(|| cur.error(cur.pos, "expected an arrow or coefficient"))?;
            if is_number(w) {
                if !path.is_empty() {
                    return Err(cur.error(at, "coefficient after an arrow"));
                }
                let n: i64 = w.parse().map_err(|_| cur.error(at, "coefficient out of range"))?;
                let mut d = 1;
                if cur.eat("/") {
                    let (dat, dw) = cur.word().ok_or_else(|| cur.error(cur.pos, "expected a denominator"))?;
                    d = dw.parse().ok().filter(|&d: &i64| d != 0 && is_number(dw)).ok_or_else(|| cur.error(dat, "invalid denominator"))?;
                }
                coeff = Coeff { num: coeff.num * n, den: d };
            } else {
                let a = q.arrow_index(w).ok_or_else(|| cur.error(at, format!("unknown arrow {w}")))?;
                path.push(a);
            }
            if !cur.eat("*") {
                break;
            }
        }
        if path.is_empty() {
            return Err(cur.error(cur.pos, "relation term without a path"));
        }
        if coeff.num != 0 {
            terms.push((coeff, path));
        }
        if cur.eat("+") {
            sign = 1;
        } else if cur.eat("-") {
            sign = -1;
        } else {
            break;
        }
    }
    Ok(Relation { terms })
}

impl<F: Field> Algebra<F> {
    pub fn from_quiver(field: &F, q: &QuiverPresentation) -> Result<Self> {
        q.algebra(field)
    }
}
