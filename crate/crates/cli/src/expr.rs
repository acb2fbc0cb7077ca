//! Construction expressions: `tensor(quiver:a2.qv, named:kx2)`, `corner(a2.qv, e1)`, ...
//!
//! Atoms are file paths (kind detected from contents), `named:`/`quiver:`/`algebra:`
//! references, integers, idempotent specs (`e1+e2`, `[1,0,0]`) and `group:` files.

use std::path::{Path, PathBuf};

use domdim::algebra::{Algebra, Vector};
use domdim::constructions::{
    corner_data, ideal_bimodule, matrix_algebra, skew_group_extension, tensor_algebra, tensor_extension,
    triangular_algebra, triangular_extension, trivial_extension, GroupAction, GroupSpec, TensorProduct,
};
use domdim::frobenius::Extension;
use domdim::io::{self, AlgebraJson, AlgebraRef, BimoduleJson, ExtensionJson, ModuleJson, Resolver};
use domdim::linalg::Field;
use domdim::module::{Bimodule, Module};
use domdim::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(String),
    Call { name: String, args: Vec<Expr> },
}

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line: 1, column, message: message.into() }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    /// Text up to the next `,`, `(` or `)` outside square brackets.
    fn word(&mut self) -> Result<String> {
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(c) = self.peek() {
            match c {
                '[' => depth += 1,
                ']' if depth == 0 => return Err(parse_error(self.pos + 1, "unbalanced ']'")),
                ']' => depth -= 1,
                ',' | '(' | ')' if depth == 0 => break,
                _ => {}
            }
            self.pos += c.len_utf8();
        }
        if depth != 0 {
            return Err(parse_error(self.pos + 1, "unbalanced '['"));
        }
        Ok(self.src[start..self.pos].trim().to_string())
    }

    fn expr(&mut self) -> Result<Expr> {
        self.skip_ws();
        let col = self.pos + 1;
        let word = self.word()?;
        if word.is_empty() {
            return Err(parse_error(col, "expected an expression"));
        }
        if self.peek() != Some('(') {
            return Ok(Expr::Atom(word));
        }
        if !word.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_') {
            return Err(parse_error(col, format!("invalid function name {word:?}")));
        }
        self.pos += 1;
        let mut args = Vec::new();
        loop {
            args.push(self.expr()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(parse_error(self.pos + 1, "expected ',' or ')'")),
            }
        }
        Ok(Expr::Call { name: word, args })
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(parse_error(p.pos + 1, "trailing input"));
    }
    Ok(e)
}

/// An evaluated input.
#[derive(Clone, Debug)]
pub enum Value<F: Field> {
    Algebra(Algebra<F>),
    Module(Module<F>),
    Bimodule(Bimodule<F>),
    Extension(Extension<F>),
}

impl<F: Field> Value<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Algebra(_) => "algebra",
            Value::Module(_) => "module",
            Value::Bimodule(_) => "bimodule",
            Value::Extension(_) => "extension",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let inline = |a: &Algebra<F>| AlgebraRef::Inline(Box::new(AlgebraJson::from_algebra(a)));
        let v = match self {
            Value::Algebra(a) => serde_json::to_value(AlgebraJson::from_algebra(a)),
            Value::Module(m) => serde_json::to_value(ModuleJson::from_module(m, inline(m.algebra()))),
            Value::Bimodule(m) => {
                let right = (!m.left_algebra().ptr_eq(m.right_algebra())).then(|| inline(m.right_algebra()));
                serde_json::to_value(BimoduleJson::from_bimodule(m, inline(m.left_algebra()), right))
            }
            Value::Extension(e) => serde_json::to_value(ExtensionJson::from_extension(e)),
        };
        v.expect("plain data serializes")
    }
}

/// What an input file holds, judged by its top-level keys.
pub fn detect_kind(path: &Path) -> Result<&'static str> {
    if path.extension().is_some_and(|e| e == "qv") {
        return Ok("algebra");
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, column: 0, message: format!("{}: {e}", path.display()) })?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: format!("{}: {e}", path.display()),
    })?;
    let has = |k: &str| v.get(k).is_some();
    Ok(if has("small") {
        "extension"
    } else if has("right_action") {
        "bimodule"
    } else if has("action") {
        "module"
    } else {
        "algebra"
    })
}

pub struct Evaluator<F: Field> {
    pub resolver: Resolver<F>,
    base: PathBuf,
}

impl<F: Field> Evaluator<F> {
    pub fn new(field: F, base: impl Into<PathBuf>) -> Self {
        Evaluator { resolver: Resolver::new(field), base: base.into() }
    }

    pub fn eval_str(&mut self, src: &str) -> Result<Value<F>> {
        let e = parse(src)?;
        self.eval(&e)
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Value<F>> {
        match e {
            Expr::Atom(s) => self.atom(s),
            Expr::Call { name, args } => self.call(name, args),
        }
    }

    fn atom(&mut self, s: &str) -> Result<Value<F>> {
        if s.starts_with("named:") || s.starts_with("quiver:") || s.starts_with("algebra:") {
            return Ok(Value::Algebra(self.resolver.algebra(s, &self.base)?));
        }
        let path = self.base.join(s);
        if !path.exists() && io::NAMED_ALGEBRAS.contains(&s) {
            return Ok(Value::Algebra(self.resolver.algebra(&format!("named:{s}"), &self.base)?));
        }
        Ok(match detect_kind(&path)? {
            "extension" => Value::Extension(self.resolver.load_extension(&path)?),
            "bimodule" => Value::Bimodule(self.resolver.load_bimodule(&path)?),
            "module" => Value::Module(self.resolver.load_module(&path)?),
            _ => Value::Algebra(self.resolver.algebra(s, &self.base)?),
        })
    }

    fn arity(name: &str, args: &[Expr], n: usize) -> Result<()> {
        if args.len() != n {
            return Err(parse_error(0, format!("{name} takes {n} argument(s), got {}", args.len())));
        }
        Ok(())
    }

    fn call(&mut self, name: &str, args: &[Expr]) -> Result<Value<F>> {
        let arity = |n| Self::arity(name, args, n);
        Ok(match name {
            "tensor" => {
                arity(2)?;
                Value::Algebra(self.tensor(&args[0], &args[1])?.algebra)
            }
            "tensor-ext" => {
                arity(2)?;
                let (a, c) = (self.algebra(&args[0])?, self.algebra(&args[1])?);
                Value::Extension(tensor_extension(&a, &c)?.0)
            }
            "trivext" | "trivext-ext" => {
                arity(2)?;
                let a = self.algebra(&args[0])?;
                let m = self.bimodule_over(&args[1], &a)?;
                let (t, ext) = trivial_extension(&a, &m)?;
                if name == "trivext" {
                    Value::Algebra(t)
                } else {
                    Value::Extension(ext)
                }
            }
            "matrix" => {
                arity(2)?;
                Value::Algebra(matrix_algebra(&self.algebra(&args[0])?, integer(&args[1])?)?)
            }
            "triangular" => {
                arity(2)?;
                Value::Algebra(triangular_algebra(&self.algebra(&args[0])?, integer(&args[1])?)?)
            }
            "triangular-ext" => {
                arity(2)?;
                Value::Extension(triangular_extension(&self.algebra(&args[0])?, integer(&args[1])?)?)
            }
            "skew" | "skew-ext" => {
                arity(2)?;
                let a = self.algebra(&args[0])?;
                let g = self.group(&a, &args[1])?;
                let ext = skew_group_extension(&a, &g)?;
                if name == "skew" {
                    Value::Algebra(ext.big)
                } else {
                    Value::Extension(ext)
                }
            }
            "corner" => {
                arity(2)?;
                let a = self.algebra(&args[0])?;
                let e = element(&a, &args[1])?;
                Value::Algebra(corner_data(&a, &e)?.corner)
            }
            "corner-bimodule" => {
                arity(2)?;
                let a = self.algebra(&args[0])?;
                let e = element(&a, &args[1])?;
                Value::Bimodule(ideal_bimodule(&a, &e)?)
            }
            "regular" => {
                arity(1)?;
                Value::Bimodule(Bimodule::regular(&self.algebra(&args[0])?))
            }
            "bimodule" => {
                arity(1)?;
                Value::Bimodule(self.extension(&args[0])?.bimodule())
            }
            "opposite" => {
                arity(1)?;
                Value::Algebra(self.algebra(&args[0])?.opposite())
            }
            "frobenius-part" => {
                arity(1)?;
                let a = self.algebra(&args[0])?;
                Value::Algebra(
                    a.frobenius_part()?.ok_or_else(|| Error::InvalidStructure("the Frobenius part is zero".into()))?,
                )
            }
            other => return Err(parse_error(0, format!("unknown function {other:?}"))),
        })
    }

    pub fn algebra(&mut self, e: &Expr) -> Result<Algebra<F>> {
        match self.eval(e)? {
            Value::Algebra(a) => Ok(a),
            v => Err(Error::InvalidStructure(format!("expected an algebra, found a {}", v.kind()))),
        }
    }

    pub fn extension(&mut self, e: &Expr) -> Result<Extension<F>> {
        match self.eval(e)? {
            Value::Extension(x) => Ok(x),
            v => Err(Error::InvalidStructure(format!("expected an extension, found a {}", v.kind()))),
        }
    }

    /// A bimodule; an extension `B ⊆ A` stands for `_B A_A`.
    pub fn bimodule(&mut self, e: &Expr) -> Result<Bimodule<F>> {
        match self.eval(e)? {
            Value::Bimodule(m) => Ok(m),
            Value::Extension(x) => Ok(x.bimodule()),
            Value::Algebra(a) => Ok(Bimodule::regular(&a)),
            v => Err(Error::InvalidStructure(format!("expected a bimodule, found a {}", v.kind()))),
        }
    }

    /// A bimodule over `a`; the bare `A` inside `trivext(A, corner-bimodule(A, e))` is re-evaluated to the same algebra.
    pub fn bimodule_over(&mut self, e: &Expr, a: &Algebra<F>) -> Result<Bimodule<F>> {
        let m = self.bimodule(e)?;
        if m.left_algebra().ptr_eq(a) && m.right_algebra().ptr_eq(a) {
            return Ok(m);
        }
        if m.left_algebra().same(a) && m.right_algebra().same(a) {
            return Bimodule::new(a, a, m.lambda().to_vec(), m.sigma().to_vec());
        }
        Err(Error::AlgebraMismatch)
    }

    pub fn tensor(&mut self, a: &Expr, b: &Expr) -> Result<TensorProduct<F>> {
        let (a, b) = (self.algebra(a)?, self.algebra(b)?);
        tensor_algebra(&a, &b)
    }

    /// `group:file.json` (table plus integer action matrices) or `trivial:n` for a trivially acting `C_n`.
    pub fn group(&mut self, a: &Algebra<F>, e: &Expr) -> Result<GroupAction<F>> {
        let Expr::Atom(s) = e else {
            return Err(parse_error(0, "expected a group reference"));
        };
        if let Some(n) = s.strip_prefix("trivial:") {
            let n = n.trim().parse().map_err(|_| parse_error(0, format!("bad group order {n:?}")))?;
            return GroupAction::trivial_cyclic(a, n);
        }
        let rest = s.strip_prefix("group:").unwrap_or(s);
        let path = self.base.join(rest);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse { line: 0, column: 0, message: format!("{}: {e}", path.display()) })?;
        let spec: GroupSpec = serde_json::from_str(&text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: format!("{}: {e}", path.display()),
        })?;
        GroupAction::from_spec(a, &spec)
    }
}

pub fn integer(e: &Expr) -> Result<usize> {
    match e {
        Expr::Atom(s) => s.parse().map_err(|_| parse_error(0, format!("expected an integer, found {s:?}"))),
        _ => Err(parse_error(0, "expected an integer")),
    }
}

/// An element given as a coordinate list `[1,0,"1/2"]`, `1`, or a signed sum of labels `e1+e2`, `2*e11-e22`.
pub fn element<F: Field>(a: &Algebra<F>, e: &Expr) -> Result<Vector<F>> {
    let Expr::Atom(s) = e else {
        return Err(parse_error(0, "expected an element"));
    };
    parse_element(a, s)
}

pub fn parse_element<F: Field>(a: &Algebra<F>, s: &str) -> Result<Vector<F>> {
    let f = a.field();
    let s = s.trim();
    if s.starts_with('[') {
        let items: Vec<io::ElemJson> = serde_json::from_str(s).map_err(|e| parse_error(e.column(), e.to_string()))?;
        let v = io::vector_from_json(f, &items)?;
        if v.len() != a.dim() {
            return Err(Error::InvalidStructure(format!("element has {} coordinates, algebra has dimension {}", v.len(), a.dim())));
        }
        return Ok(v);
    }
    if s == "1" {
        return Ok(a.one());
    }
    let mut acc = a.zero();
    let mut rest = s;
    let mut first = true;
    while !rest.is_empty() {
        let (sign, body) = match rest.chars().next() {
            Some('+') => (f.one(), &rest[1..]),
            Some('-') => (f.neg(&f.one()), &rest[1..]),
            _ if first => (f.one(), rest),
            _ => return Err(parse_error(0, format!("expected '+' or '-' in {s:?}"))),
        };
        first = false;
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = body[..end].trim();
        rest = body[end..].trim_start();
        let (coeff, label) = match term.split_once('*') {
            Some((c, l)) => (f.parse(c.trim())?, l.trim()),
            None => (f.one(), term),
        };
        let idx = a
            .labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| parse_error(0, format!("unknown basis label {label:?}")))?;
        acc[idx] = f.add(&acc[idx], &f.mul(&sign, &coeff));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use domdim::linalg::Rationals;

    #[test]
    fn parses_nested_calls() {
        let e = parse("trivext(named:a2, corner-bimodule(named:a2, [1, 0, 0]))").unwrap();
        let Expr::Call { name, args } = e else { panic!() };
        assert_eq!(name, "trivext");
        assert_eq!(args[1], Expr::Call {
            name: "corner-bimodule".into(),
            args: vec![Expr::Atom("named:a2".into()), Expr::Atom("[1, 0, 0]".into())],
        });
        assert!(parse("tensor(a, b").is_err());
        assert!(parse("tensor(a, b) x").is_err());
    }

    #[test]
    fn evaluates_constructions() {
        let mut ev = Evaluator::new(Rationals, ".");
        let Value::Algebra(t) = ev.eval_str("tensor(named:a2, named:kx2)").unwrap() else { panic!() };
        assert_eq!(t.dim(), 6);
        let Value::Algebra(c) = ev.eval_str("corner(named:m2, e11)").unwrap() else { panic!() };
        assert_eq!(c.dim(), 1);
        let Value::Algebra(t) = ev.eval_str("trivext(named:a2, corner-bimodule(named:a2, 1))").unwrap() else { panic!() };
        assert_eq!(t.dim(), 6);
        let Value::Extension(x) = ev.eval_str("skew-ext(named:kx2, trivial:2)").unwrap() else { panic!() };
        assert_eq!(x.big.dim(), 4);
        assert!(ev.eval_str("nope(named:k)").is_err());
    }

    #[test]
    fn elements_by_label() {
        let a = domdim::io::named_algebra(&Rationals, "m2").unwrap();
        let f = Rationals;
        let v = parse_element(&a, "e11-2*e22").unwrap();
        assert_eq!(v, vec![f.one(), f.zero(), f.zero(), f.from_i64(-2)]);
        assert!(parse_element(&a, "e33").is_err());
    }
}
