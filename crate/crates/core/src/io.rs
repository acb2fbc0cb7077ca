//! JSON formats for algebras, modules, bimodules and extensions, and a
//! resolver for algebra references between files.
//!
//! Field elements are written as strings (`"1/2"`, `"-3"`); integers are also
//! accepted on input.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, QuiverPresentation};
use crate::error::{Error, Result};
use crate::frobenius::Extension;
use crate::homology::{ExtendedNat, InjectiveResolution, ResolutionEnd};
use crate::linalg::{Field, FieldSpec, Mat};
use crate::module::{Bimodule, Module};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    /// `"Q"`.
    Named(String),
    Prime { prime: u32 },
}

impl FieldJson {
    pub fn spec(&self) -> Result<FieldSpec> {
        match self {
            FieldJson::Named(s) if s == "Q" || s == "QQ" => Ok(FieldSpec::Rationals),
            FieldJson::Named(s) => Err(Error::Parse { line: 0, column: 0, message: format!("unknown field {s:?}") }),
            FieldJson::Prime { prime } => Ok(FieldSpec::Prime(*prime)),
        }
    }

    pub fn from_spec(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rationals => FieldJson::Named("Q".into()),
            FieldSpec::Prime(p) => FieldJson::Prime { prime: p },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemJson {
    Int(i64),
    Text(String),
}

impl ElemJson {
    fn parse<F: Field>(&self, f: &F) -> Result<F::Elem> {
        match self {
            ElemJson::Int(n) => Ok(f.from_i64(*n)),
            ElemJson::Text(s) => Ok(f.parse(s)?),
        }
    }
}

/// Row-major matrix.
pub type MatrixJson = Vec<Vec<ElemJson>>;

pub fn vector_to_json<F: Field>(f: &F, v: &[F::Elem]) -> Vec<ElemJson> {
    v.iter().map(|x| ElemJson::Text(f.format(x))).collect()
}

pub fn vector_from_json<F: Field>(f: &F, v: &[ElemJson]) -> Result<Vec<F::Elem>> {
    v.iter().map(|x| x.parse(f)).collect()
}

pub fn matrix_to_json<F: Field>(m: &Mat<F>) -> MatrixJson {
    (0..m.rows()).map(|i| vector_to_json(m.field(), m.row(i))).collect()
}

/// `rows × cols` is checked when given; an empty list is a `rows × cols` zero matrix.
pub fn matrix_from_json<F: Field>(f: &F, m: &MatrixJson, rows: usize, cols: usize) -> Result<Mat<F>> {
    if m.is_empty() && rows * cols == 0 {
        return Ok(Mat::zeros(f, rows, cols));
    }
    let data: Vec<Vec<F::Elem>> = m.iter().map(|r| vector_from_json(f, r)).collect::<Result<_>>()?;
    let mat = Mat::from_rows(f, data)?;
    if mat.rows() != rows || mat.cols() != cols {
        return Err(Error::InvalidStructure(format!(
            "expected a {rows}×{cols} matrix, found {}×{}",
            mat.rows(),
            mat.cols()
        )));
    }
    Ok(mat)
}

/// `{"field", "dim", "structure", "unit", "labels"}` with `structure[i][j]` the coordinates of `b_i b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    pub structure: Vec<Vec<Vec<ElemJson>>>,
    pub unit: Vec<ElemJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl AlgebraJson {
    pub fn from_algebra<F: Field>(a: &Algebra<F>) -> Self {
        let f = a.field();
        AlgebraJson {
            field: FieldJson::from_spec(f.spec()),
            dim: a.dim(),
            structure: a.structure().iter().map(|row| row.iter().map(|v| vector_to_json(f, v)).collect()).collect(),
            unit: vector_to_json(f, a.unit()),
            labels: Some(a.labels().to_vec()),
        }
    }

    pub fn to_algebra<F: Field>(&self, f: &F) -> Result<Algebra<F>> {
        if self.field.spec()? != f.spec() {
            return Err(Error::FieldMismatch);
        }
        if self.structure.len() != self.dim {
            return Err(Error::InvalidStructure(format!("structure has {} rows, dim is {}", self.structure.len(), self.dim)));
        }
        let structure = self
            .structure
            .iter()
            .map(|row| row.iter().map(|v| vector_from_json(f, v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Algebra::from_structure(f, structure, vector_from_json(f, &self.unit)?, self.labels.clone())
    }
}

/// An inline algebra or a reference such as `"kx2.json"`, `"quiver:a2.qv"` or `"named:kx2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(Box<AlgebraJson>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: AlgebraRef,
    pub dim: usize,
    /// Matrix of each basis element of the algebra.
    pub action: Vec<MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleJson {
    /// The left algebra.
    pub algebra: AlgebraRef,
    /// Defaults to the left algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_algebra: Option<AlgebraRef>,
    pub dim: usize,
    pub action: Vec<MatrixJson>,
    /// Matrix of `m ↦ m a` for each basis element `a` of the right algebra.
    pub right_action: Vec<MatrixJson>,
}

/// `B ⊆ A` with the embedding matrix (columns = images of the basis of `B`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionJson {
    pub small: AlgebraRef,
    pub big: AlgebraRef,
    pub embedding: MatrixJson,
}

impl ExtensionJson {
    /// Both algebras inline.
    pub fn from_extension<F: Field>(e: &Extension<F>) -> Self {
        ExtensionJson {
            small: AlgebraRef::Inline(Box::new(AlgebraJson::from_algebra(&e.small))),
            big: AlgebraRef::Inline(Box::new(AlgebraJson::from_algebra(&e.big))),
            embedding: matrix_to_json(&e.embedding),
        }
    }
}

impl ModuleJson {
    pub fn from_module<F: Field>(m: &Module<F>, algebra: AlgebraRef) -> Self {
        ModuleJson { algebra, dim: m.dim(), action: m.action().iter().map(matrix_to_json).collect() }
    }
}

impl BimoduleJson {
    pub fn from_bimodule<F: Field>(m: &Bimodule<F>, algebra: AlgebraRef, right_algebra: Option<AlgebraRef>) -> Self {
        BimoduleJson {
            algebra,
            right_algebra,
            dim: m.dim(),
            action: m.lambda().iter().map(matrix_to_json).collect(),
            right_action: m.sigma().iter().map(matrix_to_json).collect(),
        }
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, column: 0, message: format!("{}: {e}", path.display()) })
}

fn json_error(path: &Path, e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: format!("{}: {e}", path.display()) }
}

/// Field of an algebra file (`None` for the quiver format and named algebras).
pub fn peek_field(path: &Path) -> Result<Option<FieldSpec>> {
    if path.extension().is_some_and(|e| e == "qv") {
        return Ok(None);
    }
    #[derive(Deserialize)]
    struct Peek {
        field: Option<FieldJson>,
    }
    let text = read_to_string(path)?;
    let p: Peek = serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
    p.field.map(|f| f.spec()).transpose()
}

/// Loads algebras, modules and extensions from files, sharing one `Algebra`
/// per distinct reference so that modules over "the same" algebra agree.
pub struct Resolver<F: Field> {
    field: F,
    cache: BTreeMap<String, Algebra<F>>,
}

impl<F: Field> Resolver<F> {
    pub fn new(field: F) -> Self {
        Resolver { field, cache: BTreeMap::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Resolves `name` relative to `base`: `quiver:`, `algebra:`, `named:` prefixes or a file by extension.
    pub fn algebra(&mut self, name: &str, base: &Path) -> Result<Algebra<F>> {
        let (kind, rest) = match name.split_once(':') {
            Some((k @ ("quiver" | "algebra" | "named"), r)) => (k, r),
            _ if name.ends_with(".qv") => ("quiver", name),
            _ => ("algebra", name),
        };
        let key = if kind == "named" {
            format!("named:{rest}")
        } else {
            let p = base.join(rest);
            format!("{kind}:{}", p.canonicalize().unwrap_or(p).display())
        };
        if let Some(a) = self.cache.get(&key) {
            return Ok(a.clone());
        }
        let a = match kind {
            "named" => named_algebra(&self.field, rest)?,
            "quiver" => {
                let p = base.join(rest);
                QuiverPresentation::parse(&read_to_string(&p)?)?.algebra(&self.field)?
            }
            _ => {
                let p = base.join(rest);
                let j: AlgebraJson = serde_json::from_str(&read_to_string(&p)?).map_err(|e| json_error(&p, e))?;
                j.to_algebra(&self.field)?
            }
        };
        self.cache.insert(key, a.clone());
        Ok(a)
    }

    pub fn algebra_ref(&mut self, r: &AlgebraRef, base: &Path) -> Result<Algebra<F>> {
        match r {
            AlgebraRef::Path(p) => self.algebra(p, base),
            AlgebraRef::Inline(j) => j.to_algebra(&self.field),
        }
    }

    pub fn module(&mut self, j: &ModuleJson, base: &Path) -> Result<Module<F>> {
        let a = self.algebra_ref(&j.algebra, base)?;
        let action = actions(&self.field, &j.action, a.dim(), j.dim)?;
        Module::new(&a, action)
    }

    pub fn bimodule(&mut self, j: &BimoduleJson, base: &Path) -> Result<Bimodule<F>> {
        let left = self.algebra_ref(&j.algebra, base)?;
        let right = match &j.right_algebra {
            Some(r) => self.algebra_ref(r, base)?,
            None => left.clone(),
        };
        let lambda = actions(&self.field, &j.action, left.dim(), j.dim)?;
        let sigma = actions(&self.field, &j.right_action, right.dim(), j.dim)?;
        Bimodule::new(&left, &right, lambda, sigma)
    }

    pub fn extension(&mut self, j: &ExtensionJson, base: &Path) -> Result<Extension<F>> {
        let small = self.algebra_ref(&j.small, base)?;
        let big = self.algebra_ref(&j.big, base)?;
        let emb = matrix_from_json(&self.field, &j.embedding, big.dim(), small.dim())?;
        Extension::new(&small, &big, emb)
    }

    pub fn load_module(&mut self, path: &Path) -> Result<Module<F>> {
        let j: ModuleJson = serde_json::from_str(&read_to_string(path)?).map_err(|e| json_error(path, e))?;
        self.module(&j, parent(path))
    }

    pub fn load_bimodule(&mut self, path: &Path) -> Result<Bimodule<F>> {
        let j: BimoduleJson = serde_json::from_str(&read_to_string(path)?).map_err(|e| json_error(path, e))?;
        self.bimodule(&j, parent(path))
    }

    pub fn load_extension(&mut self, path: &Path) -> Result<Extension<F>> {
        let j: ExtensionJson = serde_json::from_str(&read_to_string(path)?).map_err(|e| json_error(path, e))?;
        self.extension(&j, parent(path))
    }
}

/// Directory containing `path` (`.` for bare file names).
pub fn parent(path: &Path) -> &Path {
    match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    }
}

fn actions<F: Field>(f: &F, mats: &[MatrixJson], count: usize, dim: usize) -> Result<Vec<Mat<F>>> {
    if mats.len() != count {
        return Err(Error::InvalidModule(format!("{} action matrices for an algebra of dimension {count}", mats.len())));
    }
    mats.iter().map(|m| matrix_from_json(f, m, dim, dim)).collect()
}

/// Names accepted after `named:`.
pub const NAMED_ALGEBRAS: &[&str] = &["k", "kx2", "a2", "t2", "t3", "m2", "m4", "kc2", "kxy", "aus", "morita_b"];

pub fn named_algebra<F: Field>(f: &F, name: &str) -> Result<Algebra<F>> {
    use crate::constructions::named;
    Ok(match name {
        "k" => named::ground(f),
        "kx2" => named::dual_numbers(f),
        "a2" => named::a2(f),
        "t2" => named::triangular(f, 2),
        "t3" => named::triangular(f, 3),
        "m2" => named::matrices(f, 2),
        "m4" => named::matrices(f, 4),
        "kc2" => named::group_algebra_c2(f),
        "kxy" => named::kxy(f),
        "aus" => named::auslander(f),
        "morita_b" => named::morita_extension(f).small,
        other => {
            return Err(Error::Parse { line: 0, column: 0, message: format!("unknown named algebra {other:?}") })
        }
    })
}

/// Machine-readable summary of a minimal injective resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDump {
    pub module_dim: usize,
    pub cutoff: usize,
    pub terms: Vec<TermDump>,
    pub cosyzygy_dims: Vec<usize>,
    pub end: ResolutionEnd,
    pub dominant_dimension: ExtendedNat,
    pub nu_dominant_dimension: ExtendedNat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDump {
    pub degree: usize,
    pub dim: usize,
    /// Multiplicity of each indecomposable injective.
    pub multiplicities: Vec<usize>,
    pub projective: bool,
    pub nu_stably_projective: bool,
}

impl ResolutionDump {
    pub fn new<F: Field>(r: &InjectiveResolution<F>, cutoff: usize) -> Result<Self> {
        let cd = r.module.algebra().class_data()?;
        let terms = r
            .terms
            .iter()
            .zip(&r.term_multiplicities)
            .enumerate()
            .map(|(n, (t, mult))| {
                let present = |good: &dyn Fn(usize) -> bool| mult.iter().enumerate().all(|(c, &k)| k == 0 || good(c));
                TermDump {
                    degree: n,
                    dim: t.dim(),
                    multiplicities: mult.clone(),
                    projective: cd.self_injective || present(&|c| cd.injective_is_projective[c]),
                    nu_stably_projective: cd.self_injective || present(&|c| cd.injective_is_nu_stable(c)),
                }
            })
            .collect();
        Ok(ResolutionDump {
            module_dim: r.module.dim(),
            cutoff,
            terms,
            cosyzygy_dims: r.cosyzygies.iter().map(Module::dim).collect(),
            end: r.end,
            dominant_dimension: r.module.dominant_dimension(cutoff)?,
            nu_dominant_dimension: r.module.nu_dominant_dimension(cutoff)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named;
    use crate::linalg::{PrimeField, Rationals};

    #[test]
    fn algebra_round_trip() {
        let f = Rationals;
        let a = named::auslander(&f);
        let j = AlgebraJson::from_algebra(&a);
        let text = serde_json::to_string(&j).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        let b = back.to_algebra(&f).unwrap();
        assert_eq!(b.structure(), a.structure());
        assert_eq!(AlgebraJson::from_algebra(&b), j);
        assert_eq!(back.to_algebra(&PrimeField::new(5).unwrap()).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn integer_entries_and_prime_fields() {
        let text = r#"{"field": {"prime": 3}, "dim": 1, "structure": [[[1]]], "unit": [4]}"#;
        let j: AlgebraJson = serde_json::from_str(text).unwrap();
        let a = j.to_algebra(&PrimeField::new(3).unwrap()).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(serde_json::to_string(&FieldJson::from_spec(FieldSpec::Rationals)).unwrap(), "\"Q\"");
    }

    #[test]
    fn module_round_trip() {
        let f = Rationals;
        let a = named::a2(&f);
        let j = ModuleJson::from_module(&Module::regular(&a), AlgebraRef::Inline(Box::new(AlgebraJson::from_algebra(&a))));
        let text = serde_json::to_string(&j).unwrap();
        let back: ModuleJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        let mut res = Resolver::new(f);
        let m2 = res.module(&back, Path::new(".")).unwrap();
        assert_eq!(m2.action().len(), 3);
        assert_eq!(ModuleJson::from_module(&m2, back.algebra.clone()), j);
    }

    #[test]
    fn named_references_are_shared() {
        let mut res = Resolver::new(Rationals);
        let a = res.algebra("named:kx2", Path::new(".")).unwrap();
        let b = res.algebra("named:kx2", Path::new(".")).unwrap();
        assert!(a.ptr_eq(&b));
        assert!(res.algebra("named:nope", Path::new(".")).is_err());
    }
}
