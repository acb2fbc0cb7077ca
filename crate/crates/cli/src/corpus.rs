//! The bundled example corpus: a manifest of commands with expected report fragments.

use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};

use crate::commands::{execute_in, CheckOptions, Request};
use crate::report::{Header, Outcome, Report};
use domdim::io::FieldJson;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Paper,
    Derived,
    Trivial,
}

impl Provenance {
    fn name(self) -> &'static str {
        match self {
            Provenance::Paper => "paper",
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryOptions {
    pub e: Option<String>,
    pub n: Option<usize>,
    pub group: Option<String>,
    pub form: Option<String>,
    pub trace: Option<String>,
    pub samples: Option<usize>,
    pub max_dim: Option<usize>,
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    /// `analyze`, `check`, `dump-resolution` or `construct`.
    pub command: String,
    #[serde(default)]
    pub check: Option<String>,
    pub inputs: Vec<String>,
    #[serde(default)]
    pub options: EntryOptions,
    #[serde(default)]
    pub field: Option<FieldJson>,
    #[serde(default)]
    pub cutoff: Option<usize>,
    /// Dotted paths into the report (`outcome`, `result.dominant_dimension`, `result.maps.0.frobenius`) and their values.
    pub expected: serde_json::Map<String, Json>,
    pub provenance: Provenance,
    #[serde(default)]
    pub comment: String,
}

impl CorpusEntry {
    pub fn matches(&self, filter: Option<&str>) -> bool {
        match filter {
            None => true,
            Some(f) => self.provenance.name() == f || self.name.contains(f),
        }
    }

    fn request(&self, cutoff: usize, seed: u64) -> Request {
        let mut options = CheckOptions::with_defaults();
        let o = &self.options;
        options.e = o.e.clone();
        options.n = o.n;
        options.group = o.group.clone();
        options.form = o.form.clone();
        options.trace = o.trace.clone();
        options.samples = o.samples.unwrap_or(options.samples);
        options.max_dim = o.max_dim.unwrap_or(options.max_dim);
        options.degree = o.degree.unwrap_or(options.degree);
        Request {
            command: self.command.clone(),
            check: self.check.clone(),
            inputs: self.inputs.clone(),
            options,
            cutoff: self.cutoff.unwrap_or(cutoff),
            seed,
        }
    }
}

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn load(dir: &Path) -> anyhow::Result<Vec<CorpusEntry>> {
    let path = dir.join("corpus.json");
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let mut entries: Vec<CorpusEntry> =
        serde_json::from_str(&text).map_err(|e| domdim::Error::Parse {
            line: e.line(),
            column: e.column(),
            message: format!("{}: {e}", path.display()),
        })?;
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(entries)
}

fn lookup<'j>(v: &'j Json, path: &str) -> Option<&'j Json> {
    path.split('.').try_fold(v, |cur, key| match cur {
        Json::Array(items) => key.parse::<usize>().ok().and_then(|i| items.get(i)),
        _ => cur.get(key),
    })
}

/// Runs one entry and returns the full report plus mismatching paths.
pub fn run_entry(entry: &CorpusEntry, dir: &Path, cutoff: usize, seed: u64) -> (Report, Vec<Json>) {
    let req = entry.request(cutoff, seed);
    let spec = entry.field.as_ref().map_or(Ok(domdim::linalg::FieldSpec::Rationals), FieldJson::spec);
    let header = Header {
        command: format!("{} {}", req.command, req.check.clone().unwrap_or_default()).trim().to_string(),
        inputs: req.inputs.clone(),
        cutoff: req.cutoff,
        seed,
        field: spec.as_ref().map(ToString::to_string).unwrap_or_else(|_| "?".into()),
    };
    let outcome = spec.map_err(anyhow::Error::from).and_then(|s| execute_in(s, dir, &req));
    let report = match outcome {
        Ok((result, outcome)) => Report { header, result, outcome },
        Err(e) => Report {
            header,
            result: json!({ "error": crate::report::error_name(&e), "message": format!("{e:#}") }),
            outcome: Outcome::Fail,
        },
    };
    let full = report.to_json();
    let mismatches = entry
        .expected
        .iter()
        .filter_map(|(path, want)| {
            let got = lookup(&full, path).cloned().unwrap_or(Json::Null);
            (got != *want).then(|| json!({ "path": path, "expected": want, "actual": got }))
        })
        .collect();
    (report, mismatches)
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryResult {
    pub name: String,
    pub provenance: Provenance,
    pub passed: bool,
    pub mismatches: Vec<Json>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<EntryResult>,
}

/// Runs the selected entries in parallel; results come back in name order.
pub fn run(entries: &[CorpusEntry], dir: &Path, filter: Option<&str>, cutoff: usize, seed: u64) -> Summary {
    let selected: Vec<&CorpusEntry> = entries.iter().filter(|e| e.matches(filter)).collect();
    let results = domdim::parallel::map(&selected, |e| {
        let (_, mismatches) = run_entry(e, dir, cutoff, seed);
        EntryResult { name: e.name.clone(), provenance: e.provenance, passed: mismatches.is_empty(), mismatches }
    });
    let passed = results.iter().filter(|r| r.passed).count();
    Summary { total: results.len(), passed, failed: results.len() - passed, entries: results }
}

impl Summary {
    pub fn table(&self) -> String {
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(4).max(4);
        let mut out = format!("{:<width$}  {:<10}  result\n", "name", "provenance");
        for e in &self.entries {
            out += &format!("{:<width$}  {:<10}  {}\n", e.name, e.provenance.name(), if e.passed { "pass" } else { "FAIL" });
            for m in &e.mismatches {
                out += &format!("    {}: expected {} got {}\n", m["path"].as_str().unwrap_or(""), m["expected"], m["actual"]);
            }
        }
        out += &format!("{} entries, {} passed, {} failed\n", self.total, self.passed, self.failed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dotted_lookup() {
        let v = json!({"result": {"maps": [{"ok": true}]}});
        assert_eq!(lookup(&v, "result.maps.0.ok"), Some(&json!(true)));
        assert_eq!(lookup(&v, "result.maps.1.ok"), None);
    }

    #[test]
    fn manifest_parses_and_names_are_unique() {
        let entries = load(&default_dir()).unwrap();
        let mut names: Vec<_> = entries.iter().map(|e| e.name.as_str()).collect();
        names.dedup();
        assert_eq!(names.len(), entries.len());
        assert!(entries.iter().all(|e| !e.expected.is_empty()));
        assert!(entries.iter().filter(|e| e.provenance == Provenance::Paper).all(|e| !e.comment.is_empty()));
    }
}
