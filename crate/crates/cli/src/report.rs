//! Report envelope, output formats and the exit-code contract.

use std::fmt::Write as _;

use domdim::homology::ExtendedNat;
use serde::Serialize;
use serde_json::{json, Value as Json};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_THEOREM: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

/// How a command's result should be reflected in the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Ok,
    HypothesisFailed,
    Fail,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => EXIT_OK,
            Outcome::HypothesisFailed => EXIT_HYPOTHESIS,
            Outcome::Fail => EXIT_THEOREM,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub command: String,
    pub inputs: Vec<String>,
    pub cutoff: usize,
    pub seed: u64,
    pub field: String,
}

/// A command result: `{"header": ..., "result": ...}`.
#[derive(Clone, Debug)]
pub struct Report {
    pub header: Header,
    pub result: Json,
    pub outcome: Outcome,
}

impl Report {
    pub fn to_json(&self) -> Json {
        json!({ "header": self.header, "outcome": self.outcome, "result": self.result })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Pretty,
}

pub fn render(value: &Json, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(value).expect("json"),
        Format::Pretty => serde_json::to_string_pretty(value).expect("json"),
        Format::Text => {
            let mut out = String::new();
            text(value, 0, &mut out);
            out
        }
    }
}

/// `dm`-style values print as `finite(1)`, `infinite(self_injective)`, ...
fn as_extended(v: &Json) -> Option<ExtendedNat> {
    if v.get("kind").is_some() {
        serde_json::from_value(v.clone()).ok()
    } else {
        None
    }
}

fn scalar(v: &Json) -> Option<String> {
    if let Some(e) = as_extended(v) {
        return Some(e.to_string());
    }
    match v {
        Json::Null => Some("-".into()),
        Json::Bool(b) => Some(b.to_string()),
        Json::Number(n) => Some(n.to_string()),
        Json::String(s) => Some(s.clone()),
        Json::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        Json::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| y.is_number()))) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn text(v: &Json, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Json::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        text(x, indent + 1, out);
                    }
                }
            }
        }
        Json::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        // first line of the nested block goes on the dash
                        let mut block = String::new();
                        text(x, indent + 1, &mut block);
                        out.push_str(&pad);
                        out.push_str("- ");
                        out.push_str(block.trim_start_matches(' '));
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

/// Maps an error chain to the exit-code contract.
pub fn error_exit_code(err: &anyhow::Error) -> i32 {
    use domdim::Error;
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::HypothesisFailed(_) => EXIT_HYPOTHESIS,
                Error::Parse { .. }
                | Error::Linalg(_)
                | Error::AssociativityViolation(..)
                | Error::UnitViolation(_)
                | Error::InvalidStructure(_)
                | Error::InfiniteDimensional(_)
                | Error::NonAdmissible(_)
                | Error::AlgebraMismatch
                | Error::FieldMismatch
                | Error::InvalidModule(_)
                | Error::NotIdempotent
                | Error::NotATrace
                | Error::InvalidSystem(_)
                | Error::InvalidExtension(_) => EXIT_PARSE,
                _ => EXIT_INTERNAL,
            };
        }
        if cause.downcast_ref::<serde_json::Error>().is_some() || cause.downcast_ref::<std::io::Error>().is_some() {
            return EXIT_PARSE;
        }
    }
    EXIT_INTERNAL
}

/// Compact name for an error, used in JSON error reports.
pub fn error_name(err: &anyhow::Error) -> String {
    err.chain()
        .find_map(|c| c.downcast_ref::<domdim::Error>())
        .map(|e| format!("{e:?}").split(['(', ' ', '{']).next().unwrap_or("Error").to_string())
        .unwrap_or_else(|| "Error".into())
}
