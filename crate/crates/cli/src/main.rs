//! `domdim`: dominant dimensions, Frobenius bimodules and extensions of
//! finite-dimensional algebras from the command line.

mod commands;
mod corpus;
mod expr;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::bail;
use clap::{Args, Parser, Subcommand};
use domdim::homology::DEFAULT_CUTOFF;
use domdim::linalg::FieldSpec;
use serde_json::json;

use commands::{CheckOptions, Request};
use report::{Format, Header, Report};

#[derive(Parser, Debug)]
#[command(name = "domdim", version, about = "Dominant dimensions and Frobenius extensions of finite-dimensional algebras")]
struct Cli {
    /// Resolution terms inspected before a dimension is reported as at_least(cutoff).
    #[arg(long, global = true, default_value_t = DEFAULT_CUTOFF)]
    cutoff: usize,
    /// Seed for random sample modules.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Ground field: `Q` or a prime such as `5` or `F5`. Defaults to the first input file's field, else `Q`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Compact JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Indented JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of an algebra: radical layers, Cartan matrix, dm, ν-dm, Frobenius part.
    Analyze { input: String },
    /// Run a named check (thm11, thm12, muller, stp-tensor, splitext, corner, markov, frobenius, facts, ...).
    Check {
        name: String,
        inputs: Vec<String>,
        #[command(flatten)]
        options: CheckArgs,
    },
    /// Run the bundled corpus and compare against the recorded expectations.
    Corpus {
        /// Keep entries whose provenance equals, or whose name contains, this string.
        #[arg(long)]
        filter: Option<String>,
        /// Corpus directory holding corpus.json.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Evaluate a construction expression and print the result in the input JSON format.
    Construct { expr: String },
    /// Minimal injective resolution of a module (or the regular module of an algebra).
    DumpResolution { input: String },
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Idempotent for `corner`: labels (`e1+e2`) or coordinates (`[1,0,0]`).
    #[arg(long)]
    e: Option<String>,
    /// Matrix size for `triangular`.
    #[arg(long)]
    n: Option<usize>,
    /// Group for `skew`: `group:file.json` or `trivial:n`.
    #[arg(long)]
    group: Option<String>,
    /// Linear form on `C` for `markov`.
    #[arg(long)]
    form: Option<String>,
    /// Trace on `A` for `markov`.
    #[arg(long)]
    trace: Option<String>,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, default_value_t = 12)]
    max_dim: usize,
    #[arg(long, default_value_t = 3)]
    degree: usize,
}

impl From<CheckArgs> for CheckOptions {
    fn from(a: CheckArgs) -> Self {
        CheckOptions {
            e: a.e,
            n: a.n,
            group: a.group,
            form: a.form,
            trace: a.trace,
            samples: a.samples,
            max_dim: a.max_dim,
            degree: a.degree,
        }
    }
}

fn parse_field(s: &str) -> anyhow::Result<FieldSpec> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t.trim_start_matches(['F', 'f']).trim_start_matches("GF");
    match digits.parse::<u32>() {
        Ok(p) => {
            domdim::linalg::PrimeField::new(p).map_err(domdim::Error::from)?;
            Ok(FieldSpec::Prime(p))
        }
        Err(_) => bail!(domdim::Error::Parse { line: 0, column: 0, message: format!("unknown field {s:?}") }),
    }
}

/// The `--field` flag, else the field declared by the first plain JSON input, else `Q`.
fn choose_field(flag: Option<&str>, inputs: &[String]) -> anyhow::Result<FieldSpec> {
    if let Some(f) = flag {
        return parse_field(f);
    }
    if let Some(first) = inputs.first() {
        let p = Path::new(first);
        if p.is_file() {
            if let Some(spec) = domdim::io::peek_field(p).ok().flatten() {
                return Ok(spec);
            }
        }
    }
    Ok(FieldSpec::Rationals)
}

fn format_of(cli: &Cli) -> Format {
    if cli.pretty {
        Format::Pretty
    } else if cli.json {
        Format::Json
    } else {
        Format::Text
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let format = format_of(&cli);
    let (command, check, inputs, options) = match cli.command {
        Command::Corpus { filter, dir } => {
            let dir = dir.unwrap_or_else(corpus::default_dir);
            let entries = corpus::load(&dir)?;
            let summary = corpus::run(&entries, &dir, filter.as_deref(), cli.cutoff, cli.seed);
            let text = match format {
                Format::Text => summary.table(),
                f => report::render(&serde_json::to_value(&summary)?, f) + "\n",
            };
            print!("{text}");
            return Ok(if summary.failed == 0 { report::EXIT_OK } else { report::EXIT_THEOREM });
        }
        Command::Analyze { input } => ("analyze", None, vec![input], CheckOptions::with_defaults()),
        Command::Construct { expr } => ("construct", None, vec![expr], CheckOptions::with_defaults()),
        Command::DumpResolution { input } => ("dump-resolution", None, vec![input], CheckOptions::with_defaults()),
        Command::Check { name, inputs, options } => ("check", Some(name), inputs, options.into()),
    };
    let spec = choose_field(cli.field.as_deref(), &inputs)?;
    let req = Request { command: command.into(), check, inputs, options, cutoff: cli.cutoff, seed: cli.seed };
    let (result, outcome) = commands::execute_in(spec, Path::new("."), &req)?;
    let out = if command == "construct" {
        // the constructed object itself, so it can be fed back as an input file
        report::render(&result, if format == Format::Text { Format::Pretty } else { format })
    } else {
        let header = Header {
            command: format!("{command} {}", req.check.clone().unwrap_or_default()).trim().to_string(),
            inputs: req.inputs.clone(),
            cutoff: req.cutoff,
            seed: req.seed,
            field: spec.to_string(),
        };
        let report = Report { header, result, outcome };
        report::render(&report.to_json(), format)
    };
    print!("{out}");
    if format != Format::Text {
        println!();
    }
    Ok(outcome.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_errors = cli.json || cli.pretty;
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let code = report::error_exit_code(&e);
            if json_errors {
                println!("{}", json!({ "error": report::error_name(&e), "message": format!("{e:#}"), "exit_code": code }));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(code as u8)
        }
    }
}
