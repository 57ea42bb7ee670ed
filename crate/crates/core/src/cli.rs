//! Command-line front end. `run` parses arguments and returns the exit code
//! with the captured output, so the binary stays a thin wrapper.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::presentation_for;
use crate::error::{Error, Result};
use crate::gamma::{build_generators, DEFAULT_MAX_ORDER};
use crate::group_spec::GroupSpec;
use crate::holonomy;
use crate::json::matrix_rows;
use crate::report::{self, certificates_text, check_bound, Options, SCHEMA_ID};

pub const MAX_ORDER_ENV: &str = "BRAIDCRYST_MAX_ORDER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CERTIFICATE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Gap,
}

#[derive(Debug, Parser)]
#[command(
    name = "braidcryst",
    version,
    about = "Crystallographic braid quotients and the flat manifolds they define"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest holonomy order accepted [default: 64, or $BRAIDCRYST_MAX_ORDER].
    #[arg(long, global = true)]
    max_order: Option<u64>,

    /// Print large matrices and every basis vector in text output.
    #[arg(long, global = true)]
    full: bool,

    /// Skip the certificates (basis, torsion, relations).
    #[arg(long, global = true)]
    no_verify: bool,

    /// Record per-stage timings.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: construction, certificates, holonomy and verdicts.
    Analyze { spec: String },
    /// Basis and torsion certificates only.
    Verify { spec: String },
    /// Finite presentation (cyclic odd holonomy).
    Present { spec: String },
    /// Holonomy matrices over the lattice basis.
    Matrix { spec: String },
    /// Normal form of a braid word such as "s1 s2 S1".
    Element { n: usize, word: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Runs with the bound override taken from the process environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(MAX_ORDER_ENV).ok())
}

pub fn run_with_env<I, T>(args: I, env_max_order: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli, env_max_order) {
        Ok(o) => o,
        Err(e) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn max_order(cli: &Cli, env: Option<String>) -> Result<u64> {
    if let Some(m) = cli.max_order {
        return Ok(m);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("{MAX_ORDER_ENV} is not a number: {v:?}"))),
        None => Ok(DEFAULT_MAX_ORDER),
    }
}

fn no_gap(cli: &Cli) -> Result<()> {
    if cli.format == Format::Gap {
        return Err(Error::Usage("--format gap is only available for `present`".into()));
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn finish(stdout: String, failures: &[String]) -> Outcome {
    if failures.is_empty() {
        return Outcome::ok(stdout);
    }
    let mut stderr = String::new();
    for f in failures {
        stderr.push_str(&format!("certificate failed: {f}\n"));
    }
    Outcome {
        code: EXIT_CERTIFICATE,
        stdout,
        stderr,
    }
}

fn execute(cli: &Cli, env: Option<String>) -> Result<Outcome> {
    let bound = max_order(cli, env)?;
    match &cli.command {
        Command::Analyze { spec } => {
            no_gap(cli)?;
            let spec = GroupSpec::parse(spec)?;
            let r = report::analyze(
                &spec,
                Options {
                    max_order: bound,
                    verify: !cli.no_verify,
                    timings: cli.timings,
                },
            )?;
            let out = match cli.format {
                Format::Json => pretty(&r.to_json_value()),
                _ => r.to_text(cli.full),
            };
            Ok(finish(out, &r.failures))
        }
        Command::Verify { spec } => {
            no_gap(cli)?;
            let spec = GroupSpec::parse(spec)?;
            let r = report::verify(&spec, bound)?;
            let out = match cli.format {
                Format::Json => pretty(&serde_json::to_value(&r).expect("report serializes")),
                _ => format!(
                    "group:        {}\nconstruction: {}\n{}",
                    r.spec,
                    r.group.description,
                    certificates_text(&r.certificates)
                ),
            };
            Ok(finish(out, &r.failures))
        }
        Command::Present { spec } => {
            let spec = GroupSpec::parse(spec)?;
            check_bound(&spec, bound)?;
            let p = presentation_for(&spec)?;
            let mut failures = Vec::new();
            let held = (!cli.no_verify).then(|| p.failing_relations());
            if let Some(bad) = &held {
                failures.extend(bad.iter().map(|i| format!("relation {} does not hold", i + 1)));
            }
            let out = match cli.format {
                Format::Gap => p.to_gap(),
                Format::Text => p.to_text(),
                Format::Json => {
                    let relations: Vec<String> =
                        p.to_text().lines().skip(2).map(|l| l.trim().to_string()).collect();
                    pretty(&json!({
                        "schema": SCHEMA_ID,
                        "spec": spec.to_string(),
                        "generators": p.generator_names(),
                        "relations": relations,
                        "all_hold": held.map(|b| b.is_empty()),
                    }))
                }
            };
            Ok(finish(out, &failures))
        }
        Command::Matrix { spec } => {
            no_gap(cli)?;
            let spec = GroupSpec::parse(spec)?;
            check_bound(&spec, bound)?;
            let (labels, mats) = if spec.is_cyclic_odd() {
                let h = holonomy::holonomy_matrix_for(&spec)?;
                let labels: Vec<String> = h.basis.entries().iter().map(|e| e.label()).collect();
                (labels, vec![("delta".to_string(), h.matrix)])
            } else {
                let gamma = build_generators(&spec)?;
                let labels = gamma.lattice_basis().iter().map(|b| b.label.clone()).collect();
                (labels, holonomy::section_matrices(&gamma)?)
            };
            let out = match cli.format {
                Format::Json => {
                    let ms: Vec<_> = mats
                        .iter()
                        .map(|(s, m)| json!({ "section": s, "matrix": matrix_rows(m) }))
                        .collect();
                    pretty(&json!({
                        "schema": SCHEMA_ID,
                        "spec": spec.to_string(),
                        "basis_labels": labels,
                        "matrices": ms,
                    }))
                }
                _ => {
                    let mut o = format!("basis: {}\n", labels.join(", "));
                    for (s, m) in &mats {
                        o.push_str(&format!("\n{s}:\n{m}\n"));
                    }
                    o
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Element { n, word } => {
            no_gap(cli)?;
            let r = report::element(*n, word)?;
            let out = match cli.format {
                Format::Json => pretty(&serde_json::to_value(&r).expect("element serializes")),
                _ => r.to_text(),
            };
            Ok(Outcome::ok(out))
        }
    }
}
