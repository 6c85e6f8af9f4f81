//! Command-line interface: parse a JSON problem document, dispatch to the
//! engines, and print exact results.

mod doc;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weylchi_core::{
    adjunction_series, bk_degree, build_root_system, chi_complete_intersection, curve_invariants,
    mixed_degree, selfcheck, weight_polytope, Error as CoreError, RationalPolytope,
    RepresentationSpec, RootSystem,
};

use doc::{resolve_targets, ProblemDocument, Target};

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn schema(message: String) -> CliError {
        CliError { code: 2, message }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        CliError {
            code: e.exit_code(),
            message: e.to_string(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "weylchi",
    version,
    about = "Exact intersection numbers and Euler characteristics on reductive groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// JSON problem document.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,

    /// Comma-separated representation (or polytope) names; defaults to the
    /// document's "reps" list.
    #[arg(long, global = true, value_delimiter = ',')]
    reps: Vec<String>,

    /// Comma-separated multiplicities for mixed-degree.
    #[arg(long, global = true, value_delimiter = ',')]
    multiplicities: Vec<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Print group dimension, rank, positive-root count, and Weyl order.
    Info,
    /// Print vertex and facet representations of the target weight polytopes.
    Polytope,
    /// Self-intersection degree of one hyperplane section.
    Degree,
    /// Polarized mixed degree for the targets with multiplicities.
    MixedDegree,
    /// Euler characteristic of the complete intersection of the targets.
    Chi,
    /// Euler characteristic, boundary count, and genus of the curve cut out
    /// by n-1 sections.
    Curve,
    /// Print the formal adjunction expansion for the targets.
    Adjunction,
    /// Run the built-in invariant suite.
    Check,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { output, failed }) => {
            print!("{output}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct Outcome {
    output: String,
    failed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            failed: false,
        }
    }
}

fn load_doc(cli: &Cli) -> Result<ProblemDocument, CliError> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| CliError::schema("--input <file> is required".into()))?;
    ProblemDocument::load(path)
}

fn build(doc: &ProblemDocument) -> Result<RootSystem, CliError> {
    let spec = doc.group_spec()?;
    Ok(build_root_system(&spec)?)
}

/// Weight polytope of a target, or the explicit polytope itself.
fn target_polytope(rs: &RootSystem, t: &Target) -> Result<RationalPolytope, CliError> {
    match t {
        Target::Rep(rep) => Ok(weight_polytope(rs, rep)?),
        Target::Polytope(_, p) => Ok(p.clone()),
    }
}

fn reps_only(targets: &[Target]) -> Result<Vec<RepresentationSpec>, CliError> {
    targets
        .iter()
        .map(|t| match t {
            Target::Rep(r) => Ok(r.clone()),
            Target::Polytope(name, _) => Err(CliError::schema(format!(
                "command needs representations, but \"{name}\" is an explicit polytope"
            ))),
        })
        .collect()
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Info => {
            let doc = load_doc(cli)?;
            let rs = build(&doc)?;
            let out = match cli.output {
                OutputFormat::Text => format!(
                    "rank k = {}\ndimension n = {}\npositive roots |R+| = {}\nWeyl order |W| = {}\n",
                    rs.rank(),
                    rs.group_dim(),
                    rs.num_positive_roots(),
                    rs.weyl_order()
                ),
                OutputFormat::Json => {
                    let v = json!({
                        "rank": rs.rank(),
                        "dimension": rs.group_dim(),
                        "positive_roots": rs.num_positive_roots(),
                        "weyl_order": rs.weyl_order().to_string(),
                    });
                    format!("{v}\n")
                }
            };
            Ok(Outcome::ok(out))
        }

        Command::Polytope => {
            let doc = load_doc(cli)?;
            let rs = build(&doc)?;
            let targets = resolve_targets(&doc, &cli.reps, rs.spec())?;
            let mut text = String::new();
            let mut values = Vec::new();
            for t in &targets {
                let p = target_polytope(&rs, t)?;
                match cli.output {
                    OutputFormat::Text => text.push_str(&render::text_polytope(t.name(), &p)),
                    OutputFormat::Json => values.push(render::json_polytope(t.name(), &p)),
                }
            }
            let out = match cli.output {
                OutputFormat::Text => text,
                OutputFormat::Json => format!("{}\n", Value::Array(values)),
            };
            Ok(Outcome::ok(out))
        }

        Command::Degree => {
            let doc = load_doc(cli)?;
            let rs = build(&doc)?;
            let targets = resolve_targets(&doc, &cli.reps, rs.spec())?;
            if targets.len() != 1 {
                return Err(CliError::schema(format!(
                    "degree takes exactly one target, got {}",
                    targets.len()
                )));
            }
            let p = target_polytope(&rs, &targets[0])?;
            let d = bk_degree(&rs, &p)?;
            let out = match cli.output {
                OutputFormat::Text => {
                    format!("degree({}) = {}\n", targets[0].name(), render::text_intersection(&d))
                }
                OutputFormat::Json => {
                    let v = json!({
                        "target": targets[0].name(),
                        "degree": render::json_intersection(&d),
                    });
                    format!("{v}\n")
                }
            };
            Ok(Outcome::ok(out))
        }

        Command::MixedDegree => {
            let doc = load_doc(cli)?;
            let rs = build(&doc)?;
            let targets = resolve_targets(&doc, &cli.reps, rs.spec())?;
            let mults: Vec<u32> = if !cli.multiplicities.is_empty() {
                cli.multiplicities.clone()
            } else if !doc.multiplicities.is_empty() {
                doc.multiplicities.clone()
            } else {
                vec![1; targets.len()]
            };
            if mults.len() != targets.len() {
                return Err(CliError::schema(format!(
                    "{} multiplicities for {} targets",
                    mults.len(),
                    targets.len()
                )));
            }
            let mut polys = Vec::new();
            for (t, &m) in targets.iter().zip(&mults) {
                polys.push((target_polytope(&rs, t)?, m));
            }
            let d = mixed_degree(&rs, &polys)?;
            let label = targets
                .iter()
                .zip(&mults)
                .map(|(t, m)| format!("{}^{}", t.name(), m))
                .collect::<Vec<_>>()
                .join(" ");
            let out = match cli.output {
                OutputFormat::Text => {
                    format!("mixed degree [{label}] = {}\n", render::text_intersection(&d))
                }
                OutputFormat::Json => {
                    let v = json!({
                        "targets": targets.iter().map(|t| t.name()).collect::<Vec<_>>(),
                        "multiplicities": mults,
                        "mixed_degree": render::json_intersection(&d),
                    });
                    format!("{v}\n")
                }
            };
            Ok(Outcome::ok(out))
        }

        Command::Chi => {
            let doc = load_doc(cli)?;
            let rs = build(&doc)?;
            let targets = resolve_targets(&doc, &cli.reps, rs.spec())?;
            let reps = reps_only(&targets)?;
            let chi = chi_complete_intersection(&rs, &reps)?;
            let labels: Vec<String> = targets.iter().map(|t| t.name().to_string()).collect();
            let out = match cli.output {
                OutputFormat::Text => render::chi_text(&chi, &labels),
                OutputFormat::Json => format!("{}\n", render::chi_json(&chi)),
            };
            Ok(Outcome::ok(out))
        }

        Command::Curve => {
            let doc = load_doc(cli)?;
            let rs = build(&doc)?;
            let targets = resolve_targets(&doc, &cli.reps, rs.spec())?;
            let reps = reps_only(&targets)?;
            let inv = curve_invariants(&rs, &reps)?;
            let out = match cli.output {
                OutputFormat::Text => format!(
                    "chi(C) = {}\nboundary points = {}\ngenus = {}\n",
                    inv.chi, inv.boundary_points, inv.genus
                ),
                OutputFormat::Json => {
                    let v = json!({
                        "chi": render::json_int(&inv.chi),
                        "boundary_points": render::json_int(&inv.boundary_points),
                        "genus": render::json_int(&inv.genus),
                    });
                    format!("{v}\n")
                }
            };
            Ok(Outcome::ok(out))
        }

        Command::Adjunction => {
            let doc = load_doc(cli)?;
            let rs = build(&doc)?;
            let targets = resolve_targets(&doc, &cli.reps, rs.spec())?;
            let terms = adjunction_series(targets.len(), rs.group_dim(), rs.rank())?;
            let labels: Vec<String> = targets.iter().map(|t| t.name().to_string()).collect();
            let out = match cli.output {
                OutputFormat::Text => {
                    let mut text = String::new();
                    for term in &terms {
                        let marker = if term.evaluable { "" } else { "   [symbolic]" };
                        text.push_str(&format!("{}{}\n", render::term_text(term, &labels), marker));
                    }
                    text
                }
                OutputFormat::Json => {
                    let v = Value::Array(terms.iter().map(render::term_json).collect());
                    format!("{v}\n")
                }
            };
            Ok(Outcome::ok(out))
        }

        Command::Check => {
            let suites: Vec<(String, Vec<selfcheck::CheckOutcome>)> = match &cli.input {
                Some(_) => {
                    let doc = load_doc(cli)?;
                    let rs = build(&doc)?;
                    let reps: Vec<RepresentationSpec> = if cli.reps.is_empty() && doc.reps.is_empty()
                    {
                        doc.representations
                            .iter()
                            .filter_map(|r| doc.representation(&r.name))
                            .collect()
                    } else {
                        let targets = resolve_targets(&doc, &cli.reps, rs.spec())?;
                        reps_only(&targets)?
                    };
                    vec![("group".to_string(), selfcheck::run(&rs, &reps))]
                }
                None => selfcheck::default_suite()?,
            };
            let mut failed = false;
            let mut text = String::new();
            let mut values = Vec::new();
            for (group, outcomes) in &suites {
                for o in outcomes {
                    failed |= !o.passed;
                    match cli.output {
                        OutputFormat::Text => text.push_str(&format!(
                            "[{group}] {}: {}{}\n",
                            o.name,
                            if o.passed { "PASS" } else { "FAIL" },
                            if o.passed {
                                String::new()
                            } else {
                                format!(" ({})", o.detail)
                            }
                        )),
                        OutputFormat::Json => values.push(json!({
                            "group": group,
                            "check": o.name,
                            "passed": o.passed,
                            "detail": o.detail,
                        })),
                    }
                }
            }
            let out = match cli.output {
                OutputFormat::Text => {
                    text.push_str(if failed {
                        "some checks FAILED\n"
                    } else {
                        "all checks passed\n"
                    });
                    text
                }
                OutputFormat::Json => format!("{}\n", Value::Array(values)),
            };
            Ok(Outcome {
                output: out,
                failed,
            })
        }
    }
}
