//! Command-line front end.
//!
//! Single-value results (booleans, rationals, vectors) are printed as their
//! literal text: `true`, `-1/2`, `(0,-1,0)`. Structured results are JSON
//! documents. Coordinates are 0-indexed everywhere.
//!
//! Exit codes: 0 success, 1 input or parse error, 2 dimension or
//! precondition error, 3 `--assert` given and the boolean result is false.

pub mod document;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::kleene;
use crate::polytope::{self, projectivise};
use crate::residuation::{self, Polytope};
use crate::semiring::{Flavor, TropVector};
pub use document::{parse_matrix_document, MatrixDocument, Role};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_ASSERT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "tropgeo", version, about = "Exact max-plus / min-plus convexity toolkit")]
struct Cli {
    /// Print a human-readable summary to stderr.
    #[arg(long, global = true)]
    verbose: bool,

    /// Exit with status 3 when the command's boolean result is false.
    #[arg(long, global = true)]
    assert: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FileArg {
    /// JSON matrix document.
    #[arg(long)]
    file: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Residuation bracket ⟨x|y⟩ = min_i (y_i − x_i).
    Bracket {
        #[arg(long, allow_hyphen_values = true)]
        x: TropVector,
        #[arg(long, allow_hyphen_values = true)]
        y: TropVector,
    },
    /// Whether x dominates y (or every generator of --file) at coordinate i.
    Dominates {
        #[arg(long, allow_hyphen_values = true)]
        x: TropVector,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "file", required_unless_present = "file")]
        y: Option<TropVector>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        i: usize,
    },
    /// Span membership of a point.
    Member {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, allow_hyphen_values = true)]
        y: TropVector,
    },
    /// Remove redundant generators.
    Reduce {
        #[command(flatten)]
        file: FileArg,
    },
    /// Projectivise the generators, or with --y give the principal projection of y.
    Project {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "emit_csv")]
        y: Option<TropVector>,
        /// Write projectivised generators as CSV (needs 3 coordinates).
        #[arg(long)]
        emit_csv: bool,
    },
    /// Set equality of two polytopes.
    Equal {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        other: PathBuf,
    },
    /// Whether a square matrix is a Kleene star.
    StarCheck {
        /// Overrides the document's flavor.
        #[arg(long)]
        flavor: Option<Flavor>,
        #[command(flatten)]
        file: FileArg,
    },
    /// Min-plus dominator of a max-plus polytope.
    Dominator {
        #[command(flatten)]
        file: FileArg,
    },
    /// Max-plus dominator of a min-plus polytope.
    DominatorDual {
        #[command(flatten)]
        file: FileArg,
    },
    /// Min-plus convex hull of a max-plus polytope.
    HullMin {
        #[command(flatten)]
        file: FileArg,
    },
    /// Whether a max-plus polytope is min-plus convex.
    ConvexCheck {
        #[command(flatten)]
        file: FileArg,
    },
    /// Polytrope classification with dominator and witness.
    Classify {
        #[command(flatten)]
        file: FileArg,
    },
    /// ρ_A(r) = A ⊗ (−r)ᵀ.
    DualRho {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, allow_hyphen_values = true)]
        r: TropVector,
        /// Reject r outside the max-plus row space.
        #[arg(long)]
        checked: bool,
    },
    /// χ_A(c) = (−c)ᵀ ⊗ A.
    DualChi {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, allow_hyphen_values = true)]
        c: TropVector,
        /// Reject c outside the max-plus column space.
        #[arg(long)]
        checked: bool,
    },
    /// Check that the max-plus dominator is the negated transpose of the min-plus one.
    DomRelation {
        #[command(flatten)]
        file: FileArg,
    },
    /// Random Euclidean midpoint test of the span.
    SampleMidpoints {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, env = "TROPGEO_SEED", default_value_t = 0)]
        seed: u64,
        /// Probe segments derived from the dominator witness first.
        #[arg(long)]
        guided: bool,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidRational(_) | Error::ZeroDenominator => Failure::Input(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

enum Output {
    Flag(bool),
    Text(String),
    Json(serde_json::Value),
    /// A document plus the boolean that `--assert` checks.
    Checked(serde_json::Value, bool),
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut stderr = String::new();
    match execute(&cli.command, cli.verbose.then_some(&mut stderr)) {
        Ok(output) => {
            let (mut stdout, verdict) = match output {
                Output::Flag(b) => (b.to_string(), Some(b)),
                Output::Text(t) => (t, None),
                Output::Json(v) => (pretty(&v), None),
                Output::Checked(v, b) => (pretty(&v), Some(b)),
            };
            stdout.push('\n');
            let code = if cli.assert && verdict == Some(false) { EXIT_ASSERT } else { EXIT_OK };
            if code == EXIT_ASSERT {
                stderr.push_str("assertion failed: result is false\n");
            }
            Outcome { code, stdout, stderr }
        }
        Err(Failure::Input(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            Outcome { code: EXIT_INPUT, stdout: String::new(), stderr }
        }
        Err(Failure::Precondition(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            Outcome { code: EXIT_PRECONDITION, stdout: String::new(), stderr }
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn load(path: &PathBuf) -> Result<MatrixDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_matrix_document(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_polytope(path: &PathBuf) -> Result<Polytope, Failure> {
    Ok(load(path)?.polytope())
}

fn strings<'a>(vs: impl IntoIterator<Item = &'a TropVector>) -> Vec<String> {
    vs.into_iter().map(ToString::to_string).collect()
}

fn execute(command: &Command, mut log: Option<&mut String>) -> Result<Output, Failure> {
    let mut note = |msg: String| {
        if let Some(buf) = log.as_deref_mut() {
            let _ = writeln!(buf, "{msg}");
        }
    };
    let out = match command {
        Command::Bracket { x, y } => {
            let b = residuation::bracket(x, y)?;
            note(format!("<{x}|{y}> = {b}"));
            Output::Text(b.to_string())
        }
        Command::Dominates { x, y, file, i } => {
            let result = match (y, file) {
                (Some(y), _) => residuation::dominates_at(x, y, *i)?,
                (None, Some(path)) => residuation::dominates_polytope_at(x, &load_polytope(path)?, *i)?,
                (None, None) => unreachable!("clap requires --y or --file"),
            };
            note(format!("{x} dominates at coordinate {i}: {result}"));
            Output::Flag(result)
        }
        Command::Member { file, y } => {
            let p = load_polytope(&file.file)?;
            let result = residuation::member(&p, y)?;
            note(format!("{y} in {} span of {} generators: {result}", p.flavor(), p.num_generators()));
            Output::Flag(result)
        }
        Command::Reduce { file } => {
            let p = load_polytope(&file.file)?;
            let r = polytope::reduce_generators(&p);
            note(format!("kept {} of {} generators", r.num_generators(), p.num_generators()));
            Output::Json(generators_doc(&r).to_value())
        }
        Command::Project { file, y, emit_csv } => {
            let p = load_polytope(&file.file)?;
            if let Some(y) = y {
                let proj = residuation::principal_projection(&p, y)?;
                note(format!("projection of {y}: {proj} (member: {})", &proj == y));
                Output::Text(proj.to_string())
            } else {
                let points = p.generators().iter().map(projectivise).collect::<Result<Vec<_>, _>>()?;
                if *emit_csv {
                    if p.dim() != 3 {
                        return Err(Failure::Precondition(format!(
                            "--emit-csv needs 3 coordinates (2-D projectivised points), found {}",
                            p.dim()
                        )));
                    }
                    let mut csv = String::from("x,y");
                    for pt in &points {
                        let c = pt.coords();
                        let _ = write!(csv, "\n{},{}", c.get(0), c.get(1));
                    }
                    Output::Text(csv)
                } else {
                    Output::Json(json!({ "points": strings(points.iter().map(|pt| pt.coords())) }))
                }
            }
        }
        Command::Equal { file, other } => {
            let result = polytope::polytope_equal(&load_polytope(&file.file)?, &load_polytope(other)?)?;
            Output::Flag(result)
        }
        Command::StarCheck { flavor, file } => {
            let doc = load(&file.file)?;
            let flavor = flavor.unwrap_or(doc.flavor);
            let result = kleene::is_kleene_star(flavor, &doc.matrix)?;
            note(format!("{} is a {flavor} Kleene star: {result}", doc.matrix));
            Output::Flag(result)
        }
        Command::Dominator { file } => {
            let d = kleene::dominator(&load_polytope(&file.file)?)?;
            Output::Json(star_doc(&d).to_value())
        }
        Command::DominatorDual { file } => {
            let d = kleene::dominator_dual(&load_polytope(&file.file)?)?;
            Output::Json(star_doc(&d).to_value())
        }
        Command::HullMin { file } => {
            let hull = kleene::min_plus_hull(&load_polytope(&file.file)?)?;
            Output::Json(generators_doc(&hull).to_value())
        }
        Command::ConvexCheck { file } => Output::Flag(kleene::is_min_plus_convex(&load_polytope(&file.file)?)?),
        Command::Classify { file } => {
            let c = kleene::classify(&load_polytope(&file.file)?)?;
            note(format!(
                "polytrope: {}; dominator {}; witness {}",
                c.is_polytrope,
                c.dominator.matrix(),
                c.witness.as_ref().map_or("none".to_string(), ToString::to_string)
            ));
            Output::Checked(
                json!({
                    "is_polytrope": c.is_polytrope,
                    "is_min_plus_convex": c.is_min_plus_convex,
                    "witness": c.witness.as_ref().map(ToString::to_string),
                    "witness_column": c.witness_column,
                    "dominator": star_doc(&c.dominator).to_value(),
                }),
                c.is_polytrope,
            )
        }
        Command::DualRho { file, r, checked } => {
            let a = load(&file.file)?.matrix;
            let out = if *checked { kleene::duality_rho_checked(&a, r)? } else { kleene::duality_rho(&a, r)? };
            Output::Text(out.to_string())
        }
        Command::DualChi { file, c, checked } => {
            let a = load(&file.file)?.matrix;
            let out = if *checked { kleene::duality_chi_checked(&a, c)? } else { kleene::duality_chi(&a, c)? };
            Output::Text(out.to_string())
        }
        Command::DomRelation { file } => Output::Flag(kleene::verify_dominator_relation(&load_polytope(&file.file)?)?),
        Command::SampleMidpoints { file, trials, seed, guided } => {
            let p = load_polytope(&file.file)?;
            let report = if *guided {
                kleene::guided_midpoint_search(&p, *trials, *seed)?
            } else {
                polytope::sample_euclidean_midpoints(&p, *trials, *seed)?
            };
            note(format!("{} violations in {} trials (seed {seed})", report.violations.len(), report.trials_run));
            let clean = report.violations.is_empty();
            Output::Checked(
                json!({
                    "trials": report.trials_run,
                    "seed": seed,
                    "guided": guided,
                    "violations": strings(&report.violations),
                }),
                clean,
            )
        }
    };
    Ok(out)
}

fn generators_doc(p: &Polytope) -> MatrixDocument {
    MatrixDocument::new(p.flavor(), Role::GeneratorsAsColumns, p.generator_matrix().clone())
}

fn star_doc(k: &kleene::KleeneStar) -> MatrixDocument {
    MatrixDocument::new(k.flavor(), Role::Matrix, k.matrix().clone())
}
