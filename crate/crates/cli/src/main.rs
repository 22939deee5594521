mod commands;
mod pretty;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use bisector_core::oracle::{run_check, CheckId, Policy};
use bisector_core::{Error, Field, FieldSpec, Fp, Line, LinePair, Pencil, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::commands::*;
use crate::svg::Scene;

#[derive(Parser)]
#[command(
    name = "bisector",
    version,
    about = "Pencils of conics, asymptotic pencils and bisector fields"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Scalar field: Q or F<p> for an odd prime p.
    #[arg(long, global = true, default_value = "Q")]
    field: FieldSpec,
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented plain-text summary instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Hyperbola, parabola or ellipse, and whether it is degenerate.
    Classify { conic: String },
    /// Reducible quadratics differing from the conic by a constant.
    Asymptotes { conic: String },
    /// Hyperbolas, asymptotic pencil, triviality and quadrilateral of a pencil.
    Pencil { f1: String, f2: String },
    /// Common midpoint of a line against conics, or bisection within an arrangement.
    Bisect {
        /// Treat every argument as a line pair and report each line.
        #[arg(long)]
        arrangement: bool,
        #[arg(required = true, num_args = 1..)]
        items: Vec<String>,
    },
    /// Whether a line pair belongs to the asymptotic pencil of F1, F2.
    FieldMembership {
        f1: String,
        f2: String,
        pair: String,
    },
    /// The involution on a line induced by the pencil of F1, F2.
    Desargues {
        f1: String,
        f2: String,
        line: String,
    },
    /// Run oracle checks over a finite field.
    Check {
        /// Check ids, or `all`.
        #[arg(required = true, num_args = 1..)]
        ids: Vec<String>,
        /// Instances for sampled checks.
        #[arg(long)]
        count: Option<usize>,
    },
    /// SVG figure of a rational pencil, asymptotic pencil or arrangement.
    Render {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        /// Two conics, or line pairs for an arrangement.
        #[arg(required = true, num_args = 1..)]
        items: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pencil,
    Apencil,
    Arrangement,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_)
            | CliError::Core(
                Error::Parse(_)
                | Error::NotQuadratic
                | Error::NotALine
                | Error::InvalidField(_)
                | Error::UnknownCheck(_),
            ) => 2,
            CliError::Core(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
}

/// Output plus whether every requested check passed.
type Outcome = (Output, bool);

fn two<F: Field>(spec: &FieldSpec, f1: &str, f2: &str) -> Result<Pencil<F>, CliError> {
    let fs = parse_quadratics::<F>(spec, &[f1.to_string(), f2.to_string()])?;
    let [a, b]: [_; 2] = fs.try_into().expect("two conics");
    Ok(Pencil::new(a, b)?)
}

fn run_generic<F: Field>(spec: &FieldSpec, cmd: &Command) -> Result<Value, CliError> {
    Ok(match cmd {
        Command::Classify { conic } => {
            classify_report(&bisector_core::Quadratic::<F>::parse(spec, conic)?)
        }
        Command::Asymptotes { conic } => {
            asymptotes_report(&bisector_core::Quadratic::<F>::parse(spec, conic)?)
        }
        Command::Pencil { f1, f2 } => pencil_report(two::<F>(spec, f1, f2)?)?,
        Command::Bisect {
            arrangement: true,
            items,
        } => arrangement_json(&parse_pairs::<F>(spec, items)?),
        Command::Bisect {
            arrangement: false,
            items,
        } => {
            let (line, conics) = items.split_first().expect("clap requires one item");
            if conics.is_empty() {
                return Err(CliError::Usage(
                    "bisect takes a line followed by at least one conic".into(),
                ));
            }
            bisect_report(
                &Line::<F>::parse(spec, line)?,
                &parse_quadratics::<F>(spec, conics)?,
            )
        }
        Command::FieldMembership { f1, f2, pair } => {
            membership_report(two::<F>(spec, f1, f2)?, &LinePair::parse(spec, pair)?)?
        }
        Command::Desargues { f1, f2, line } => {
            desargues_report(&two::<F>(spec, f1, f2)?, &Line::parse(spec, line)?)?
        }
        Command::Check { .. } | Command::Render { .. } => unreachable!("dispatched separately"),
    })
}

fn check(
    spec: &FieldSpec,
    ids: &[String],
    count: Option<usize>,
    seed: Option<u64>,
) -> Result<Outcome, CliError> {
    let ids: Vec<CheckId> = if ids.iter().any(|s| s == "all") {
        if ids.len() > 1 {
            return Err(CliError::Usage(
                "`all` cannot be combined with other check ids".into(),
            ));
        }
        CheckId::ALL
            .into_iter()
            .filter(|id| *id != CheckId::Example3_6 || spec.order() == Some(3))
            .collect()
    } else {
        ids.iter()
            .map(|s| s.parse())
            .collect::<Result<_, Error>>()?
    };
    let mut reports = Vec::new();
    let mut passed = true;
    for id in ids {
        if id == CheckId::Example3_6 && spec.order() != Some(3) {
            return Err(CliError::Usage("example-3.6 needs --field F3".into()));
        }
        let policy = match id.default_policy(spec) {
            Policy::Randomized { seed: s, count: c } => Policy::Randomized {
                seed: seed.unwrap_or(s),
                count: count.unwrap_or(c),
            },
            exhaustive => exhaustive,
        };
        let report = run_check(id, spec, policy)?;
        passed &= report.passed();
        reports.push(serde_json::to_value(&report).expect("reports serialize"));
    }
    Ok((
        Output::Json(json!({"passed": passed, "reports": reports})),
        passed,
    ))
}

fn render(
    spec: &FieldSpec,
    kind: Kind,
    samples: usize,
    items: &[String],
) -> Result<Outcome, CliError> {
    if spec.is_finite() {
        return Err(Error::Domain(format!(
            "rendering needs the rationals; {spec} has no real picture"
        ))
        .into());
    }
    let scene = match kind {
        Kind::Pencil | Kind::Apencil => {
            let [f1, f2] = items else {
                return Err(CliError::Usage(format!(
                    "--kind pencil/apencil takes two conics, got {}",
                    items.len()
                )));
            };
            let p = two::<Rational>(spec, f1, f2)?;
            if matches!(kind, Kind::Pencil) {
                Scene::Pencil(p)
            } else {
                Scene::AsymptoticPencil(p)
            }
        }
        Kind::Arrangement => Scene::Arrangement(parse_pairs(spec, items)?),
    };
    Ok((Output::Text(svg::render(&scene, samples)), true))
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let spec = &cli.global.field;
    match &cli.command {
        Command::Check { ids, count } => check(spec, ids, *count, cli.global.seed),
        Command::Render {
            kind,
            samples,
            items,
        } => render(spec, *kind, *samples, items),
        cmd => {
            let value = match spec {
                FieldSpec::Rationals => run_generic::<Rational>(spec, cmd)?,
                FieldSpec::Prime(_) => run_generic::<Fp>(spec, cmd)?,
            };
            Ok((Output::Json(value), true))
        }
    }
}

fn emit(cli: &Cli, output: Output) -> Result<(), CliError> {
    let mut text = match output {
        Output::Json(v) if cli.global.pretty => pretty::summary(&v),
        Output::Json(v) => v.to_string(),
        Output::Text(t) => t,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.global.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(&cli).and_then(|(out, passed)| emit(&cli, out).map(|()| passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("bisector: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
