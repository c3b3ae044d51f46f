mod commands;
mod model;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use model::ModelArgs;

/// Balleans defined by ideals: balls, hyperballs, components, maps and
/// theorem suites, reported as JSON on standard output.
#[derive(Parser, Debug)]
#[command(name = "ballean", version)]
struct Cli {
    /// Worker threads for bulk sweeps; output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the model's family is a proper ideal.
    Validate {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        horizon: Option<u32>,
    },
    /// Ball B(x, K) of an ideal ballean.
    Ball {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        horizon: Option<u32>,
        #[arg(long, value_enum)]
        flavor: ElementFlavor,
        #[arg(long)]
        center: u32,
        /// Radius as a JSON array.
        #[arg(long)]
        radius: String,
    },
    /// Hyperball exp B(A, K) in closed form.
    Expball {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        horizon: Option<u32>,
        #[arg(long, value_enum)]
        flavor: HyperFlavor,
        /// Centre as a JSON array.
        #[arg(long)]
        center: String,
        /// Radius as a JSON array.
        #[arg(long)]
        radius: String,
    },
    /// Connected components of a ballean on a finite model.
    Components {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        ballean: ComponentBallean,
    },
    /// Number of connected components by one counting method.
    Dsc {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        flavor: DscFlavor,
        #[arg(long, value_enum, default_value = "components")]
        method: Method,
    },
    /// Morphism properties of a named map.
    Checkmap {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        map: MapName,
        /// Point for the U_x / I_x restrictions and the U_{≥x} copy.
        #[arg(long, default_value_t = 0)]
        x: u32,
        /// Naturals window, or the k-cube horizon.
        #[arg(long)]
        horizon: Option<u32>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "coarse,proper,asym,equiv")]
        props: Vec<Prop>,
    },
    /// A named theorem suite on one model, or in bulk over all ideals.
    Suite {
        #[arg(long, value_enum)]
        name: SuiteName,
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        horizon: Option<u32>,
        #[arg(long, default_value_t = 0)]
        x: u32,
        /// Element ballean for the thin suite.
        #[arg(long, value_enum, default_value = "pointIdeal")]
        variant: VariantArg,
        /// Run over every valid ideal on 1..=N points instead of one model.
        #[arg(long)]
        bulk: Option<u32>,
        /// Seeded formula mutation, by name.
        #[arg(long)]
        fault: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "camelCase")]
enum ElementFlavor {
    PointIdeal,
    Iary,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "camelCase")]
enum HyperFlavor {
    PointIdeal,
    Iary,
    Cartesian,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "camelCase")]
enum ComponentBallean {
    PointIdeal,
    Iary,
    ExpPointIdeal,
    ExpIary,
    Cartesian,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "camelCase")]
enum DscFlavor {
    PointIdeal,
    Iary,
    Cartesian,
    ExpStarPointIdeal,
    ExpStarIary,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "camelCase")]
enum Method {
    Components,
    Quotient,
    Crt,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "camelCase")]
enum MapName {
    /// id: X_I → X_I-ary.
    Identity,
    /// j = exp id: exp(X_I) → exp(X_I-ary).
    ExpIdentity,
    /// j: exp(X_I-ary) → C(X, I).
    CartesianIdentity,
    /// i = id^♭: X_I^♭ → X_I-ary^♭.
    FlatIdentity,
    /// x ↦ X \ {x} from X_I into exp(X_I).
    Complement,
    /// A ↦ X \ A on the non-empty bounded sets of X_I.
    ComplementOfBounded,
    /// j restricted to U_x.
    FilterRestriction,
    /// j restricted to I_x.
    IdealRestriction,
    /// Odd/even coding of exp(ω_K) into exp(ω_K-ary).
    OmegaEmbedding,
    /// The copy of C(ω, K) onto U_{≥x}.
    FilterCopy,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "camelCase")]
enum Prop {
    Coarse,
    Proper,
    Injective,
    Surjective,
    Embedding,
    Asym,
    Equiv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "camelCase")]
enum SuiteName {
    Thin,
    Dsc,
    Maps,
    Kcubes,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "camelCase")]
enum VariantArg {
    PointIdeal,
    Iary,
}

/// Bad input or an unsupported model; reported as JSON with exit status 2.
#[derive(Debug)]
pub struct Failure {
    pub kind: String,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            kind: "input".into(),
            message: message.into(),
        }
    }
}

impl From<ballean_core::error::Error> for Failure {
    fn from(e: ballean_core::error::Error) -> Self {
        let debug = format!("{e:?}");
        let kind = debug
            .split(|c: char| !c.is_alphanumeric())
            .next()
            .unwrap_or_default()
            .to_string();
        Failure {
            kind,
            message: e.to_string(),
        }
    }
}

/// JSON output plus whether the answer is positive.
pub struct Output {
    pub value: Value,
    pub positive: bool,
}

impl Output {
    pub fn data(value: Value) -> Self {
        Output { value, positive: true }
    }
}

fn emit(value: &Value) {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = serde_json::to_writer_pretty(&mut out, value);
    let _ = writeln!(out);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            // Standard output carries JSON only; help and usage go to stderr.
            eprint!("{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => {
                    emit(&json!({"error": {"kind": "usage", "message": e.kind().to_string()}}));
                    ExitCode::from(2)
                }
            };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("cannot configure {jobs} worker threads: {e}");
        }
    }
    match commands::run(cli.command) {
        Ok(out) => {
            emit(&out.value);
            if out.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure { kind, message }) => {
            eprintln!("error: {message}");
            emit(&json!({"error": {"kind": kind, "message": message}}));
            ExitCode::from(2)
        }
    }
}
