//! `pdx`: belief functions over Belnap-Dunn models from the command line.
//!
//! Every command prints a single JSON document on stdout. Failures print
//! `{"error": {...}}` and exit with 1 (bad input), 2 (update undefined) or
//! 3 (total conflict).

mod commands;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, Parser, Subcommand};
use serde_json::{json, Value};

use bdbelief::ConditioningMethod;

#[derive(Parser, Debug)]
#[command(
    name = "pdx",
    version,
    about = "Belief functions over Belnap-Dunn logic"
)]
struct Cli {
    /// Significant digits for printed numbers.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Query {
    /// Model file.
    #[arg(short, long)]
    model: PathBuf,
    /// Formula, e.g. "p & ~q".
    #[arg(short, long)]
    formula: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Four-valued verdict of a formula at each state.
    Eval {
        #[command(flatten)]
        query: Query,
        /// Only this state.
        #[arg(short, long)]
        state: Option<String>,
    },
    /// Positive and negative extensions of a formula.
    Ext(Query),
    /// bel⁺ and bel⁻ of a formula.
    Bel(Query),
    /// pl⁺ and pl⁻ of a formula.
    Pl(Query),
    /// Non-standard probability μ(|φ|⁺).
    Prob(Query),
    /// Condition the model's measures on a formula.
    Update {
        #[arg(short, long)]
        model: PathBuf,
        /// Formula whose positive extension is observed.
        #[arg(long)]
        on: String,
        #[arg(long, value_parser = parse_method)]
        method: ConditioningMethod,
        /// Write the updated model here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dempster's rule on two mass (or model) files.
    Combine {
        #[arg(long)]
        m1: PathBuf,
        #[arg(long)]
        m2: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Axiom reports for every measure in the model.
    Check {
        #[arg(short, long)]
        model: PathBuf,
        /// Largest family size for the k-monotonicity inequalities.
        #[arg(long, default_value_t = bdbelief::measures::DEFAULT_KMAX)]
        kmax: usize,
    },
    /// Compare the conditioning formulas with the Bayes-updated core.
    Oracle {
        #[arg(short, long)]
        model: PathBuf,
        #[arg(long)]
        on: String,
        /// Interior measures sampled from the core.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_method(text: &str) -> Result<ConditioningMethod, String> {
    text.parse().map_err(|e: bdbelief::Error| e.to_string())
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bdbelief::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(bdbelief::Error::Undefined { .. }) => 2,
            CliError::Core(bdbelief::Error::TotalConflict { .. }) => 3,
            _ => 1,
        }
    }

    fn to_json(&self) -> Value {
        use bdbelief::Error as E;
        let message = self.to_string();
        let body = match self {
            CliError::Io { path, .. } => json!({"kind": "io", "message": message, "path": path}),
            CliError::Usage(_) => json!({"kind": "usage", "message": message}),
            CliError::Core(err) => match err {
                E::Syntax { offset, .. } => {
                    json!({"kind": "syntax", "message": message, "offset": offset})
                }
                E::Undefined { gate, value } => {
                    json!({"kind": "undefined", "message": message, "gate": gate, "value": value})
                }
                E::TotalConflict { normalizer } => {
                    json!({"kind": "total_conflict", "message": message, "normalizer": normalizer})
                }
                E::NotBelief { witness, value } => json!({
                    "kind": "not_belief", "message": message,
                    "witness": witness.iter().collect::<Vec<_>>(), "value": value
                }),
                other => json!({"kind": core_kind(other), "message": message}),
            },
        };
        json!({ "error": body })
    }
}

fn core_kind(err: &bdbelief::Error) -> &'static str {
    use bdbelief::Error as E;
    match err {
        E::Syntax { .. } => "syntax",
        E::UnknownAtom(_) => "unknown_atom",
        E::UnknownState(_) => "unknown_state",
        E::InvalidUniverse(_) => "invalid_universe",
        E::UniverseMismatch => "universe_mismatch",
        E::TooManyStates { .. } => "too_many_states",
        E::TooManyAtoms { .. } => "too_many_atoms",
        E::InvalidMass(_) => "invalid_mass",
        E::InvalidMeasure(_) => "invalid_measure",
        E::InvalidSetFunction(_) => "invalid_set_function",
        E::NotBelief { .. } => "not_belief",
        E::Undefined { .. } => "undefined",
        E::TotalConflict { .. } => "total_conflict",
        E::InvalidArgument(_) => "invalid_argument",
        E::InvalidModel(_) => "invalid_model",
        E::Json(_) => "schema",
    }
}

/// `-m1`/`-m2` are accepted as spellings of `--m1`/`--m2`.
fn normalize_args(args: impl IntoIterator<Item = OsString>) -> Vec<OsString> {
    args.into_iter()
        .map(|arg| match arg.to_str() {
            Some("-m1") => "--m1".into(),
            Some("-m2") => "--m2".into(),
            _ => arg,
        })
        .collect()
}

fn apply_epsilon() -> Result<(), CliError> {
    let Ok(text) = std::env::var("PDX_EPSILON") else {
        return Ok(());
    };
    let eps: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("PDX_EPSILON `{text}` is not a number")))?;
    if !bdbelief::tolerance::set_epsilon(eps) {
        return Err(CliError::Usage(format!(
            "PDX_EPSILON must be positive and finite, got {eps}"
        )));
    }
    Ok(())
}

fn emit(value: Value) {
    println!("{value}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize_args(std::env::args_os())) {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            let detail = err.to_string();
            let message = detail
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ");
            emit(CliError::Usage(message.to_string()).to_json());
            return ExitCode::from(1);
        }
    };
    let digits = cli.precision as usize;
    match apply_epsilon().and_then(|()| commands::run(cli.command)) {
        Ok(value) => {
            emit(output::round_value(value, digits));
            ExitCode::SUCCESS
        }
        Err(err) => {
            emit(err.to_json());
            ExitCode::from(err.exit_code())
        }
    }
}
