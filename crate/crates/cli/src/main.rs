//! `extlift`: batch computations on ideal files.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails, 2 on input
//! errors. Diagnostics go to stderr; results go to stdout, as text or (with
//! `--json`) as a single JSON document.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use extlift::parse::{parse_ideal, IdealFile};
use extlift::{ExtOrderSpec, OrderKind};

#[derive(Debug, Parser)]
#[command(
    name = "extlift",
    version,
    about = "Groebner bases in the exterior algebra and their lifts to the free algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Term order, overriding the file header.
    #[arg(long, global = true, value_parser = ["deglex", "degrevlex"])]
    order: Option<String>,
    /// Variables from smallest to largest, e.g. "x3<x1<x2" or "3,1,2".
    #[arg(long, global = true)]
    varorder: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Degree cap for free-algebra verification and gin computations.
    #[arg(long, global = true)]
    maxdeg: Option<usize>,
    /// Seed for random coordinate changes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of independent random coordinate changes.
    #[arg(long, global = true, default_value_t = extlift::gin::DEFAULT_TRIALS)]
    trials: usize,
    /// Matrix entries are drawn from [-height, height].
    #[arg(long, global = true, default_value_t = extlift::gin::DEFAULT_HEIGHT)]
    height: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced Groebner basis and initial ideal of an exterior ideal.
    Gb { file: PathBuf },
    /// Lift of the exterior Groebner basis to the preimage in the free algebra.
    Lift { file: PathBuf },
    /// Check that the generators (free file) or the lift (exterior file) form a Groebner basis.
    Verify { file: PathBuf },
    /// Generic initial ideal.
    Gin {
        file: PathBuf,
        /// For exterior files, skip the direct free-algebra computation.
        #[arg(long)]
        skip_free: bool,
    },
    /// Hilbert function and rational Hilbert series.
    Hilbert { file: PathBuf },
    /// Stable, strongly stable and squeezed predicates of the initial ideal.
    Predicates { file: PathBuf },
}

pub struct Options {
    pub json: bool,
    pub maxdeg: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub height: u64,
}

/// Input error (exit 2) or failed mathematical check (exit 1).
pub enum Failure {
    Input(String),
    Check,
}

impl From<extlift::Error> for Failure {
    fn from(e: extlift::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn parse_varorder(text: &str, n: usize) -> Result<Vec<usize>, String> {
    let vars: Result<Vec<usize>, String> = text
        .split(|c: char| c == '<' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim_start_matches(['x', 'X'])
                .parse::<usize>()
                .map_err(|_| format!("bad variable '{t}' in --varorder"))
        })
        .collect();
    let vars = vars?;
    if vars.len() != n {
        return Err(format!("--varorder must list all {n} variables"));
    }
    Ok(vars)
}

fn load(cli: &Cli, path: &PathBuf) -> Result<IdealFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut file =
        parse_ideal(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let kind = match &cli.order {
        Some(o) => o.parse::<OrderKind>().map_err(Failure::Input)?,
        None => file.order.kind(),
    };
    let ascending = match &cli.varorder {
        Some(v) => parse_varorder(v, file.n).map_err(Failure::Input)?,
        None => file.order.ascending_vars(),
    };
    file.order = ExtOrderSpec::with_ranking(kind, &ascending)?;
    Ok(file)
}

fn configure_threads() {
    if let Ok(v) = std::env::var("EXTLIFT_THREADS") {
        match v.parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
            _ => eprintln!("warning: ignoring EXTLIFT_THREADS={v}"),
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let opts = Options {
        json: cli.json,
        maxdeg: cli.maxdeg,
        seed: cli.seed,
        trials: cli.trials,
        height: cli.height,
    };
    let out = match &cli.command {
        Command::Gb { file } => commands::gb(&load(cli, file)?, &opts),
        Command::Lift { file } => commands::lift(&load(cli, file)?, &opts),
        Command::Verify { file } => commands::verify(&load(cli, file)?, &opts),
        Command::Gin { file, skip_free } => commands::gin(&load(cli, file)?, &opts, *skip_free),
        Command::Hilbert { file } => commands::hilbert(&load(cli, file)?, &opts),
        Command::Predicates { file } => commands::predicates(&load(cli, file)?, &opts),
    }?;
    print!("{}", out.text);
    if out.failed {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
