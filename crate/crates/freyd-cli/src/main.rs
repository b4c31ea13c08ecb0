//! Command line front end: runs scenario files against the library and
//! searches seeded random pairs for ghosts. Reports are JSON on stdout (or
//! a file via `--output`) and are byte-identical across runs for the same
//! inputs and seed, apart from the `elapsed_ms` field.
//!
//! Exit codes: 0 success, 2 parse failure, 3 validation failure (broken
//! differentials, non-commuting squares, undefined names), 4 task failure.

mod error;
mod search;
mod tasks;
mod wire;

use std::fs;
use std::path::{Path, PathBuf};
use std::process;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use freyd::RingSpec;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use error::CliError;

const BUILTINS: &[(&str, &str, &str)] = &[
    (
        "zmod4-ghost",
        "the doubling cone over Zmod:4 carries a ghost self-map",
        include_str!("../scenarios/zmod4-ghost.json"),
    ),
    (
        "z-moore-ghost",
        "an integral doubling cone maps onto its shift by a ghost",
        include_str!("../scenarios/z-moore-ghost.json"),
    ),
    (
        "field-sanity",
        "over a prime field every counit inverts and no ghost appears",
        include_str!("../scenarios/field-sanity.json"),
    ),
    (
        "zmod6-vnr",
        "Zmod:6 is a product of fields, so the doubling cone sources no ghosts",
        include_str!("../scenarios/zmod6-vnr.json"),
    ),
];

#[derive(Parser)]
#[command(name = "freyd", version, about = "Ghost maps and prolonged homology over small rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a builtin scenario (by name) or a scenario file (by path)
    Run {
        /// Builtin scenario name or path to a scenario JSON file; builtin
        /// names take precedence
        #[arg(long)]
        scenario: String,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search seeded random pairs of complexes for ghosts
    Search {
        /// Coefficient ring: Z, Zmod:n, Fp:p, or Prod:p1x...xpk
        #[arg(long)]
        ring: String,
        /// Number of (target, source) pairs to draw
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest number of nonzero degrees per complex
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        /// Largest rank per degree
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the builtin scenarios
    Scenarios,
}

#[derive(Serialize)]
struct RunReport {
    tool: String,
    scenario: String,
    digest: String,
    seed: Option<u64>,
    results: Vec<Value>,
    elapsed_ms: u128,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("{e}");
        process::exit(e.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run { scenario, output } => {
            let start = Instant::now();
            let text = resolve_scenario(&scenario)?;
            let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
            let resolved = wire::parse_scenario(&text)?;
            let results = tasks::run_tasks(&resolved)?;
            let report = RunReport {
                tool: format!("freyd {}", env!("CARGO_PKG_VERSION")),
                scenario,
                digest,
                seed: None,
                results,
                elapsed_ms: start.elapsed().as_millis(),
            };
            emit(&report, output.as_deref())
        }
        Command::Search { ring, trials, seed, max_length, max_rank, output } => {
            let ring = RingSpec::from_str(&ring).map_err(|e| CliError::Parse(e.to_string()))?;
            let report = search::run_search(&ring, trials, seed, max_length, max_rank);
            emit(&report, output.as_deref())
        }
        Command::Scenarios => {
            for (name, blurb, _) in BUILTINS {
                println!("{name:<14} {blurb}");
            }
            Ok(())
        }
    }
}

fn resolve_scenario(arg: &str) -> Result<String, CliError> {
    if let Some((_, _, text)) = BUILTINS.iter().find(|(name, _, _)| *name == arg) {
        return Ok(text.to_string());
    }
    fs::read_to_string(arg)
        .map_err(|e| CliError::Parse(format!("cannot read scenario `{arg}`: {e}")))
}

fn emit(report: &impl Serialize, output: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report)
        .map_err(|e| CliError::Task(format!("cannot serialize report: {e}")))?;
    text.push('\n');
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Task(format!("cannot write `{}`: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
