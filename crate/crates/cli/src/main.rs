//! Command-line front end: file ingestion, generators, classification and
//! invariant commands, deterministic JSON/text reports, and the golden
//! example corpus.
//!
//! Exit codes: 0 for a computed verdict (even "not a manifold"), 1 when a
//! `check-*` verification or a corpus case fails, 2 for input errors.

use clap::{Parser, Subcommand};
use std::process::ExitCode;

mod commands;
mod corpus;

#[derive(Parser)]
#[command(
    name = "dtop",
    version,
    about = "Digital topology over integer lattices",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an image as a digital manifold and decompose it
    Analyze(commands::AnalyzeArgs),
    /// Clique census and digital Euler characteristic
    Euler(commands::EulerArgs),
    /// Digitally connected components
    Components(commands::ComponentsArgs),
    /// Orientations of 0-manifolds and connected-ray linear orders
    Orient(commands::OrientArgs),
    /// Verify digital continuity of a map file
    #[command(name = "check-map")]
    CheckMap(commands::CheckMapArgs),
    /// Verify a supplied isomorphism, or search for one between two images
    #[command(name = "check-iso")]
    CheckIso(commands::CheckIsoArgs),
    /// Verify a digital partition of unity
    #[command(name = "check-pou")]
    CheckPou(commands::CheckPouArgs),
    /// Verify a digital homotopy between two maps
    #[command(name = "check-homotopy")]
    CheckHomotopy(commands::CheckHomotopyArgs),
    /// Emit a generated image in the JSON image format
    Gen(commands::GenArgs),
    /// Run the golden example corpus
    Corpus(commands::CorpusArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => commands::analyze(args),
        Command::Euler(args) => commands::euler(args),
        Command::Components(args) => commands::components(args),
        Command::Orient(args) => commands::orient(args),
        Command::CheckMap(args) => commands::check_map(args),
        Command::CheckIso(args) => commands::check_iso(args),
        Command::CheckPou(args) => commands::check_pou(args),
        Command::CheckHomotopy(args) => commands::check_homotopy(args),
        Command::Gen(args) => commands::gen(args),
        Command::Corpus(args) => commands::corpus_run(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
