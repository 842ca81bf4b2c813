//! `phi`: evaluate φ and ψ on graph6 input, run the verification suites,
//! work with chord diagrams and time the evaluators.

mod bench;
mod chords;
mod eval;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub use output::InputError;

#[derive(Parser, Debug)]
#[command(name = "phi", version, about)]
struct Cli {
    /// Worker threads (0: one per core). Does not change any result.
    #[arg(long, global = true, env = "PHI_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate φ and ψ on graph6 lines from FILE or standard input.
    Eval {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        fmt: Format,
        /// Evaluator reported as `evaluator` (auto: Eulerian subsets when
        /// they fit, else deletion-contraction).
        #[arg(long, default_value = "auto")]
        evaluator: String,
        /// Input file; `-` or nothing reads standard input.
        file: Option<PathBuf>,
    },
    /// Run a verification suite and print a JSON report.
    Verify(verify::VerifyArgs),
    /// Enumerate chord diagrams or evaluate the weight system on them.
    Chords {
        #[command(subcommand)]
        action: chords::ChordsAction,
    },
    /// Time every evaluator on seeded random graphs.
    Bench(bench::BenchArgs),
    /// List the classes where φ and ψ differ. Always exits 0 on valid input.
    ScanConjecture {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Add wall-clock time to the report.
        #[arg(long)]
        timings: bool,
    },
}

fn init_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    if threads > 0 {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    init_threads(cli.threads);
    match cli.command {
        Command::Eval {
            fmt,
            evaluator,
            file,
        } => eval::run(fmt, &evaluator, file.as_deref()),
        Command::Verify(args) => verify::run(&args),
        Command::Chords { action } => chords::run(&action),
        Command::Bench(args) => bench::run(&args),
        Command::ScanConjecture { max_n, timings } => verify::scan_conjecture(max_n, timings),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) if e.is::<InputError>() => {
            eprintln!("phi: {e:#}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("phi: internal error: {e:#}");
            ExitCode::from(1)
        }
    }
}
