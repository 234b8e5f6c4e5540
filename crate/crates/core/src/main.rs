use clap::{Args, Parser, Subcommand};
use equilag::input::ConfigDoc;
use equilag::pipeline::{
    run_chevalley_weil, run_corpus, run_cover, run_find_lagrangian, run_verify, run_witt_equiv,
    PipelineError,
};
use equilag::report::RunReport;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

/// Equivariant symplectic structure on the homology of finite Galois
/// covers of surfaces: build covers, find and certify invariant
/// Lagrangian subspaces, and test Witt equivalence — all in exact
/// rational arithmetic.
#[derive(Parser)]
#[command(name = "equilag", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct SearchFlags {
    /// Seed echoed into the report and used by seeded corpus cases.
    #[arg(long)]
    seed: Option<u64>,
    /// Maximum absolute entry in candidate vectors.
    #[arg(long)]
    height_bound: Option<u32>,
    /// Budget of candidate tests for the search.
    #[arg(long)]
    max_iterations: Option<u64>,
    /// Comma-separated strategy pipeline:
    /// field_symplectic,orbit_reduce,enumerate.
    #[arg(long, value_delimiter = ',')]
    strategies: Option<Vec<String>>,
}

impl SearchFlags {
    fn overrides(&self) -> ConfigDoc {
        ConfigDoc {
            seed: self.seed,
            height_bound: self.height_bound,
            max_iterations: self.max_iterations,
            strategies: self.strategies.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a cover and report cell counts, χ, module dimension and
    /// deck-action traces.
    Cover {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the full pipeline and emit a Lagrangian certificate.
    FindLagrangian {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Re-verify a certificate file against a document.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// A find-lagrangian report or a bare {"lagrangian": [[..]]}.
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide Witt equivalence of the modules of two documents
    /// (semi-decision: a negative answer is an exhaustion report).
    WittEquiv {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        input2: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Trace-identity report for a cover document.
    ChevalleyWeil {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the built-in acceptance corpus and emit a pass/fail table.
    Corpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_input(path: &Path) -> Result<String, PipelineError> {
    std::fs::read_to_string(path)
        .map_err(|e| PipelineError::Input(format!("cannot read {}: {e}", path.display())))
}

fn emit(report: &RunReport, output: Option<&Path>) -> Result<(), PipelineError> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| PipelineError::Internal(e.to_string()))?;
    match output {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| PipelineError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(RunReport, Option<PathBuf>), PipelineError> {
    let started = Instant::now();
    let (mut report, output) = match cli.command {
        Command::Cover { input, output } => (run_cover(&read_input(&input)?)?, output),
        Command::FindLagrangian {
            input,
            output,
            search,
        } => (
            run_find_lagrangian(&read_input(&input)?, &search.overrides())?,
            output,
        ),
        Command::Verify {
            input,
            certificate,
            output,
        } => (
            run_verify(&read_input(&input)?, &read_input(&certificate)?)?,
            output,
        ),
        Command::WittEquiv {
            input,
            input2,
            output,
            search,
        } => (
            run_witt_equiv(
                &read_input(&input)?,
                &read_input(&input2)?,
                &search.overrides(),
            )?,
            output,
        ),
        Command::ChevalleyWeil { input, output } => {
            (run_chevalley_weil(&read_input(&input)?)?, output)
        }
        Command::Corpus { seed, output } => (run_corpus(seed)?, output),
    };
    report.timing_ms = started.elapsed().as_millis() as u64;
    Ok((report, output))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok((report, output)) => {
            if let Err(e) = emit(&report, output.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
