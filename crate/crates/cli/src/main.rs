//! `fkpp`: batch runner for the fractional KPP solvers.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 validation failure, 3 numerical
//! gate failure, 4 non-convergence.

mod commands;
mod config;
mod output;

use clap::{Parser, Subcommand};
use config::Overrides;
use fkpp_core::Error;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fkpp", version, about = "Branching Monte Carlo and reference solvers for the fractional KPP equation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    overrides: Overrides,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate E_{alpha,rho}(z)
    MlEval,
    /// Check the kernel conditions and report them as JSON
    KernelCheck,
    /// Draw a sample batch and test it against its reference law
    SampleDiag,
    /// Monte Carlo estimates at the evaluation points
    SolveMc,
    /// Picard grid solution with point values and grid tolerance
    SolveRef,
    /// Compare Monte Carlo estimates against a reference solution
    Compare {
        /// solve-mc JSON output
        #[arg(long)]
        mc: String,
        /// solve-ref JSON output
        #[arg(long = "ref")]
        reference: String,
    },
    /// Print the resolved configuration with all defaults
    PrintConfig,
}

/// A failed run: message and exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn validation(message: String) -> Self {
        Self { code: 2, message }
    }

    pub fn gate(message: String) -> Self {
        Self { code: 3, message }
    }

    pub fn io(message: String) -> Self {
        Self { code: 1, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Argument(_) | Error::Domain(_) | Error::BoundViolation { .. } => 2,
            Error::Accuracy { .. }
            | Error::SpectralConstruction { .. }
            | Error::KernelValidation { .. }
            | Error::DomainTooSmall { .. } => 3,
            Error::RunawayTree { .. } | Error::Divergence { .. } => 4,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match &cli.command {
        Command::MlEval => "ml-eval",
        Command::KernelCheck => "kernel-check",
        Command::SampleDiag => "sample-diag",
        Command::SolveMc => "solve-mc",
        Command::SolveRef => "solve-ref",
        Command::Compare { .. } => "compare",
        Command::PrintConfig => "print-config",
    };
    let result = config::RunConfig::resolve(&cli.overrides).and_then(|cfg| match &cli.command {
        Command::MlEval => commands::ml_eval(&cfg),
        Command::KernelCheck => commands::kernel_check(&cfg),
        Command::SampleDiag => commands::sample_diag(&cfg),
        Command::SolveMc => commands::solve_mc(&cfg),
        Command::SolveRef => commands::solve_ref(&cfg),
        Command::Compare { mc, reference } => commands::compare(&cfg, mc, reference),
        Command::PrintConfig => commands::print_config(&cfg),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("fkpp {name}: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
