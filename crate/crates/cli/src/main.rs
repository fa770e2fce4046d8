//! Command-line surface: pointwise evolution and concurrence reports,
//! reversal-strength optimization, sudden-death maps, grid sweeps to CSV,
//! and the self-validation suite.
//!
//! Exit codes: 0 on success, 2 on usage or parameter-validation errors,
//! 3 on physicality or verification failures.

mod commands;
mod fmt;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "cadwm",
    version,
    about = "Two-qubit correlated amplitude damping with weak-measurement entanglement protection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve one state through the protocol and print both pipelines.
    Evolve(EvolveArgs),
    /// Concurrence of one configuration by all three methods.
    Concurrence(ConcurrenceArgs),
    /// Optimal reversal strength and the critical parameters.
    Optimize(OptimizeArgs),
    /// Sudden-death region map over (alpha_ratio, gamma) as CSV.
    EsdMap(EsdMapArgs),
    /// Grid sweep over one or two parameters as CSV.
    Sweep(SweepArgs),
    /// Run the self-validation suites.
    Verify(VerifyArgs),
}

/// Reversal strength: an explicit value or `auto` for the closed-form
/// optimum at each evaluation point.
#[derive(Clone, Copy, Debug)]
pub enum QArg {
    Auto,
    Value(f64),
}

impl FromStr for QArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(QArg::Auto);
        }
        s.parse::<f64>()
            .map(QArg::Value)
            .map_err(|_| format!("expected a number or `auto`, got `{s}`"))
    }
}

#[derive(Args, Clone)]
pub struct StateArgs {
    /// Real part of the |00> amplitude.
    #[arg(long)]
    alpha: f64,
    /// Imaginary part of the |00> amplitude.
    #[arg(long, default_value_t = 0.0)]
    alpha_im: f64,
    /// Phase (radians) of the |11> amplitude.
    #[arg(long, default_value_t = 0.0)]
    beta_phase: f64,
}

#[derive(Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    state: StateArgs,
    /// Damping strength in [0, 1].
    #[arg(long)]
    gamma: f64,
    /// Memory parameter in [0, 1].
    #[arg(long)]
    eta: f64,
    /// Weak-measurement strength in [0, 1 - 1e-6].
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Reversal strength in [0, 1], or `auto`.
    #[arg(long, default_value = "0")]
    q: QArg,
}

#[derive(Args)]
pub struct ConcurrenceArgs {
    #[command(flatten)]
    state: StateArgs,
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    eta: f64,
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    #[arg(long, default_value = "0")]
    q: QArg,
}

#[derive(Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    state: StateArgs,
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    eta: f64,
    #[arg(long, default_value_t = 0.0)]
    p: f64,
}

#[derive(Args)]
pub struct EsdMapArgs {
    /// Memory parameter in [0, 1].
    #[arg(long)]
    eta: f64,
    /// Weak-measurement strength in [0, 1 - 1e-6].
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Points per axis, in [2, 4096].
    #[arg(long, default_value_t = 128)]
    grid: usize,
    /// Largest amplitude ratio |alpha/beta| on the vertical axis.
    #[arg(long, default_value_t = 1.0)]
    ratio_max: f64,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SweepArgs {
    /// Varying axis `name:start:stop:count`; may repeat once. Names:
    /// alpha_ratio, gamma, eta, p, q.
    #[arg(long = "vary", required = true)]
    vary: Vec<String>,
    /// Fixed |00> amplitude (real, in (0, 1)); bound as alpha_ratio.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    q: Option<QArg>,
    /// Comma-separated output columns: concurrence_cad, concurrence_qmr,
    /// success_prob, esd, delta. All five when omitted.
    #[arg(long)]
    outputs: Option<String>,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = cadwm::verification::DEFAULT_SEED)]
    seed: u64,
    /// Random draws per sampled suite (at least 1).
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Inject a deliberately broken channel (negative control).
    #[arg(long, hide = true)]
    corrupt: bool,
}

/// A failure carrying the process exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    pub fn physical(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<cadwm::Error> for Failure {
    fn from(e: cadwm::Error) -> Self {
        use cadwm::Error::*;
        let code = match e {
            NotCptp { .. } | NotPsd { .. } | NotHermitian { .. } | NoConvergence { .. }
            | BadTrace { .. } | NumericBreakdown(_) | NonFinite { .. } => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Evolve(args) => commands::evolve(args),
        Command::Concurrence(args) => commands::concurrence(args),
        Command::Optimize(args) => commands::optimize(args),
        Command::EsdMap(args) => commands::esd_map(args),
        Command::Sweep(args) => commands::sweep(args),
        Command::Verify(args) => commands::verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
