//! Argument parsing and dispatch.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rigidity_core::theta::{Flavor, ThetaKind, DEFAULT_EPS};
use rigidity_core::transform::Generator;

use crate::commands::{self, Format, GridSpec, Output, Suite};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "rigiditylab", version, about = "Theta functions, Lefschetz numbers and rigidity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a theta function at one point.
    Theta(ThetaArgs),
    /// Run a randomized identity suite.
    Verify(VerifyArgs),
    /// Expand a Lefschetz number and report which q-orders are constant.
    Rigidity(RigidityArgs),
    /// Check the S or T transformation law on a grid.
    Modularity(ModularityArgs),
    /// Print the exact q-expansion coefficients.
    Qexpand(QexpandArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    T,
    T1,
    T2,
    T3,
}

impl From<KindArg> for ThetaKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::T => ThetaKind::Theta,
            KindArg::T1 => ThetaKind::Theta1,
            KindArg::T2 => ThetaKind::Theta2,
            KindArg::T3 => ThetaKind::Theta3,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Translations,
    Modular,
    Jacobi,
    Chseries,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Translations => Suite::Translations,
            SuiteArg::Modular => Suite::Modular,
            SuiteArg::Jacobi => Suite::Jacobi,
            SuiteArg::Chseries => Suite::Chseries,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GeneratorArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "T", alias = "t")]
    T,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExpandFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct ThetaArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, allow_hyphen_values = true)]
    tau: String,
    #[arg(long, default_value_t = DEFAULT_EPS, allow_hyphen_values = true)]
    eps: f64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9, allow_hyphen_values = true)]
    tol: f64,
}

#[derive(Debug, Args)]
struct RigidityArgs {
    /// Path to a fixture JSON file, or the name of a bundled fixture.
    #[arg(long)]
    fixture: String,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
    lambda: u8,
    /// Truncation order, in powers of `q^{1/2}`.
    #[arg(long = "K", default_value_t = 8)]
    order: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Debug, Args)]
struct ModularityArgs {
    #[arg(long)]
    fixture: String,
    /// One of 1, 2, 3; all three when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    lambda: Option<u8>,
    #[arg(long, value_enum)]
    g: GeneratorArg,
    #[arg(long, default_value = "5x5")]
    grid: String,
    /// Range of real `t`, as `lo:hi`.
    #[arg(long, default_value = "0.05:0.95", allow_hyphen_values = true)]
    t: String,
    #[arg(long = "tau-re", default_value = "-0.45:0.45", allow_hyphen_values = true)]
    tau_re: String,
    #[arg(long = "tau-im", default_value = "0.8:1.6", allow_hyphen_values = true)]
    tau_im: String,
    #[arg(long, default_value_t = 1e-8, allow_hyphen_values = true)]
    tol: f64,
}

#[derive(Debug, Args)]
struct QexpandArgs {
    #[arg(long)]
    fixture: String,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
    lambda: u8,
    #[arg(long = "K", default_value_t = 4)]
    order: usize,
    #[arg(long, value_enum, default_value_t = ExpandFormat::Text)]
    format: ExpandFormat,
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn flavor(i: u8) -> Result<Flavor, CliError> {
    Ok(Flavor::from_index(i)?)
}

fn dispatch(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Theta(a) => commands::cmd_theta(a.kind.into(), &a.v, &a.tau, a.eps),
        Command::Verify(a) => commands::cmd_verify(a.suite.into(), a.samples, a.seed, a.tol),
        Command::Rigidity(a) => {
            let format = match a.format {
                ReportFormat::Json => Format::Json,
                ReportFormat::Csv => Format::Csv,
            };
            commands::cmd_rigidity(&a.fixture, flavor(a.lambda)?, a.order, format)
        }
        Command::Modularity(a) => {
            let lambdas = match a.lambda {
                Some(l) => vec![flavor(l)?],
                None => Flavor::ALL.to_vec(),
            };
            let g = match a.g {
                GeneratorArg::S => Generator::S,
                GeneratorArg::T => Generator::T,
            };
            let grid = GridSpec {
                shape: commands::parse_grid(&a.grid)?,
                t: commands::parse_range(&a.t)?,
                tau_re: commands::parse_range(&a.tau_re)?,
                tau_im: commands::parse_range(&a.tau_im)?,
            };
            commands::cmd_modularity(&a.fixture, &lambdas, g, &grid, a.tol)
        }
        Command::Qexpand(a) => {
            let format = match a.format {
                ExpandFormat::Text => Format::Text,
                ExpandFormat::Json => Format::Json,
            };
            commands::cmd_qexpand(&a.fixture, flavor(a.lambda)?, a.order, format)
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => Outcome { stdout: out.text, stderr: String::new(), code: out.code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}
