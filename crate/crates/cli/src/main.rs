mod bench;
mod error;
mod io;
mod plot;
mod sample;
mod validate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "curvtorus",
    version,
    about = "Sample, benchmark and validate distributions on a curved torus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Master seed; every run with the same seed is byte-identical.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Output format. Defaults to csv for `sample`, json for `bench`/`validate`, svg for `plot`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Output path; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Draw angle pairs or embedded points.
    Sample(sample::SampleArgs),
    /// Acceptance-rate tables.
    Bench(bench::BenchArgs),
    /// Run validation checks; exit 1 if any fails.
    Validate(validate::ValidateArgs),
    /// Histogram or quadrant chart as SVG.
    Plot(plot::PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dist {
    Uniform,
    TorusUniform,
    VonMises,
    VmTorus,
    WrappedCauchy,
    WcTorus,
    KatoJones,
    KjTorus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplerId {
    Eau,
    Aur,
    Har,
    HarBatch,
    Vmbfr,
}

/// Distribution and geometry parameters shared by `sample`, `validate` and `plot`.
#[derive(Args, Debug, Clone)]
pub struct DistArgs {
    #[arg(long, value_enum, default_value = "torus-uniform")]
    pub dist: Dist,
    /// Major radius.
    #[arg(short = 'R', long = "major", default_value_t = 3.0)]
    pub major: f64,
    /// Minor radius.
    #[arg(short = 'r', long = "minor", default_value_t = 1.5)]
    pub minor: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub nu: f64,
    #[arg(long, default_value_t = 0.3)]
    pub rho: f64,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Sample(args) => sample::run(&args, cli.seed, cli.format.unwrap_or(Format::Csv), out),
        Command::Bench(args) => bench::run(&args, cli.seed, cli.format.unwrap_or(Format::Json), out),
        Command::Validate(args) => validate::run(&args, cli.seed, cli.format.unwrap_or(Format::Json), out),
        Command::Plot(args) => plot::run(&args, cli.seed, cli.format.unwrap_or(Format::Svg), out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("curvtorus: {e}");
            ExitCode::from(e.code())
        }
    }
}
