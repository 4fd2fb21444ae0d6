use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperfam::curves::Spacing;

#[derive(Debug, Parser)]
#[command(name = "hyperfam", version, about = "Hypergeometric ξ functions, extremal curves and inclusion queries")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    /// Absolute quadrature tolerance.
    #[arg(long, global = true, env = "QUAD_TOL")]
    pub quad_tol: Option<f64>,

    /// Series truncation tolerance.
    #[arg(long, global = true, env = "SERIES_TOL")]
    pub series_tol: Option<f64>,

    /// Significant digits in CSV and text output.
    #[arg(long, global = true, env = "PRECISION", default_value_t = 12,
          value_parser = clap::value_parser!(u8).range(1..=17))]
    pub precision: u8,

    /// Output format (verify defaults to json, everything else to csv).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at a point or on a grid.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Sample an extremal or sharp curve through a base point.
    #[command(allow_negative_numbers = true)]
    Curve(CurveArgs),
    /// Decide inclusion between the classes at (S1, T1) and (S2, T2).
    #[command(allow_negative_numbers = true)]
    Include(PairArgs),
    /// Check whether a sampled path of classes is increasing.
    Filtration(FiltrationArgs),
    /// Quasi-supremum or quasi-infimum of two classes.
    #[command(allow_negative_numbers = true)]
    Quasi(QuasiArgs),
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "xi0")]
    Xi0,
    #[value(name = "xi1")]
    Xi1,
    #[value(name = "xi2")]
    Xi2,
    #[value(name = "xi3")]
    Xi3,
    #[value(name = "xi0p")]
    Xi0p,
    #[value(name = "F")]
    F,
    #[value(name = "g")]
    G,
    #[value(name = "psi1")]
    Psi1,
    #[value(name = "psi2")]
    Psi2,
    #[value(name = "hyp")]
    Hyp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Even,
    Log,
}

impl From<SpacingArg> for Spacing {
    fn from(s: SpacingArg) -> Spacing {
        match s {
            SpacingArg::Even => Spacing::Even,
            SpacingArg::Log => Spacing::Log,
        }
    }
}

/// A single abscissa or an `n`-point grid.
#[derive(Debug, Args)]
pub struct GridArgs {
    /// Single point (`inf` allowed for the ξ functions).
    #[arg(long, conflicts_with_all = ["smin", "smax", "n"])]
    pub s: Option<f64>,
    #[arg(long, requires_all = ["smax", "n"])]
    pub smin: Option<f64>,
    #[arg(long, requires_all = ["smin", "n"])]
    pub smax: Option<f64>,
    #[arg(long, requires_all = ["smin", "smax"])]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "even")]
    pub spacing: SpacingArg,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Real part of z (hyp only).
    #[arg(long, default_value_t = -1.0)]
    pub z_re: f64,
    /// Imaginary part of z (hyp only).
    #[arg(long, default_value_t = 0.0)]
    pub z_im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveArg {
    Forward,
    Backward,
    Sharp,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long, value_enum)]
    pub kind: CurveArg,
    #[arg(long)]
    pub s0: f64,
    #[arg(long)]
    pub t0: f64,
    #[arg(long)]
    pub smin: f64,
    #[arg(long)]
    pub smax: f64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "even")]
    pub spacing: SpacingArg,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    pub s1: f64,
    pub t1: f64,
    pub s2: f64,
    pub t2: f64,
}

#[derive(Debug, Args)]
pub struct FiltrationArgs {
    /// CSV with header `s,t`; `-` reads stdin.
    #[arg(long)]
    pub input: PathBuf,
    /// Slack allowed above each pairwise threshold.
    #[arg(long, default_value_t = hyperfam::order::DEFAULT_INCLUSION_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuasiKind {
    Sup,
    Inf,
}

#[derive(Debug, Args)]
pub struct QuasiArgs {
    #[arg(value_enum)]
    pub kind: QuasiKind,
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long)]
    pub smin: f64,
    #[arg(long)]
    pub smax: f64,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "even")]
    pub spacing: SpacingArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Appendix,
    Xi,
    Curves,
    Witness,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
}
