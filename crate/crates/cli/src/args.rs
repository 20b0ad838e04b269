use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wzeta::ComplexValue;

#[derive(Debug, Parser)]
#[command(
    name = "wzeta",
    version,
    about = "Weierstrass ℘, ζ and G₂ by q-series and by ordered lattice sums"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Run a seeded invariant suite and report the worst residual.
    Check(CheckArgs),
    /// Tabulate a function over a rectangle of z values as CSV.
    Grid(GridArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// ℘(z)
    Wp,
    /// ℘^{(k−2)}(z), needs --k
    Wpk,
    /// Weierstrass ζ(z) for the ordered sum
    Zeta,
    /// G₂(τ)
    G2,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Wp => "wp",
            Function::Wpk => "wpk",
            Function::Zeta => "zeta",
            Function::G2 => "g2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Fourier,
    Direct,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Fourier => "fourier",
            Engine::Direct => "direct",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Legendre,
    Quasimod,
    Cross,
    Eta,
    TformT,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Legendre => "legendre",
            Suite::Quasimod => "quasimod",
            Suite::Cross => "cross",
            Suite::Eta => "eta",
            Suite::TformT => "tform-t",
        }
    }
}

/// Parses `re,im`.
pub fn parse_complex(s: &str) -> Result<ComplexValue, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected re,im but got {s:?}"))?;
    let part = |p: &str| {
        p.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("{p:?} is not a finite number"))
    };
    Ok(ComplexValue::new(part(re)?, part(im)?))
}

#[derive(Debug, Clone, Args)]
pub struct EngineArgs {
    #[arg(long, value_enum, default_value = "fourier")]
    pub engine: Engine,
    /// Relative tolerance for the q-series.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_terms: usize,
    /// Outer (c) truncation of the direct engine.
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u32).range(1..))]
    pub cmax: u32,
    /// Inner (d) truncation of the direct engine.
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u32).range(1..))]
    pub dmax: u32,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,
    /// Order for `--fn wpk`; evaluates ℘^{(k−2)}.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    pub k: Option<u32>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub tau: ComplexValue,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: Option<ComplexValue>,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub count: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    pub k: Option<u32>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub tau: ComplexValue,
    /// Lower-left corner, inclusive.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lower: ComplexValue,
    /// Upper-right corner, inclusive.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub upper: ComplexValue,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub nx: u32,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub ny: u32,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub json: bool,
}
