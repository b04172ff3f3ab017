use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "greedy-energy", version, about = "Greedy λ-energy sequences on spheres")]
pub struct Cli {
    /// Run every loop on the current thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a greedy sequence.
    Generate(GenerateArgs),
    /// Second-order energy and potential series on the circle.
    SecondOrder(SecondOrderArgs),
    /// G(θ; λ) curves for θ generated by odd integers.
    GCurves(GCurvesArgs),
    /// Run invariant suites.
    Verify(VerifyArgs),
    /// Print the limit constants for one λ.
    Constants(ConstantsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DataFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Args, Serialize)]
pub struct GenerateArgs {
    /// Sphere dimension.
    #[arg(long)]
    pub d: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Number of points.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "numeric")]
    pub method: Method,
    /// Coarse grid size for the numeric method.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Refinement tolerance for the numeric method.
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: DataFormat,
}

#[derive(Debug, Args, Serialize)]
pub struct SecondOrderArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Largest N; rows run over 2 <= N <= nmax.
    #[arg(long)]
    pub nmax: u64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: DataFormat,
}

#[derive(Debug, Args, Serialize)]
pub struct GCurvesArgs {
    /// Odd generators M.
    #[arg(long, value_delimiter = ',', default_value = "3,7,11")]
    pub m: Vec<u64>,
    /// Number of λ samples in [0, 1).
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: DataFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// symmetry, formulas, bounds, limits, special or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// quick or full.
    #[arg(long, default_value = "quick")]
    pub profile: String,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}
