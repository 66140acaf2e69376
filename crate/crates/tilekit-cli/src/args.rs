//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "tilekit", version, about = "Colored domino and lozenge tilings: counting, checks, bijections, sampling, pictures")]
pub struct Cli {
    /// Print machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count (and optionally list) the tilings of an Aztec diamond.
    Enumerate(EnumerateArgs),
    /// The generating polynomial of k-tilings, by brute force.
    Pf(PfArgs),
    /// Run an exact identity check; exit 1 if it fails.
    Verify(VerifyArgs),
    /// Apply the t = 0 bijection or the diagonal involution to a file.
    Bijection(BijectionArgs),
    /// Metropolis sampling of weighted k-tilings.
    Sample(SampleArgs),
    /// Compare large-rank samples against the arctic curves.
    Arctic(ArcticArgs),
    /// Lozenge k-tilings of hexagons.
    Hexagon(HexagonArgs),
    /// Draw a saved tiling, path family, run or statistics as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    PurpleGray,
    WhitePink,
}

impl From<Model> for tilekit::encodings::ModelKind {
    fn from(m: Model) -> Self {
        match m {
            Model::PurpleGray => tilekit::encodings::ModelKind::PurpleGray,
            Model::WhitePink => tilekit::encodings::ModelKind::WhitePink,
        }
    }
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub rank: u32,
    #[arg(long, default_value_t = 1)]
    pub colors: usize,
    /// Include every tiling in the output (single color only).
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Specialization {
    /// Set every x_i and y_j to 1.
    AllOnes,
}

#[derive(Debug, Args)]
pub struct PfArgs {
    #[arg(long)]
    pub rank: u32,
    #[arg(long, default_value_t = 1)]
    pub colors: usize,
    #[arg(long, value_enum, default_value_t = Model::PurpleGray)]
    pub model: Model,
    #[arg(long, value_enum)]
    pub at: Option<Specialization>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Both Yang–Baxter identities, symbolically for k ≤ 2, else at random points.
    Ybe,
    /// Algebraic and graphical vertex weights agree for all five families.
    AppendixB,
    /// The generating polynomial equals the product formula.
    Product,
    /// The lattice partition function equals the tiling sum times its constant.
    Lattice,
    /// The t = 0 bijection is a weight-preserving bijection.
    T0,
    /// The involution sends j interactions to C(k,2)C(m+1,2) − j.
    Involution,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: Check,
    #[arg(long, default_value_t = 2)]
    pub colors: usize,
    #[arg(long, default_value_t = 2)]
    pub rank: u32,
    /// Seed for the random evaluation points.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Map {
    /// k-tilings with no interactions ↔ tilings (use --inverse --colors k).
    T0,
    /// Reflection across the diagonal.
    Phi,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    #[arg(value_enum)]
    pub map: Map,
    /// A `tiling` or `ktiling` document.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub inverse: bool,
    #[arg(long)]
    pub colors: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub rank: u32,
    #[arg(long, default_value_t = 1)]
    pub colors: usize,
    /// Nonnegative rational, e.g. 0, 1/2, 5.
    #[arg(long)]
    pub t: String,
    /// Chain steps; accepts forms like 2e9.
    #[arg(long)]
    pub steps: String,
    #[arg(long)]
    pub burn_in: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub thinning: u64,
    /// Required: runs are reproducible only from an explicit seed.
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ArcticArgs {
    #[arg(long, default_value_t = 128)]
    pub rank: u32,
    #[arg(long, default_value_t = 2)]
    pub colors: usize,
    #[arg(long, default_value_t = 10)]
    pub seeds: u64,
    #[arg(long, default_value_t = 0.05)]
    pub margin: f64,
    /// Required fraction of cells on the correct side.
    #[arg(long, default_value_t = 0.95)]
    pub threshold: f64,
    /// Override the number of uniform-chain sweeps.
    #[arg(long)]
    pub sweeps: Option<u64>,
}

#[derive(Debug, Args)]
pub struct HexagonArgs {
    #[command(subcommand)]
    pub command: HexagonCommand,
}

#[derive(Debug, Args)]
pub struct Shape {
    #[arg(long)]
    pub a: u32,
    #[arg(long)]
    pub b: u32,
    #[arg(long)]
    pub c: u32,
}

#[derive(Debug, Subcommand)]
pub enum HexagonCommand {
    /// Recompute the published table of 2-tiling interaction counts.
    Table1,
    /// The generating polynomial in t and q.
    Pf {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        /// Set q = 1 and print the t coefficients.
        #[arg(long)]
        q_one: bool,
    },
    /// Metropolis sampling of lozenge k-tilings.
    Sample {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long)]
        t: String,
        #[arg(long)]
        steps: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Overlay {
    /// The single-color arctic circle.
    Circle,
    /// The k-color curve at t = 0.
    T0,
    /// The k-color curve as t → ∞.
    Tinf,
    /// The a × 2a × 3a hexagon curve at t = 0.
    HexT0,
    /// The 2a × a × 2a hexagon curve as t → ∞.
    HexTinf,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Any document written by this tool.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub overlay: Option<Overlay>,
    /// Draw Schröder paths instead of dominos.
    #[arg(long)]
    pub paths: bool,
    /// Comma-separated stroke colors, one per color index.
    #[arg(long)]
    pub palette: Option<String>,
    #[arg(long)]
    pub scale: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
