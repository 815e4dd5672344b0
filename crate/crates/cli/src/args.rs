use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact Jack symmetric functions, Heisenberg operators and fixed-point
/// localization on the Hilbert scheme of points.
#[derive(Debug, Parser)]
#[command(name = "hilbjack", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute Jack functions, norms or fixed-point data.
    Compute(ComputeArgs),
    /// Run a verification suite and report each check.
    Verify(VerifyArgs),
    /// Read a symmetric function as JSON on stdin and rewrite it in another basis.
    Convert(ConvertArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Largest partition size to cover.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Option<u32>,

    /// `symbolic`, or a rational value such as `2` or `-1/2` to specialize at.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub alpha: String,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    /// Worker threads; work is split across partitions and degrees.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub what: What,

    /// Restrict to one partition, e.g. `3,1`; `""` is the empty partition.
    #[arg(long, allow_hyphen_values = true)]
    pub partition: Option<String>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of orthogonality, triangularity, norms-bridge, positivity,
    /// heisenberg, goettsche, oracle. All suites run when omitted.
    #[arg(long)]
    pub suite: Option<String>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Target basis: `m`, `p` or `mtilde`.
    #[arg(long, alias = "basis")]
    pub to: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    /// Monic Jack functions in the monomial basis.
    #[value(name = "P")]
    P,
    /// Integral Jack functions in the augmented monomial basis.
    #[value(name = "J")]
    J,
    /// Squared norms of the monic Jack functions.
    Norms,
    /// Tangent characters and Euler classes at the torus fixed points.
    Fixedpoint,
}

impl What {
    pub fn name(self) -> &'static str {
        match self {
            What::P => "P",
            What::J => "J",
            What::Norms => "norms",
            What::Fixedpoint => "fixedpoint",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Latex,
}
