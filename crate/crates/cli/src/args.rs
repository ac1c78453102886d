use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use component_ranks::{ObjectKind, Side};

#[derive(Debug, Parser)]
#[command(name = "component-ranks", version, about = "Sizes of the r-th largest and r-th smallest components of random permutations and mappings")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Decimal digits for displayed floating-point values.
    #[arg(long, global = true)]
    pub precision: Option<usize>,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(alias = "permutation", alias = "permutations")]
    Permute,
    #[value(alias = "mapping", alias = "mappings")]
    Map,
}

impl From<KindArg> for ObjectKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Permute => ObjectKind::Permutation,
            KindArg::Map => ObjectKind::Mapping,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Largest,
    Smallest,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Largest => Side::Largest,
            SideArg::Smallest => Side::Smallest,
        }
    }
}

/// Computation route for finite-n distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum EngineArg {
    /// Row-polynomial recursion with exact integers.
    Exact,
    /// Forward push of the row-polynomial recursion in f64.
    #[value(alias = "float")]
    ExactFloat,
    /// Cumulative-count recursions with exact integers (permutations only).
    Ktp,
    /// Normalised cumulative-count recursions in f64 (permutations only).
    KtpFloat,
    /// Brute-force enumeration (small n only).
    Oracle,
}

#[derive(Debug, Args, Clone)]
pub struct ObjectArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, short, default_value_t = 2)]
    pub rank: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Total and connected object counts.
    Count {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Sizes, comma or space separated.
        #[arg(long, short, value_delimiter = ',', num_args = 1.., required = true)]
        n: Vec<usize>,
    },
    /// Row polynomial p[n, list] (largest side) or q[n, list] (smallest side).
    Poly {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, short)]
        n: usize,
        /// Rank list such as `{0,0}` or `{inf,inf}`.
        #[arg(long)]
        list: String,
        /// Defaults to smallest when the list contains infinity, largest otherwise.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Probability mass function of the r-th extreme component size.
    Pmf {
        #[command(flatten)]
        object: ObjectArgs,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, short)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Exact)]
        engine: EngineArg,
    },
    /// Mean, variance, median and mode, raw and normalised.
    Stats {
        #[command(flatten)]
        object: ObjectArgs,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, short, value_delimiter = ',', num_args = 1.., required = true)]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value_t = EngineArg::Exact)]
        engine: EngineArg,
    },
    /// Normalised statistics for both sides, one row per n.
    Table {
        #[command(flatten)]
        object: ObjectArgs,
        /// Sizes, comma or space separated; defaults to the standard rows for the kind and rank.
        #[arg(long, short, value_delimiter = ',', num_args = 1..)]
        n: Vec<usize>,
        /// Defaults to ktp-float for permutations and exact-float for mappings.
        #[arg(long, value_enum)]
        engine: Option<EngineArg>,
        /// Append unnormalised means, variances, medians and modes.
        #[arg(long)]
        raw: bool,
    },
    /// Limit constants with achieved error estimates.
    Constants,
    /// Higher-order Dickman function values.
    Dickman {
        #[arg(long, short, default_value_t = 1)]
        rank: usize,
        #[arg(long, short, value_delimiter = ',', num_args = 1.., required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
    },
    /// Cross-engine verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Hand-sized polynomial, cumulative-count and correction fixtures.
    SmallExact,
    /// Row-polynomial recursion against enumeration.
    Oracle,
    /// Cumulative-count recursions against the row-polynomial recursion.
    Cross,
    /// Mode of the second-smallest mapping component around n = 434.
    ModeShift,
    All,
}
