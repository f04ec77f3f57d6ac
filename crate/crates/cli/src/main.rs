mod claims;
mod commands;
mod formula;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "sturdy",
    version,
    about = "Sturdiness of set families: exact metrics, constructions and extremal search"
)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for searches (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named family, e.g. `triangle:n=8,k=4` or `hamming_ball:n=6,r=1,center=1.2`.
    Construct {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// β, γ, δ and degrees of a `.fam` file (`-` reads stdin).
    Metrics {
        file: String,
        /// Also print the full link matrix b_ij.
        #[arg(long)]
        matrix: bool,
    },
    /// Test a predicate; exits 0 if it holds and 1 if not.
    Check(CheckArgs),
    /// Apply a family transformation and print the result.
    Transform(TransformArgs),
    /// Evaluate a closed-form count or bound (`formula --list` for names).
    Formula(formula::FormulaArgs),
    /// Exhaustive extremal search.
    Search {
        #[command(subcommand)]
        action: SearchCommand,
    },
    /// Run the bundled claim checks.
    Verify {
        ids: Vec<String>,
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        /// List claim ids with the statement each one checks.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// intersecting, t-intersecting, r-wise, u-union, diameter, shifted,
    /// hamming-ball, iu or split.
    pub predicate: String,
    pub file: String,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub u: Option<usize>,
    #[arg(long)]
    pub w: Option<usize>,
    /// The X side of a split, written `1.2.3`.
    #[arg(long)]
    pub x: Option<String>,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    /// shift, saturate, basis or generated.
    pub kind: String,
    pub file: String,
    /// With --j, apply the single shift S_ij instead of shifting to a fixpoint.
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Uniformity of the generated family.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum SearchCommand {
    /// Maximum β over all families satisfying a pairwise constraint.
    MaxBeta {
        /// t-intersecting-uniform, t-intersecting-any, u-union, diameter or iu.
        #[arg(long)]
        constraint: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        u: Option<usize>,
        #[arg(long)]
        w: Option<usize>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Compare an exhaustive maximum with a conjectured bound.
    Probe {
        /// c61, c62 or c63.
        #[arg(long)]
        conjecture: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<usize>,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Budget {
    /// Stop after this many search nodes.
    #[arg(long, env = "STURDY_BUDGET_NODES")]
    pub budget_nodes: Option<u64>,
    /// Stop after this many seconds.
    #[arg(long)]
    pub budget_secs: Option<f64>,
}

/// How a successful invocation ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
    BudgetExceeded,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::BudgetExceeded => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match commands::run(&cli, start) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
