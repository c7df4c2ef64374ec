mod bench;
mod cmd;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "cprefix",
    version,
    about = "Common Prefix on trees: generate, solve, reduce, analyze"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance file on stdout
    Gen(GenArgs),
    /// Solve a CP instance
    Solve(SolveArgs),
    /// Translate between star CP instances and NN instances
    Reduce {
        #[command(subcommand)]
        direction: ReduceDirection,
    },
    /// Subtree counts or the NN/biclique ratio report
    Analyze {
        #[command(subcommand)]
        what: AnalyzeWhat,
    },
    /// Run a built-in generator sweep and print a result table
    Bench(BenchArgs),
    /// Check a CP instance file and name the first violation
    Validate { file: Option<PathBuf> },
    /// Score a solution file against a CP instance
    Evaluate { instance: PathBuf, solution: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenKind {
    BinaryTree,
    Star,
    Bipartite,
    TightFamily,
}

#[derive(Args, Debug)]
struct GenArgs {
    kind: GenKind,
    /// Vertex count (trees, stars) or family size (tight-family)
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// Number of distinct labels to draw from
    #[arg(long, default_value_t = 6)]
    universe: usize,
    #[arg(long, default_value_t = 1)]
    min_labels: usize,
    #[arg(long, default_value_t = 3)]
    max_labels: usize,
    /// U side size (bipartite)
    #[arg(long, default_value_t = 5)]
    nu: usize,
    /// V side size (bipartite)
    #[arg(long, default_value_t = 5)]
    nv: usize,
    /// Edge probability (bipartite)
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["exact", "oracle", "approx"])))]
struct SolveArgs {
    file: Option<PathBuf>,
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    approx: bool,
    /// Block height for --approx
    #[arg(long = "L", conflicts_with = "epsilon")]
    l: Option<usize>,
    /// Target loss for --approx; L = ceil(1/epsilon)
    #[arg(long)]
    epsilon: Option<f64>,
    /// Root for --approx
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Exact solver guard: maximum number of memoized components
    #[arg(long)]
    max_components: Option<usize>,
    /// Oracle guard: maximum number of enumerated assignments
    #[arg(long)]
    oracle_limit: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum ReduceDirection {
    /// Star CP instance to NN instance
    StarToNn {
        #[arg(long, default_value_t = 0)]
        center: usize,
        file: Option<PathBuf>,
    },
    /// NN instance to star CP instance
    NnToStar { file: Option<PathBuf> },
}

#[derive(Subcommand, Debug)]
enum AnalyzeWhat {
    /// Connected subtree count against the 2^(2^(h+1)) bound
    Subtrees {
        #[arg(long, default_value_t = 0)]
        root: usize,
        file: Option<PathBuf>,
    },
    /// Exact NN and biclique optima with the harmonic bound
    Ratio { file: Option<PathBuf> },
}

#[derive(Args, Debug)]
struct BenchArgs {
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Append wall-clock columns (not reproducible)
    #[arg(long)]
    times: bool,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<common_prefix::Error>() {
        Some(e) if e.is_size_guard() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cmd::run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
