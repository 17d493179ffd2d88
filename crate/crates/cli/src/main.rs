//! `mimfvs`: solve feedback vertex set along a branch decomposition,
//! evaluate mim-width, convert and generate instances.
//!
//! Reports are `key value` lines on stdout. Exit codes: 0 ok, 2 input
//! error, 3 semantic mismatch, 4 oracle disagreement.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "mimfvs", version, about = "Feedback vertex set on graphs of bounded mim-width")]
pub struct Cli {
    /// Worker threads for the parallel DP (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Human-readable report instead of `key value` lines.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Instance {
    /// Graph file.
    pub graph: PathBuf,
    /// Decomposition file (`bd` records or a single `order` record).
    #[arg(required_unless_present = "order", conflicts_with = "order")]
    pub dec: Option<PathBuf>,
    /// Use the linear order 0, 1, ..., n-1 instead of a decomposition file.
    #[arg(long)]
    pub order: bool,
    /// Write the decomposition as Graphviz DOT.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum (weight) feedback vertex set.
    Solve {
        #[command(flatten)]
        inst: Instance,
        /// Minimise total weight instead of size.
        #[arg(long)]
        weighted: bool,
        /// Use this width at every node instead of the evaluated one.
        #[arg(long)]
        param: Option<usize>,
        /// Cross-check against brute force when the graph is small enough.
        #[arg(long)]
        verify: bool,
    },
    /// Mim-width of a decomposition, per cut and overall.
    Mimw {
        #[command(flatten)]
        inst: Instance,
    },
    /// Power of a graph with a decomposition, from a nice tree
    /// decomposition or a clique-width expression.
    Convert {
        /// Nice tree decomposition file; needs --graph.
        #[arg(long, conflicts_with = "cwd", required_unless_present = "cwd")]
        td: Option<PathBuf>,
        /// Graph the tree decomposition belongs to.
        #[arg(long, requires = "td")]
        graph: Option<PathBuf>,
        /// Clique-width expression file.
        #[arg(long)]
        cwd: Option<PathBuf>,
        /// Power to take.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_dec: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate an instance with a decomposition.
    Gen {
        #[command(subcommand)]
        which: Generator,
    },
    /// Solve and compare with brute force; exit 4 on disagreement.
    Verify {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        weighted: bool,
    },
}

#[derive(Args, Debug)]
pub struct GenOut {
    #[arg(long)]
    pub out_graph: PathBuf,
    #[arg(long)]
    pub out_dec: PathBuf,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Generator {
    /// Hamiltonian cycle instance of linear mim-width 1.
    Hamcyc {
        /// `C4`, `C6`, `K33` or `random`.
        #[arg(long)]
        from: String,
        /// Side size for `--from random`.
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Random interval graph with its left-endpoint order.
    Interval {
        #[arg(long)]
        n: usize,
        /// Upper bound on interval lengths.
        #[arg(long, default_value_t = 4.0)]
        len: f64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Power of a tree: `path<N>`, `star<N>`, `caterpillar<N>` or
    /// `random<N>`.
    Power {
        #[arg(long)]
        tree: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Keep only the leaves of the tree.
        #[arg(long)]
        leaves: bool,
        #[command(flatten)]
        out: GenOut,
    },
    /// Random clique-width expression, its graph and decomposition.
    Cwd {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        w: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Also write the expression.
        #[arg(long)]
        out_expr: Option<PathBuf>,
        #[command(flatten)]
        out: GenOut,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    #[cfg(feature = "parallel")]
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = cli.threads;
    match commands::run(&cli) {
        Ok(rep) => match rep.emit(cli.pretty, cli.out.as_deref()) {
            Ok(()) => ExitCode::from(rep.exit_code()),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
