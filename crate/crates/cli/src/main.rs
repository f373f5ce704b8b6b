use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, Inputs};

#[derive(Parser)]
#[command(name = "tutte", version, about = "Exact Tutte polynomial evaluation on bounded-width multigraphs")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    General,
    Forest,
    Ising,
    Coloring,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Stretch,
    Thicken,
    Insulated,
}

#[derive(clap::Args)]
struct DecompositionArgs {
    /// Tree decomposition (.td); defaults to the trivial one.
    #[arg(long)]
    td: Option<PathBuf>,
    /// Path decomposition (.td whose tree is a path).
    #[arg(long)]
    pd: Option<PathBuf>,
    /// Cut order (one line of vertex ids).
    #[arg(long)]
    cut: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate T(G; x, y) at a rational point.
    Eval {
        graph: PathBuf,
        #[command(flatten)]
        decomps: DecompositionArgs,
        /// Coordinates as `p` or `p/q`.
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true, required = true)]
        point: Vec<String>,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Cross-check against the brute-force oracle (at most 20 edges).
        #[arg(long)]
        verify: bool,
    },
    /// Print every Tutte coefficient.
    Coeffs {
        graph: PathBuf,
        #[command(flatten)]
        decomps: DecompositionArgs,
    },
    /// Stretch or thicken a graph and write the result with its decompositions.
    Transform {
        graph: PathBuf,
        #[command(flatten)]
        decomps: DecompositionArgs,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        k: usize,
        /// Output graph file.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        td_out: Option<PathBuf>,
        #[arg(long)]
        pd_out: Option<PathBuf>,
        #[arg(long)]
        cut_out: Option<PathBuf>,
    },
    /// Bell and Catalan numbers against the rank of the compatibility matrix.
    Rank {
        #[arg(long)]
        n: usize,
    },
}

fn run(cli: Cli) -> Result<commands::RunReport, CliError> {
    let inputs = |graph: PathBuf, d: DecompositionArgs| Inputs { graph, td: d.td, pd: d.pd, cut: d.cut };
    match cli.command {
        Command::Eval { graph, decomps, point, algorithm, verify } => {
            commands::eval(&inputs(graph, decomps), &point[0], &point[1], algorithm, verify)
        }
        Command::Coeffs { graph, decomps } => commands::coeffs(&inputs(graph, decomps)),
        Command::Transform { graph, decomps, op, k, out, td_out, pd_out, cut_out } => {
            let outputs = commands::Outputs { graph: out, td: td_out, pd: pd_out, cut: cut_out };
            commands::transform(&inputs(graph, decomps), op, k, &outputs)
        }
        Command::Rank { n } => commands::rank(n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            println!("{}", if json { report.to_json() } else { report.to_text() });
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
