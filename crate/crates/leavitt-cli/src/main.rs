//! `leavitt` -- symbolic computation in Leavitt path algebras over exact
//! commutative coefficient rings.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use leavitt_cli::commands::{self, Condition};
use leavitt_core::graph::Graph;
use leavitt_core::ring::RingDescriptor;

#[derive(Parser)]
#[command(
    name = "leavitt",
    version,
    about = "Canonical-form arithmetic, graph conditions, ideal lattices and \
             uniqueness-theorem witnesses for Leavitt path algebras"
)]
struct Cli {
    /// Seed for randomized suites (the `oracle` subcommand)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConditionArg {
    #[value(name = "L")]
    L,
    #[value(name = "K")]
    K,
    #[value(name = "cofinal")]
    Cofinal,
    #[value(name = "basic-simple")]
    BasicSimple,
}

impl From<ConditionArg> for Condition {
    fn from(c: ConditionArg) -> Self {
        match c {
            ConditionArg::L => Condition::L,
            ConditionArg::K => Condition::K,
            ConditionArg::Cofinal => Condition::Cofinal,
            ConditionArg::BasicSimple => Condition::BasicSimple,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide a graph condition: L, K, cofinal, or basic-simple
    Check {
        /// Graph file
        graph: PathBuf,
        #[arg(long)]
        condition: ConditionArg,
    },
    /// List the saturated hereditary vertex sets and their lattice covers
    Ideals {
        /// Graph file
        graph: PathBuf,
    },
    /// Evaluate an expression to canonical form plus graded components
    Eval {
        /// Graph file
        graph: PathBuf,
        /// Coefficient ring: z, z:N, or q
        #[arg(long)]
        ring: String,
        /// Expression, e.g. "2 e f* + 3 v"
        #[arg(long)]
        expr: String,
    },
    /// Reduce a nonzero element to a certified vertex multiple
    Witness {
        /// Graph file
        graph: PathBuf,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        expr: String,
    },
    /// Print the quotient graph by a saturated hereditary vertex set
    Quotient {
        /// Graph file
        graph: PathBuf,
        /// Comma-separated vertex names (empty for the empty set)
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Push an element along a coefficient ring homomorphism
    Basechange {
        /// Graph file
        graph: PathBuf,
        /// Source ring
        #[arg(long)]
        from: String,
        /// Target ring
        #[arg(long)]
        to: String,
        #[arg(long)]
        expr: String,
    },
    /// Run the representation differential suite against the normal form
    Oracle {
        /// Graph file (a single cycle or acyclic)
        graph: PathBuf,
        #[arg(long)]
        ring: String,
        /// Number of random element pairs
        #[arg(long, default_value_t = 500)]
        pairs: usize,
    },
}

fn load_graph(path: &PathBuf) -> Result<Arc<Graph>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read `{}`: {e}", path.display()))?;
    let graph = Graph::parse(&text).map_err(|e| e.to_string())?;
    Ok(Arc::new(graph))
}

fn run(cli: Cli) -> Result<(String, bool), String> {
    let report = match &cli.command {
        Command::Check { graph, condition } => {
            let g = load_graph(graph)?;
            (commands::check(&g, (*condition).into()) + "\n", true)
        }
        Command::Ideals { graph } => {
            let g = load_graph(graph)?;
            (commands::ideals_report(&g), true)
        }
        Command::Eval { graph, ring, expr } => {
            let g = load_graph(graph)?;
            let ring = RingDescriptor::parse(ring).map_err(|e| e.to_string())?;
            (
                commands::eval_report(&g, ring, expr).map_err(|e| e.to_string())?,
                true,
            )
        }
        Command::Witness { graph, ring, expr } => {
            let g = load_graph(graph)?;
            let ring = RingDescriptor::parse(ring).map_err(|e| e.to_string())?;
            (
                commands::witness_report(&g, ring, expr).map_err(|e| e.to_string())?,
                true,
            )
        }
        Command::Quotient { graph, set } => {
            let g = load_graph(graph)?;
            (
                commands::quotient_report(&g, set).map_err(|e| e.to_string())?,
                true,
            )
        }
        Command::Basechange {
            graph,
            from,
            to,
            expr,
        } => {
            let g = load_graph(graph)?;
            let from = RingDescriptor::parse(from).map_err(|e| e.to_string())?;
            let to = RingDescriptor::parse(to).map_err(|e| e.to_string())?;
            (
                commands::basechange_report(&g, from, to, expr).map_err(|e| e.to_string())?,
                true,
            )
        }
        Command::Oracle { graph, ring, pairs } => {
            let g = load_graph(graph)?;
            let ring = RingDescriptor::parse(ring).map_err(|e| e.to_string())?;
            commands::oracle_report(&g, ring, cli.seed, *pairs).map_err(|e| e.to_string())?
        }
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, passed)) => {
            print!("{report}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
