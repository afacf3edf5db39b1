//! `tmcount`: exact coloring counts of graph products and order-preserving
//! map counts on stacked posets.

mod commands;
mod error;
mod spec;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use commands::{Output, PosetMode};
use error::CliResult;

const REPORT_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "tmcount", version, about = "Transfer-matrix counting of colorings and order-preserving maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON report (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Cross-check results against brute-force counts.
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Args)]
struct GraphArgs {
    /// `path:N`, `cycle:N`, `prod:AxB` or an edge-list file.
    #[arg(long)]
    graph: String,
    /// Automorphism generators, one permutation per line.
    #[arg(long)]
    aut: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial of G x P_n.
    Chromatic {
        #[command(flatten)]
        graph: GraphArgs,
        /// Number of layers n.
        #[arg(long)]
        length: usize,
        /// Evaluate at this many colors.
        #[arg(long)]
        colors: Option<usize>,
    },
    /// Orbits, weights, compact transfer matrix and eigenvalue bounds.
    Transfer {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Reduced generating function and hidden-symmetry verdict.
    Genfun {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Partitions into independent sets and their count.
    Orbits {
        /// `path:N`, `cycle:N`, `prod:AxB` or an edge-list file.
        #[arg(long)]
        graph: String,
    },
    /// Counts on the poset stacked from a base cover matrix.
    Poset {
        /// Base poset file: `m`, then m rows of m zeros/ones.
        #[arg(long)]
        file: PathBuf,
        /// Number of transitions n (the stack has n + 1 levels).
        #[arg(long)]
        levels: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum)]
        mode: PosetMode,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Chromatic { .. } => "chromatic",
            Command::Transfer { .. } => "transfer",
            Command::Genfun { .. } => "genfun",
            Command::Orbits { .. } => "orbits",
            Command::Poset { .. } => "poset",
        }
    }

    fn run(&self, oracle: bool) -> CliResult<Output> {
        match self {
            Command::Chromatic { graph, length, colors } => {
                commands::chromatic(&graph.graph, *length, *colors, graph.aut.as_deref(), oracle)
            }
            Command::Transfer { graph } => commands::transfer(&graph.graph, graph.aut.as_deref(), oracle),
            Command::Genfun { graph } => commands::genfun(&graph.graph, graph.aut.as_deref(), oracle),
            Command::Orbits { graph } => commands::orbits(graph, oracle),
            Command::Poset { file, levels, k, mode } => commands::poset(file, *levels, *k, *mode, oracle),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let out = match cli.command.run(cli.oracle) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_status().0);
        }
    };
    if cli.text {
        return emit(&out.text.join("\n"));
    }
    let mut report = json!({
        "version": REPORT_VERSION,
        "command": cli.command.name(),
        "inputs": out.inputs,
        "results": out.results,
        "timing_ms": start.elapsed().as_secs_f64() * 1e3,
    });
    if let Some(oracle) = out.oracle {
        report["oracle"] = oracle;
    }
    match serde_json::to_string_pretty(&report) {
        Ok(s) => emit(&s),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(5)
        }
    }
}

/// Print to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(body: &str) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{body}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            ExitCode::from(5)
        }
        _ => ExitCode::SUCCESS,
    }
}
