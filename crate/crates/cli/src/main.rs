mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "oddcolor", version, about = "Odd colorings, surface embeddings and discharging checks")]
pub struct Cli {
    /// Seed for every random choice; echoed into the report.
    #[arg(long, global = true, env = "ODDCOLOR_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print nothing; only the exit status is meaningful.
    #[arg(long, global = true, conflicts_with = "json")]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Input {
    /// Graph file (JSON edge list); "-" reads standard input.
    #[arg(long, value_name = "FILE", conflicts_with = "instance", required_unless_present = "instance")]
    pub graph: Option<PathBuf>,
    /// Instance file: a graph with optional R, rotation, signs and lists.
    #[arg(long, value_name = "FILE")]
    pub instance: Option<PathBuf>,
    /// Edges of R as indices into the file's edge list, e.g. "0,3,4". Replaces R from the file.
    #[arg(long, value_name = "E1,E2,...", value_delimiter = ',')]
    pub r: Option<Vec<usize>>,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct GenusBound {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
    pub max_genus: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the cycle hypotheses (no cycle of R-length 3, 4 or 6; no two R-length-5 cycles sharing one edge).
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Trace the faces of the instance's rotation system.
    Faces {
        #[command(flatten)]
        input: Input,
    },
    /// Euler genus of the given embedding, or the smallest found up to --max-genus.
    Genus {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        genus: GenusBound,
    },
    /// Search for an embedding and emit it as an instance file.
    Embed {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        genus: GenusBound,
        /// Also write the embedded instance here.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Find a relaxed-odd coloring from uniform lists {1..k} or the instance's lists.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Smallest k with a relaxed-odd coloring from {1..k}.
    Chromatic {
        #[command(flatten)]
        input: Input,
    },
    /// Sample random k-list assignments looking for one without a relaxed-odd coloring.
    Choosable {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Colors are drawn from {1..universe}; defaults to 2k.
        #[arg(long)]
        universe: Option<usize>,
    },
    /// Audit the structural lemmas; face lemmas need a rotation system.
    Audit {
        #[command(flatten)]
        input: Input,
    },
    /// Run the discharging rules and report the charge ledger.
    Discharge {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        genus: GenusBound,
    },
    /// Hypothesis check, embedding search, audit and discharging in sequence.
    Hunt {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        genus: GenusBound,
    },
    /// Replace every edge by a path of length two.
    Subdivide {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Generate connected graphs of large girth and minimum degree 2.
    Gen {
        /// Maximum number of vertices.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        min_girth: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Write the instances as a JSON array.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok((report, stages)) => {
            if !cli.quiet {
                for w in &stages.warnings {
                    eprintln!("warning: {w}");
                }
                for line in &stages.summary {
                    eprintln!("{line}");
                }
                let text = if cli.json {
                    serde_json::to_string_pretty(&report)
                } else {
                    serde_json::to_string(&report)
                };
                println!("{}", text.expect("report serializes"));
            }
            ExitCode::from(report.outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
