//! `rowvac`: antichain dynamics, the Θ bijection and exhaustive verification suites.

mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "rowvac",
    version,
    about = "Rowmotion, rowvacuation and noncrossing partitions on root posets"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Root system, either a full label such as `D6` or a family letter used with --rank.
    #[arg(long = "type", short = 't', global = true)]
    pub cartan: Option<String>,
    #[arg(long, short = 'r', global = true)]
    pub rank: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for the suites; 0 uses every core.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Seed for randomized linear extensions.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Include E7 and E8 in default type lists.
    #[arg(long, global = true)]
    pub large: bool,
    /// Report wall-clock time instead of zero.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite on one type or on its default list of types.
    Verify {
        /// panyushev, rowmotion, ast, section6 (type-d-cases), hat, lk, structural, counting or all.
        suite: String,
    },
    /// Narayana numbers by antichain size, with the Catalan total.
    Narayana,
    /// Number of antichains from the degree product formula.
    Catalan,
    /// Trajectory of an antichain under an operator.
    Apply {
        /// row, rvac, row-inv-rvac or toggle.
        #[arg(long = "op", default_value = "row")]
        operator: String,
        /// Root to toggle at, for `--op toggle`.
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Antichain such as `[1,3],[3,4]`, `(0,1,1,0)` or `a2`; empty for ∅.
        #[arg(default_value = "")]
        antichain: String,
    },
    /// The orbit of one antichain, or every orbit when none is given.
    Orbit {
        #[arg(long = "op", default_value = "row")]
        operator: String,
        antichain: Option<String>,
    },
    /// Θ(A) in NC(W, c).
    Theta { antichain: String },
    /// Â in type A_{2n-3} for a δ-asymmetric antichain of D_n.
    Hat { antichain: String },
    /// DOT rendering of a Hasse diagram, NC lattice or matching diagram.
    Export {
        #[arg(value_enum)]
        what: ExportKind,
        /// `L`, `S` or an antichain.
        #[arg(long)]
        highlight: Option<String>,
        /// Antichain for the matching diagram.
        #[arg(default_value = "")]
        antichain: String,
    },
    /// The lexicographically first antichain with #A + #Rvac(A) ≠ rank.
    Counterexample,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportKind {
    Hasse,
    NcLattice,
    MatchingDiagram,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = stdout
                .write_all(outcome.stdout.as_bytes())
                .and_then(|()| stdout.flush())
            {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write output: {e}");
                    return ExitCode::from(2);
                }
            }
            if let Some(message) = outcome.failure {
                eprintln!("{message}");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
