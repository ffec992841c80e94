//! `shellkit` command-line front end.
//!
//! Exit codes: 0 pass, 1 fail or inconclusive, 2 input or usage error.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "shellkit",
    version,
    about = "Shellings and counterexample certificates for pure simplicial complexes"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Characteristic for homology commands.
    #[arg(long, global = true, default_value_t = 2)]
    pub p: u32,
    /// Node budget for shelling search.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Write the produced complex or order to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Inputs are listing files (`.cplx`, shelling listings, or JSON) or
/// built-in dataset names.
#[derive(Subcommand, Debug)]
pub enum Command {
    Fvector {
        input: String,
    },
    Hvector {
        input: String,
    },
    Nonfaces {
        input: String,
    },
    Skeleton {
        d: usize,
        n: u32,
    },
    Complement {
        input: String,
    },
    Link {
        input: String,
        /// Vertex ids of the face, e.g. `1,2`; empty for the empty face.
        #[arg(long, default_value = "")]
        face: String,
    },
    Cone {
        input: String,
    },
    VerifyShelling {
        input: String,
        /// Use the literal double-quantifier check instead of the fast path.
        #[arg(long)]
        brute_force: bool,
    },
    FindShelling {
        input: String,
    },
    IsAustere {
        input: String,
    },
    IsQuiet {
        input: String,
    },
    Echo {
        input: String,
    },
    EchoShelling {
        input: String,
        /// Shelling of the input; defaults to the input's line order, or a search.
        #[arg(long)]
        order: Option<String>,
    },
    ExtendCandidates {
        input: String,
        #[arg(long)]
        pool: Option<String>,
    },
    RemoveGlued {
        input: String,
    },
    Homology {
        input: String,
    },
    ReisnerCm {
        input: String,
    },
    Counterexample {
        name: String,
    },
    CertifySimon,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli);
    let code = result.status.exit_code();
    if let Err(e) = render::emit(&cli, &result) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return ExitCode::from(code);
        }
        eprintln!("shellkit: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
