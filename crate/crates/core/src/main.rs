use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use smo::harness::{run, ExperimentConfig, Resolution, EXIT_ERROR};

#[derive(Parser)]
#[command(name = "smo", version, about = "Splitting types, double cosets and Goss zeta Euler factors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a polynomial over F_q
    Factor {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Splitting type of one prime
    Split {
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        prime: String,
    },
    /// Splitting types of all primes up to a degree
    Table {
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        deg: usize,
        /// Also print Goss and lifted Euler factors
        #[arg(long)]
        factors: bool,
    },
    /// Compare the Euler factors of two fields (exit 0 identical, 1 differ, 2 inconclusive)
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        deg: usize,
        /// Resolve an unknown prime of A from group data: PRIME=GROUPFILE:DECOMP
        #[arg(long = "resolve-a")]
        resolve_a: Vec<String>,
        /// Same for B
        #[arg(long = "resolve-b")]
        resolve_b: Vec<String>,
    },
    /// Gassmann equivalence and conjugacy of two subgroups
    Gassmann {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
    },
    /// Reconstruct a ramified splitting type from unramified data
    Reconstruct {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        decomp: String,
        /// Compare against the direct fibre computation
        #[arg(long)]
        check: bool,
    },
    /// Frequencies of splitting types over unramified primes
    Census {
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        deg: usize,
    },
    /// Fibres, formula and reconstruction over every group file in a directory
    Sweep {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value_t = 48)]
        max_order: usize,
    },
    /// Teichmüller lift of a constant to precision p^k
    Teichmuller {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: String,
        #[arg(long, short = 'k', default_value_t = 4)]
        precision: u32,
    },
}

fn resolutions(specs: &[String]) -> Result<Vec<Resolution>, String> {
    specs.iter().map(|s| Resolution::parse(s).map_err(|e| e.to_string())).collect()
}

fn config(command: Command) -> Result<ExperimentConfig, String> {
    Ok(match command {
        Command::Factor { q, poly, seed } => ExperimentConfig::Factor { q, poly, seed },
        Command::Split { field, prime } => ExperimentConfig::Split { field, prime },
        Command::Table { field, deg, factors } => ExperimentConfig::Table { field, deg, factors },
        Command::Compare { a, b, deg, resolve_a, resolve_b } => ExperimentConfig::Compare {
            a,
            b,
            deg,
            resolve_a: resolutions(&resolve_a)?,
            resolve_b: resolutions(&resolve_b)?,
        },
        Command::Gassmann { group, h1, h2 } => ExperimentConfig::Gassmann { group, h1, h2 },
        Command::Reconstruct { group, decomp, check } => ExperimentConfig::Reconstruct { group, decomp, check },
        Command::Census { field, deg } => ExperimentConfig::Census { field, deg },
        Command::Sweep { dir, max_order } => ExperimentConfig::Sweep { dir, max_order },
        Command::Teichmuller { q, a, precision } => ExperimentConfig::Teichmuller { q, a, precision },
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let config = match config(cli.command) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let outcome = run(&config);
    if outcome.code == EXIT_ERROR {
        eprint!("{}", outcome.report);
    } else {
        print!("{}", outcome.report);
    }
    ExitCode::from(outcome.code as u8)
}
