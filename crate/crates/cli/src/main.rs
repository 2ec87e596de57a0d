//! `cliquetree`: zero forcing, spectra and extremal checks for clique trees.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{GlobalArgs, RunConfig};
use error::CliResult;

#[derive(Debug, Parser)]
#[command(name = "cliquetree", version, about = "Zero forcing and spectral radius of clique trees")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Zero forcing number and closure.
    #[command(subcommand)]
    Zf(ZfCommand),
    /// Spectral radius, quotient matrices and the extremal polynomials.
    #[command(subcommand)]
    Spec(SpecCommand),
    /// Spectral-radius-raising transforms.
    #[command(subcommand)]
    Transform(TransformCommand),
    /// List clique trees up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Exhaustive and randomized checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
enum ZfCommand {
    /// Minimum zero forcing set by subset search.
    Exact { graph: PathBuf },
    /// Block formula for clique trees: Z = n - b.
    Formula { graph: PathBuf },
    /// Color-change closure of a seed set.
    Closure {
        graph: PathBuf,
        /// Comma-separated seed vertices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        seed: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum SpecCommand {
    /// Spectral radius and Perron vector.
    Rho { graph: PathBuf },
    /// Quotient matrix of a vertex partition; pass --partition once per part.
    Quotient {
        graph: PathBuf,
        /// One part as comma-separated vertices, e.g. `--partition 1,2 --partition 0`.
        #[arg(long, required = true)]
        partition: Vec<String>,
    },
    /// Cubic factor f(x) of the extremal characteristic polynomial.
    Fpoly { n: usize, k: usize },
    /// Factored characteristic polynomial of the extremal graph.
    Gpoly { n: usize, k: usize },
    /// Lower and upper bounds on the extremal spectral radius.
    Bounds { n: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Merge1,
    Merge2,
    Relocate,
    Move,
}

#[derive(Debug, Subcommand)]
enum TransformCommand {
    /// Apply one transform. Omitted vertex and block arguments are chosen
    /// from the Perron vector.
    Apply(ApplyArgs),
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    #[arg(long, value_enum)]
    pub rule: RuleArg,
    #[arg(long)]
    pub input: PathBuf,
    /// Write the transformed graph here as an edge list.
    #[arg(long)]
    pub emit: Option<PathBuf>,
    /// Block id (relocate: the K_m block; move: the pendant block).
    #[arg(long)]
    pub block: Option<usize>,
    #[arg(long)]
    pub from: Option<usize>,
    #[arg(long)]
    pub to: Option<usize>,
    /// Shared cut vertex of the two merged blocks.
    #[arg(long)]
    pub v: Option<usize>,
    #[arg(long)]
    pub l_block: Option<usize>,
    #[arg(long)]
    pub m_block: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Keep only clique trees with this zero forcing number.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub min_block: usize,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Check that the extremal graph is the unique maximizer of G(n,k).
    MainTheorem {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// The main-theorem check for every valid (n,k) in a range.
    Sweep {
        #[arg(long, default_value_t = 6)]
        nmin: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Range of Z over clique trees on n vertices and its minimizers.
    Remark {
        #[arg(long, default_value_t = 3)]
        nmin: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Randomized lemma suites.
    Lemmas {
        /// Instances per randomized suite.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Largest n for the exhaustive pendant-block Perron check.
        #[arg(long, default_value_t = 12)]
        perron_nmax: usize,
        /// Overrides the top-level `--seed`.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    let cfg = RunConfig::try_from(cli.global)?;
    match cli.command {
        Command::Zf(ZfCommand::Exact { graph }) => commands::zf_exact(&cfg, &graph),
        Command::Zf(ZfCommand::Formula { graph }) => commands::zf_formula(&cfg, &graph),
        Command::Zf(ZfCommand::Closure { graph, seed }) => commands::zf_closure(&cfg, &graph, &seed),
        Command::Spec(SpecCommand::Rho { graph }) => commands::spec_rho(&cfg, &graph),
        Command::Spec(SpecCommand::Quotient { graph, partition }) => commands::spec_quotient(&cfg, &graph, &partition),
        Command::Spec(SpecCommand::Fpoly { n, k }) => commands::spec_fpoly(&cfg, n, k),
        Command::Spec(SpecCommand::Gpoly { n, k }) => commands::spec_gpoly(&cfg, n, k),
        Command::Spec(SpecCommand::Bounds { n, k }) => commands::spec_bounds(&cfg, n, k),
        Command::Transform(TransformCommand::Apply(args)) => commands::transform_apply(&cfg, &args),
        Command::Enumerate(args) => commands::enumerate(&cfg, &args),
        Command::Verify(VerifyCommand::MainTheorem { n, k }) => commands::verify_main_theorem(&cfg, n, k),
        Command::Verify(VerifyCommand::Sweep { nmin, nmax }) => commands::verify_sweep(&cfg, nmin, nmax),
        Command::Verify(VerifyCommand::Remark { nmin, nmax }) => commands::verify_remark(&cfg, nmin, nmax),
        Command::Verify(VerifyCommand::Lemmas { count, perron_nmax, seed }) => {
            let cfg = RunConfig {
                seed: seed.unwrap_or(cfg.seed),
                ..cfg
            };
            commands::verify_lemmas(&cfg, count, perron_nmax)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
