use std::path::PathBuf;

use clap::{Args, ValueEnum};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Flags shared by every subcommand; each can also be set from the
/// environment.
#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Eigensolver residual tolerance.
    #[arg(long, global = true, env = "CLIQUETREE_TOL", default_value_t = cliquetree::spectral::DEFAULT_TOL)]
    pub tol: f64,

    /// Largest n for exhaustive zero forcing search.
    #[arg(long, global = true, env = "CLIQUETREE_CAP", default_value_t = cliquetree::zero_forcing::DEFAULT_EXHAUSTIVE_CAP)]
    pub cap: usize,

    /// Largest n for clique-tree enumeration.
    #[arg(long, global = true, env = "CLIQUETREE_ENUM_CAP", default_value_t = cliquetree::enumeration::DEFAULT_ENUM_CAP)]
    pub enum_cap: usize,

    /// Directory for verification reports.
    #[arg(long, global = true, env = "CLIQUETREE_OUT", default_value = "results")]
    pub out: PathBuf,

    /// Output format on stdout.
    #[arg(long, global = true, env = "CLIQUETREE_FORMAT", value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for the randomized lemma suites. Not global: `zf closure` has its
    /// own `--seed`, so give this one before the subcommand or to
    /// `verify lemmas` directly.
    #[arg(long, env = "CLIQUETREE_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for the sweep (0 = one per core).
    #[arg(long, global = true, env = "CLIQUETREE_JOBS", default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub tolerance: f64,
    pub exhaustive_cap: usize,
    pub enum_cap: usize,
    pub output_dir: PathBuf,
    pub format: Format,
    pub seed: u64,
    pub jobs: usize,
}

impl TryFrom<GlobalArgs> for RunConfig {
    type Error = CliError;

    fn try_from(a: GlobalArgs) -> CliResult<Self> {
        if !(a.tol > 0.0 && a.tol.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {}", a.tol)));
        }
        if a.cap < 3 || a.enum_cap < 3 {
            return Err(CliError::Usage("--cap and --enum-cap must be at least 3".into()));
        }
        Ok(RunConfig {
            tolerance: a.tol,
            exhaustive_cap: a.cap,
            enum_cap: a.enum_cap,
            output_dir: a.out,
            format: a.format,
            seed: a.seed,
            jobs: a.jobs,
        })
    }
}
