use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands;
use crate::{render, CliError, Outcome};

#[derive(Debug, Parser)]
#[command(name = "chaincp", version, about = "Exact chain groups, diagonal bimodules and generator-algebra identity checks")]
pub struct Cli {
    /// Pretty-print output JSON with this many spaces of indentation.
    #[arg(long, global = true, value_name = "N")]
    pub json_indent: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    Su2,
    #[value(name = "suN", alias = "sun")]
    SuN,
}

/// Finite group source.
#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct GroupSource {
    /// Group JSON file.
    #[arg(long, value_name = "FILE")]
    pub group: Option<PathBuf>,
    /// Built-in group: `Z<n>`, `S3` or `Q8`.
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chain group of a fusion ring or finite group.
    ChainGroup {
        #[arg(long, conflicts_with_all = ["group", "builtin"])]
        ring: Option<Ring>,
        /// Rank parameter for `suN`.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        source: GroupSource,
        /// Largest dimension in the SU(N) truncation cross-check.
        #[arg(long, default_value_t = 20)]
        max_dim: u64,
        /// Largest spin in the SU(2) truncation cross-check.
        #[arg(long, default_value = "10")]
        max_spin: String,
    },
    /// Tensor product decomposition, left to right.
    Fusion {
        #[arg(long, conflicts_with_all = ["group", "builtin"])]
        ring: Option<Ring>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        source: GroupSource,
        /// Labels to fuse, e.g. `1/2 1/2` or `[1] [1]`.
        #[arg(long, num_args = 1.., required = true, allow_hyphen_values = true)]
        fuse: Vec<String>,
    },
    /// Diagonal bimodule checks.
    Bimodule {
        #[command(subcommand)]
        action: BimoduleCommand,
    },
    /// Generator-algebra identity suites.
    Algebra {
        #[command(subcommand)]
        action: AlgebraCommand,
    },
    /// Overview of a family: chain data, nonsingularity and every suite.
    Report {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, default_value_t = chaincp_core::checks::DEFAULT_SEED)]
        seed: u64,
    },
    /// Group file utilities.
    Group {
        #[command(subcommand)]
        action: GroupCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum BimoduleCommand {
    /// Nonsingularity criteria and singularity witness.
    Check {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCommand {
    /// Runs one suite, or all applicable suites when `--suite` is omitted.
    Verify {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_parser = ["relations", "xnrho", "prorc", "teohrs", "zmap", "lemrv"])]
        suite: Option<String>,
        #[arg(long)]
        level: Option<u32>,
        #[arg(long, default_value_t = chaincp_core::checks::DEFAULT_SEED)]
        seed: u64,
        /// Random samples per case family (suite default when omitted).
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Reports every violated invariant of a group file.
    Validate {
        #[command(flatten)]
        source: GroupSource,
    },
    /// Writes a built-in group as a group file.
    Export {
        #[arg(long, value_name = "NAME")]
        builtin: String,
    },
}

/// Runs a parsed command; returns the text to print and the exit code.
pub fn run(cli: &Cli) -> (String, i32) {
    match dispatch(&cli.command) {
        Ok(Outcome { json, pass }) => (render(&json, cli.json_indent), if pass { 0 } else { 1 }),
        Err(e) => {
            let json = serde_json::json!({ "error": e.to_string() });
            (render(&json, cli.json_indent), e.exit_code())
        }
    }
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::ChainGroup {
            ring,
            n,
            source,
            max_dim,
            max_spin,
        } => match ring {
            Some(Ring::Su2) => commands::chain_group_su2(max_spin),
            Some(Ring::SuN) => commands::chain_group_sun(require_n(*n)?, *max_dim),
            None => commands::chain_group_finite(&commands::group_from_source(source)?),
        },
        Command::Fusion { ring, n, source, fuse } => match ring {
            Some(Ring::Su2) => commands::fusion(&chaincp_core::fusion::Su2, fuse),
            Some(Ring::SuN) => {
                let ring = chaincp_core::fusion::SuN::new(require_n(*n)?)
                    .map_err(|e| CliError::input(format!("n: {e}")))?;
                commands::fusion(&ring, fuse)
            }
            None => {
                let data = commands::group_from_source(source)?;
                let ring = chaincp_core::fusion::FiniteFusion::new(data)
                    .map_err(|e| CliError::input(format!("group: {e}")))?;
                commands::fusion(&ring, fuse)
            }
        },
        Command::Bimodule {
            action: BimoduleCommand::Check { input },
        } => commands::bimodule_check(input),
        Command::Algebra {
            action:
                AlgebraCommand::Verify {
                    input,
                    suite,
                    level,
                    seed,
                    samples,
                },
        } => commands::algebra_verify(input, suite.as_deref(), *level, *seed, *samples),
        Command::Report { input, seed } => commands::report(input, *seed),
        Command::Group {
            action: GroupCommand::Validate { source },
        } => commands::group_validate(source),
        Command::Group {
            action: GroupCommand::Export { builtin },
        } => commands::group_export(builtin),
    }
}

fn require_n(n: Option<usize>) -> Result<usize, CliError> {
    n.ok_or_else(|| CliError::input("--n is required for ring suN"))
}
