//! `tsf` — find target-specific factors: substrings of a target that never
//! occur in a reference while every shorter piece of them does.

mod commands;
mod dot;
mod index;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tsf_core::LinkMode;

use commands::{
    cmd_dot, cmd_index, cmd_oracle_check, cmd_scan, cmd_words, DotArgs, IndexArgs,
    OracleCheckArgs, ScanArgs, WhichGraph, WordsArgs,
};
use input::InputFormat;
use output::OutputFormat;

#[derive(Parser)]
#[command(
    name = "tsf",
    version,
    about = "Report the factors of a target that are new against a reference",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Fasta,
    Lines,
}

impl From<FormatArg> for InputFormat {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Fasta => InputFormat::Fasta,
            FormatArg::Lines => InputFormat::Lines,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Tsv,
    Json,
}

impl From<OutputArg> for OutputFormat {
    fn from(arg: OutputArg) -> Self {
        match arg {
            OutputArg::Tsv => OutputFormat::Tsv,
            OutputArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphArg {
    Dawg,
    Trie,
}

#[derive(Args)]
struct CommonInput {
    /// Input format for every file argument
    #[arg(long, value_enum, default_value_t = FormatArg::Fasta)]
    format: FormatArg,
    /// Map ASCII a-z to A-Z in sequence data
    #[arg(long)]
    normalize_case: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the target-specific words of a target set against a reference set
    Words {
        /// Reference sequences
        #[arg(long, value_name = "FILE")]
        reference: PathBuf,
        /// Target sequences (all records form one set)
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
        #[command(flatten)]
        common: CommonInput,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputArg::Tsv)]
        output: OutputArg,
        /// Cross-check the result against the naive oracle (exit 2 on divergence)
        #[arg(long)]
        oracle: bool,
    },
    /// Report every occurrence of a target-specific factor, per target record
    Scan {
        /// Reference sequences to preprocess
        #[arg(
            long,
            value_name = "FILE",
            conflicts_with = "index",
            required_unless_present = "index"
        )]
        reference: Option<PathBuf>,
        /// Prebuilt index written by `tsf index`
        #[arg(long, value_name = "FILE")]
        index: Option<PathBuf>,
        /// Target sequences (each record is scanned independently)
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
        #[command(flatten)]
        common: CommonInput,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputArg::Tsv)]
        output: OutputArg,
        /// Follow plain suffix links in the failure loop
        #[arg(long, conflicts_with = "optimized_g")]
        plain_s: bool,
        /// Follow optimized suffix links (the default)
        #[arg(long)]
        optimized_g: bool,
        /// Print the full per-position table instead of occurrence rows
        #[arg(long)]
        table: bool,
        /// Cross-check every record against the naive oracle (exit 2 on divergence)
        #[arg(long)]
        oracle: bool,
    },
    /// Preprocess a reference and save it for later scans
    Index {
        /// Reference sequences
        #[arg(long, value_name = "FILE")]
        reference: PathBuf,
        /// Where to write the index
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        #[command(flatten)]
        common: CommonInput,
    },
    /// Render the automaton or the specific-word trie as DOT
    Dot {
        /// Reference sequences
        #[arg(long, value_name = "FILE")]
        reference: PathBuf,
        /// Target sequences
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
        #[command(flatten)]
        common: CommonInput,
        /// Which graph to render
        #[arg(long, value_enum)]
        which: GraphArg,
        /// Drop trie branches that lead to no accepted word
        #[arg(long)]
        prune: bool,
    },
    /// Run every fast pipeline against its naive mirror
    OracleCheck {
        /// Reference sequences
        #[arg(long, value_name = "FILE")]
        reference: PathBuf,
        /// Target sequences
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
        #[command(flatten)]
        common: CommonInput,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    output::print_stdout(&err.to_string());
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(1)
                }
            };
        }
    };

    let result = match &cli.command {
        Command::Words {
            reference,
            target,
            common,
            output,
            oracle,
        } => cmd_words(WordsArgs {
            reference,
            target,
            format: common.format.into(),
            normalize_case: common.normalize_case,
            output: (*output).into(),
            oracle: *oracle,
        }),
        Command::Scan {
            reference,
            index,
            target,
            common,
            output,
            plain_s,
            optimized_g: _,
            table,
            oracle,
        } => cmd_scan(ScanArgs {
            reference: reference.as_deref(),
            index: index.as_deref(),
            target,
            format: common.format.into(),
            normalize_case: common.normalize_case,
            output: (*output).into(),
            mode: if *plain_s {
                LinkMode::PlainS
            } else {
                LinkMode::OptimizedG
            },
            table: *table,
            oracle: *oracle,
        }),
        Command::Index {
            reference,
            out,
            common,
        } => cmd_index(IndexArgs {
            reference,
            out,
            format: common.format.into(),
            normalize_case: common.normalize_case,
        }),
        Command::Dot {
            reference,
            target,
            common,
            which,
            prune,
        } => cmd_dot(DotArgs {
            reference,
            target,
            format: common.format.into(),
            normalize_case: common.normalize_case,
            which: match which {
                GraphArg::Dawg => WhichGraph::Dawg,
                GraphArg::Trie => WhichGraph::Trie,
            },
            prune: *prune,
        }),
        Command::OracleCheck {
            reference,
            target,
            common,
        } => cmd_oracle_check(OracleCheckArgs {
            reference,
            target,
            format: common.format.into(),
            normalize_case: common.normalize_case,
        }),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("tsf: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
