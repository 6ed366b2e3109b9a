use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Homotopy computations on Gauss words and Gauss phrases.
///
/// Words are written as letters from A-Z, a-z, 0-9, each used exactly
/// twice; components of a phrase are separated by '|'; the empty word is
/// '-'.
#[derive(Debug, Parser)]
#[command(name = "gauss", version)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Exit with status 1 when the result shows the input is nontrivial.
    #[arg(long, global = true)]
    pub expect_trivial: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check that the input is a Gauss word or phrase.
    Validate { input: String },

    /// Rename letters in order of first occurrence.
    Canon { input: String },

    /// List the moves that apply to a phrase.
    Moves {
        input: String,
        #[arg(long, default_value = "closed")]
        policy: String,
        /// Also list insertions (H1', H2', H2a').
        #[arg(long)]
        insertions: bool,
    },

    /// Apply moves in order, e.g. `apply ABACDCBD H3c@1:1,3,6 SHIFT@1`.
    Apply {
        input: String,
        #[arg(required = true)]
        moves: Vec<String>,
        /// Reject moves the policy does not allow.
        #[arg(long)]
        policy: Option<String>,
    },

    /// The S invariant of a phrase.
    S { input: String },

    /// The S_m invariant of a two-component phrase.
    Sm { input: String },

    /// Image of the z invariant of a word.
    Z { word: String },

    /// Image of the z_o invariant of a word.
    Zo { word: String },

    /// Parity of each letter of a word.
    Parity { word: String },

    /// Delete the odd letters of a word.
    Cover {
        word: String,
        /// Print every word of the cover tower.
        #[arg(long)]
        iterate: bool,
    },

    /// Wrap each odd letter's first occurrence in a fresh letter.
    Lift {
        word: String,
        /// Number of lifts to apply.
        #[arg(long, default_value_t = 1)]
        times: usize,
    },

    /// Syntactic height and base of a word.
    Height {
        word: String,
        /// Also search for an earlier level homotopic to its cover.
        #[arg(long)]
        refine: bool,
        #[arg(long, default_value = "closed")]
        policy: String,
        #[arg(long)]
        rank_cap: Option<usize>,
        #[arg(long)]
        node_cap: Option<usize>,
    },

    /// Bounded search for a sequence of moves between two phrases.
    Search {
        a: String,
        b: String,
        #[arg(long, default_value = "closed")]
        policy: String,
        /// Largest rank of intermediate phrases [default: max rank + 2].
        #[arg(long)]
        rank_cap: Option<usize>,
        #[arg(long)]
        node_cap: Option<usize>,
        /// Write the move sequence here, one move per line.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },

    /// Smallest-rank phrase reachable within the caps.
    Reduce {
        input: String,
        #[arg(long, default_value = "closed")]
        policy: String,
        /// [default: rank + 2]
        #[arg(long)]
        rank_cap: Option<usize>,
        #[arg(long)]
        node_cap: Option<usize>,
    },

    /// Replay the worked examples and randomized invariance checks.
    PaperSelftest {
        #[arg(long, default_value_t = 20_260_101)]
        seed: u64,
        /// Random fillers per uninvolved-letter case.
        #[arg(long, default_value_t = 20)]
        fillers: usize,
        /// Random move trials per invariant.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },

    /// Run one command per line of FILE ('-' for stdin), printing one
    /// JSON line per input line.
    Batch { file: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Canon { .. } => "canon",
            Command::Moves { .. } => "moves",
            Command::Apply { .. } => "apply",
            Command::S { .. } => "s",
            Command::Sm { .. } => "sm",
            Command::Z { .. } => "z",
            Command::Zo { .. } => "zo",
            Command::Parity { .. } => "parity",
            Command::Cover { .. } => "cover",
            Command::Lift { .. } => "lift",
            Command::Height { .. } => "height",
            Command::Search { .. } => "search",
            Command::Reduce { .. } => "reduce",
            Command::PaperSelftest { .. } => "paper-selftest",
            Command::Batch { .. } => "batch",
        }
    }
}
