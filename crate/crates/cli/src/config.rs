use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

/// Letter counting, frequency analysis and classical cryptanalysis.
///
/// Tables default to CSV and reports to JSON; `--format` overrides either.
#[derive(Debug, Parser)]
#[command(name = "lettercount", version)]
pub struct RunConfig {
    /// Builtin alphabet name (en, en-y-vowel, la, fr, it) or path to an alphabet file
    #[arg(long, global = true, default_value = "en")]
    pub alphabet: String,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Text files; several are counted as one corpus
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Letter counts with proportions and ranks
    Count(Inputs),
    /// Adjacent letter pair counts
    Digrams(Inputs),
    /// Distance between the letter tables of two texts
    Compare { first: PathBuf, second: PathBuf },
    /// Distance of growing samples to the whole-text table
    Stability {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Sample letters at random positions instead of taking prefixes
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// First, second, penultimate and last letters of words, and doubled letters
    Positions(Inputs),
    /// Vowel/consonant statistics
    #[command(subcommand)]
    Style(StyleCommand),
    /// Letters that are significantly rarer than in a reference text
    Lipogram {
        file: PathBuf,
        #[arg(long)]
        reference: PathBuf,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
    },
    /// Zeroth, first and second order entropy in bits per letter
    Entropy(Inputs),
    /// Random text from letter or vowel/consonant statistics
    Generate {
        /// Model prefix written by train-model
        #[arg(long, conflicts_with = "from")]
        model: Option<PathBuf>,
        /// Train on this text instead of loading a model
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        order: u8,
        /// Emit a vowel/consonant chain fitted to --from
        #[arg(long, requires = "from")]
        vc: bool,
        #[arg(long, default_value_t = 200)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Word rank-frequency table and power-law fit
    Zipf {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = lettercount::zipf::DEFAULT_MIN_COUNT)]
        min_count: u64,
        /// Text output lists this many words
        #[arg(long, default_value_t = 20)]
        top: usize,
    },
    /// Recover a substitution key by digram hill climbing
    Solve {
        file: PathBuf,
        /// Model prefix written by train-model
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 30)]
        max_stale: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cipher symbol inventory, one character per letter; defaults to the alphabet's letters
        #[arg(long)]
        symbols: Option<String>,
        /// Warn when the cryptogram has fewer symbols than this
        #[arg(long, default_value_t = lettercount::cipher::MIN_CRYPTOGRAM_LENGTH)]
        min_length: usize,
        #[arg(long, default_value_t = lettercount::cipher::DEFAULT_SMOOTHING)]
        smoothing: f64,
    },
    /// Two-state vowel/consonant chains
    #[command(subcommand)]
    Markov(MarkovCommand),
    /// Write `<out>.unigram.csv` and `<out>.digram.csv` from a corpus
    TrainModel {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Encipher a text with a given or random substitution key
    Encrypt {
        file: PathBuf,
        /// Cipher letters in alphabet order, e.g. "qwertyuiopasdfghjklzxcvbnm"
        #[arg(long)]
        key: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum StyleCommand {
    /// Vowel and consonant counts, one row per file
    Vc(Inputs),
    /// Place the vowel share against 7/16 and 3/7
    Alberti(Inputs),
    /// Two-proportion z-test on the vowel shares of two texts
    Compare { first: PathBuf, second: PathBuf },
    /// Range of vowels per 100 consonants over files, or over blocks of one file
    Compass {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = lettercount::stylometry::DEFAULT_BLOCK)]
        block: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum MarkovCommand {
    /// Chi-square test of independence between successive letters' classes
    Test {
        file: PathBuf,
        /// Apply the Yates continuity correction
        #[arg(long)]
        continuity: bool,
    },
}
