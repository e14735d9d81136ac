//! Letter counting toolkit.
//!
//! The crate covers the classical uses of letter counts:
//!
//! * [`alphabet`] and [`corpus`]: alphabets with vowel sets and fold rules,
//!   and normalization of raw text into letter and word sequences.
//! * [`freq`]: letter, digram and positional tables, ranks, Wilson intervals,
//!   table distances and sample-size stability curves.
//! * [`cipher`]: monoalphabetic substitution, rank-matching keys, digram
//!   likelihood scoring and a hill-climbing solver.
//! * [`stylometry`]: vowel/consonant profiles, the 7/16 and 3/7 share
//!   thresholds, two-sample tests, variation summaries and lipogram scans.
//! * [`markov`]: vowel/consonant chains, the 2x2 independence test,
//!   entropy estimates and seeded text generation.
//! * [`zipf`]: word rank-frequency tables and log-log power-law fits.
//!
//! Every randomized routine takes an explicit seed and draws from
//! [`rng::SplitMix64`], so results are reproducible.

pub mod alphabet;
pub mod cipher;
pub mod corpus;
pub mod error;
pub mod freq;
pub mod markov;
pub mod rng;
mod stats;
pub mod stylometry;
pub mod zipf;

pub use alphabet::{load_alphabet, Alphabet, FoldTarget};
pub use corpus::{normalize, tokenize_words, LetterSequence, Provenance, WordSequence};
pub use error::{Error, Result};
