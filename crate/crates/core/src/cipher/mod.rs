//! Monoalphabetic substitution: keys, rank-matching, digram scoring and a solver.

mod key;
mod model;
mod solver;

pub use key::{
    decrypt, encrypt, frequency_match_key, length_check, Cryptogram, Glyphs, LengthWarning,
    SubstitutionKey, MIN_CRYPTOGRAM_LENGTH,
};
pub use model::{score, LanguageModel, DEFAULT_SMOOTHING};
pub use solver::{hill_climb_solve, SolverConfig, SolverReport};
