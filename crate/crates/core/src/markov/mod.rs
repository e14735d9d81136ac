//! Vowel/consonant chains, the independence test, entropy estimates and text generation.

mod chain;
mod entropy;
mod generate;

pub use chain::{
    fit_transitions, independence_test, to_vc_sequence, BinarySequence, MarkovTestReport, State,
    TransitionCounts,
};
pub use entropy::{entropy_estimates, EntropyReport};
pub use generate::{generate_letters, generate_vc, Order};
