use crate::cipher::LanguageModel;
use crate::corpus::{LetterSequence, Provenance};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

use super::chain::{BinarySequence, State, TransitionCounts};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// Independent draws from the unigram table.
    Zero,
    /// Each letter drawn from the digram row of the one before it.
    One,
}

/// Samples `length` letters from the model's raw counts (no smoothing).
///
/// The first letter, and every letter in order 0, comes from the unigram
/// table. Reaching a letter whose digram row is empty is an error.
pub fn generate_letters(
    model: &LanguageModel,
    order: Order,
    length: usize,
    seed: u64,
) -> Result<LetterSequence> {
    let alphabet = model.alphabet().clone();
    let label = Provenance::new(format!("generated order-{} seed {seed}", order as u8));
    if length == 0 {
        return Ok(LetterSequence::from_indices_unchecked(
            alphabet,
            Vec::new(),
            label,
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let unigram = model.unigram().counts();
    let first = rng
        .weighted_index(unigram)
        .ok_or_else(|| Error::NonNormalizableRow("unigram table is empty".into()))?;
    let mut out = Vec::with_capacity(length);
    out.push(first as u8);
    while out.len() < length {
        let prev = *out.last().expect("nonempty");
        let weights = match order {
            Order::Zero => unigram,
            Order::One => model.digram().row(prev),
        };
        let next = rng.weighted_index(weights).ok_or_else(|| {
            Error::NonNormalizableRow(format!("no digrams start with {:?}", alphabet.letter(prev)))
        })?;
        out.push(next as u8);
    }
    Ok(LetterSequence::from_indices_unchecked(alphabet, out, label))
}

/// Runs the two-state chain for `length` steps.
///
/// The first state is drawn from the row totals, i.e. how often each state
/// was left in the fitted sequence.
pub fn generate_vc(t: &TransitionCounts, length: usize, seed: u64) -> Result<BinarySequence> {
    let mut states = Vec::with_capacity(length);
    if length > 0 {
        let mut rng = SplitMix64::new(seed);
        let margins = [t.row_total(State::Vowel), t.row_total(State::Consonant)];
        let rows = t.counts();
        let mut current = State::from_index(
            rng.weighted_index(&margins)
                .ok_or_else(|| Error::NonNormalizableRow("transition table is empty".into()))?,
        );
        states.push(current);
        while states.len() < length {
            let i = rng.weighted_index(&rows[current.index()]).ok_or_else(|| {
                Error::NonNormalizableRow(format!(
                    "no transitions out of state {}",
                    current.symbol()
                ))
            })?;
            current = State::from_index(i);
            states.push(current);
        }
    }
    Ok(BinarySequence {
        states,
        source: Provenance::new(format!("generated chain seed {seed}")),
    })
}
