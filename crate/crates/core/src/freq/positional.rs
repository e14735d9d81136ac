use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::table::FrequencyTable;
use crate::alphabet::Alphabet;
use crate::corpus::WordSequence;

/// Per-position letter tallies over a word list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionalStats {
    pub initial: FrequencyTable,
    pub final_: FrequencyTable,
    /// Second letter of words with at least two letters.
    pub second: FrequencyTable,
    /// Next-to-last letter of words with at least two letters.
    pub penultimate: FrequencyTable,
    /// Immediate doublings inside words, indexed like the alphabet.
    /// `aaa` contributes two.
    pub doubles: Vec<u64>,
}

impl PositionalStats {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.initial.alphabet()
    }

    pub fn doubles_of(&self, letter: char) -> Option<u64> {
        self.alphabet()
            .index_of(letter)
            .map(|i| self.doubles[usize::from(i)])
    }

    pub fn to_json(&self) -> Value {
        let letters = self.alphabet().letters();
        let mut doubles = Map::new();
        for (i, &d) in self.doubles.iter().enumerate() {
            doubles.insert(letters[i].to_string(), json!(d));
        }
        json!({
            "words": self.initial.total(),
            "initial": self.initial.to_json(),
            "final": self.final_.to_json(),
            "second": self.second.to_json(),
            "penultimate": self.penultimate.to_json(),
            "doubles": doubles,
        })
    }
}

pub fn positional_stats(words: &WordSequence) -> PositionalStats {
    let alphabet = words.alphabet();
    let n = alphabet.len();
    let mut initial = vec![0u64; n];
    let mut final_ = vec![0u64; n];
    let mut second = vec![0u64; n];
    let mut penultimate = vec![0u64; n];
    let mut doubles = vec![0u64; n];

    for w in words.word_indices() {
        let (first, last) = match (w.first(), w.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => continue,
        };
        initial[usize::from(first)] += 1;
        final_[usize::from(last)] += 1;
        if w.len() >= 2 {
            second[usize::from(w[1])] += 1;
            penultimate[usize::from(w[w.len() - 2])] += 1;
        }
        for pair in w.windows(2) {
            if pair[0] == pair[1] {
                doubles[usize::from(pair[0])] += 1;
            }
        }
    }

    let table = |counts| {
        FrequencyTable::from_counts(alphabet.clone(), counts).expect("sized to the alphabet")
    };
    PositionalStats {
        initial: table(initial),
        final_: table(final_),
        second: table(second),
        penultimate: table(penultimate),
        doubles,
    }
}
