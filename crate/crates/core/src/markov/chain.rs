use std::fmt;

use serde_json::{json, Value};

use crate::corpus::{LetterSequence, Provenance};
use crate::error::{Error, Result};
use crate::stats::chi_square_df1_sf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum State {
    Vowel,
    Consonant,
}

impl State {
    pub(crate) fn index(self) -> usize {
        match self {
            State::Vowel => 0,
            State::Consonant => 1,
        }
    }

    pub(crate) fn from_index(i: usize) -> Self {
        if i == 0 {
            State::Vowel
        } else {
            State::Consonant
        }
    }

    pub fn symbol(self) -> char {
        match self {
            State::Vowel => 'V',
            State::Consonant => 'C',
        }
    }
}

/// A text reduced to its vowel/consonant pattern.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinarySequence {
    pub states: Vec<State>,
    pub source: Provenance,
}

impl BinarySequence {
    pub fn new(states: Vec<State>) -> Self {
        Self {
            states,
            source: Provenance::default(),
        }
    }

    /// Reads a string of `V` and `C` (case-insensitive, whitespace ignored).
    pub fn parse(text: &str) -> Result<Self> {
        let mut states = Vec::new();
        for (position, ch) in text.chars().enumerate() {
            match ch.to_ascii_uppercase() {
                'V' => states.push(State::Vowel),
                'C' => states.push(State::Consonant),
                c if c.is_whitespace() => {}
                _ => {
                    return Err(Error::UnknownSymbol {
                        position,
                        symbol: ch,
                    })
                }
            }
        }
        Ok(Self::new(states))
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn vowel_count(&self) -> u64 {
        self.states.iter().filter(|&&s| s == State::Vowel).count() as u64
    }

    pub fn render(&self) -> String {
        self.states.iter().map(|s| s.symbol()).collect()
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn to_vc_sequence(seq: &LetterSequence) -> BinarySequence {
    let alphabet = seq.alphabet();
    BinarySequence {
        states: seq
            .indices()
            .iter()
            .map(|&i| {
                if alphabet.is_vowel(i) {
                    State::Vowel
                } else {
                    State::Consonant
                }
            })
            .collect(),
        source: seq.source.clone(),
    }
}

/// Adjacent-pair counts of a two-state sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransitionCounts {
    counts: [[u64; 2]; 2],
    pub initial: State,
}

impl TransitionCounts {
    /// `counts[from][to]`, vowel first.
    pub fn from_counts(counts: [[u64; 2]; 2], initial: State) -> Self {
        Self { counts, initial }
    }

    pub fn get(&self, from: State, to: State) -> u64 {
        self.counts[from.index()][to.index()]
    }

    pub fn counts(&self) -> [[u64; 2]; 2] {
        self.counts
    }

    pub fn row_total(&self, from: State) -> u64 {
        self.counts[from.index()].iter().sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    /// Maximum-likelihood `P(to | from)`; `None` for an empty row.
    pub fn probability(&self, from: State, to: State) -> Option<f64> {
        let row = self.row_total(from);
        (row > 0).then(|| self.get(from, to) as f64 / row as f64)
    }
}

pub fn fit_transitions(b: &BinarySequence) -> Result<TransitionCounts> {
    if b.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 states to count transitions, got {}",
            b.len()
        )));
    }
    let mut counts = [[0u64; 2]; 2];
    for w in b.states.windows(2) {
        counts[w[0].index()][w[1].index()] += 1;
    }
    Ok(TransitionCounts {
        counts,
        initial: b.states[0],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MarkovTestReport {
    pub chi_square: f64,
    pub df: u32,
    pub p_value: f64,
    pub p_vv: f64,
    pub p_vc: f64,
    pub p_cv: f64,
    pub p_cc: f64,
    pub continuity_correction: bool,
}

impl MarkovTestReport {
    pub fn to_json(&self) -> Value {
        json!({
            "chi_square": self.chi_square,
            "df": self.df,
            "p_value": self.p_value,
            "p_vc": self.p_vc,
            "p_cv": self.p_cv,
            "p_vv": self.p_vv,
            "p_cc": self.p_cc,
        })
    }
}

/// Pearson chi-square test of independence on the 2x2 transition table.
///
/// Expected counts are products of the row and column margins over the
/// total; cells with zero expectation contribute nothing. With
/// `continuity_correction` each `|O - E|` is reduced by 0.5 (Yates).
pub fn independence_test(
    t: &TransitionCounts,
    continuity_correction: bool,
) -> Result<MarkovTestReport> {
    for s in [State::Vowel, State::Consonant] {
        if t.row_total(s) == 0 {
            return Err(Error::DegenerateChain(format!(
                "no transitions out of state {}",
                s.symbol()
            )));
        }
    }
    let n = t.total() as f64;
    let rows = [
        t.counts[0][0] + t.counts[0][1],
        t.counts[1][0] + t.counts[1][1],
    ];
    let cols = [
        t.counts[0][0] + t.counts[1][0],
        t.counts[0][1] + t.counts[1][1],
    ];
    let mut chi = 0.0;
    for (i, &row) in rows.iter().enumerate() {
        for (j, &col) in cols.iter().enumerate() {
            let expected = row as f64 * col as f64 / n;
            if expected == 0.0 {
                continue;
            }
            let mut diff = (t.counts[i][j] as f64 - expected).abs();
            if continuity_correction {
                diff = (diff - 0.5).max(0.0);
            }
            chi += diff * diff / expected;
        }
    }
    let p = |a, b| t.probability(a, b).expect("rows checked nonempty");
    Ok(MarkovTestReport {
        chi_square: chi,
        df: 1,
        p_value: chi_square_df1_sf(chi),
        p_vv: p(State::Vowel, State::Vowel),
        p_vc: p(State::Vowel, State::Consonant),
        p_cv: p(State::Consonant, State::Vowel),
        p_cc: p(State::Consonant, State::Consonant),
        continuity_correction,
    })
}
