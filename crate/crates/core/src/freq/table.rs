use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::alphabet::Alphabet;
use crate::corpus::LetterSequence;
use crate::error::{Error, Result};

/// Letter counts over a whole alphabet. Letters never seen are present with count 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    alphabet: Arc<Alphabet>,
    counts: Vec<u64>,
    total: u64,
}

impl FrequencyTable {
    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        let n = alphabet.len();
        Self {
            alphabet,
            counts: vec![0; n],
            total: 0,
        }
    }

    /// Counts in alphabet order.
    pub fn from_counts(alphabet: Arc<Alphabet>, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != alphabet.len() {
            return Err(Error::SizeMismatch {
                left: counts.len(),
                right: alphabet.len(),
            });
        }
        let total = counts.iter().sum();
        Ok(Self {
            alphabet,
            counts,
            total,
        })
    }

    /// Counts for named letters; unnamed letters get 0.
    pub fn from_pairs(alphabet: Arc<Alphabet>, pairs: &[(char, u64)]) -> Result<Self> {
        let mut counts = vec![0; alphabet.len()];
        for &(c, n) in pairs {
            let i = alphabet.index_of(c).ok_or_else(|| {
                Error::InvalidArgument(format!("{c:?} is not a letter of `{}`", alphabet.name()))
            })?;
            counts[usize::from(i)] += n;
        }
        Self::from_counts(alphabet, counts)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count_at(&self, index: u8) -> u64 {
        self.counts[usize::from(index)]
    }

    pub fn count_of(&self, letter: char) -> Option<u64> {
        self.alphabet.index_of(letter).map(|i| self.count_at(i))
    }

    /// Relative frequencies; all zero for an empty table.
    pub fn proportions(&self) -> Vec<f64> {
        if self.total == 0 {
            return vec![0.0; self.counts.len()];
        }
        let t = self.total as f64;
        self.counts.iter().map(|&c| c as f64 / t).collect()
    }

    /// CSV with a `letter,count,proportion` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("letter,count,proportion\n");
        for (i, p) in self.proportions().into_iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{:.6}",
                self.alphabet.letters()[i],
                self.counts[i],
                p
            );
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut counts = Map::new();
        let mut props = Map::new();
        for (i, p) in self.proportions().into_iter().enumerate() {
            let key = self.alphabet.letters()[i].to_string();
            counts.insert(key.clone(), json!(self.counts[i]));
            props.insert(key, json!(round6(p)));
        }
        json!({
            "alphabet": self.alphabet.name(),
            "total": self.total,
            "counts": counts,
            "proportions": props,
        })
    }
}

/// Counts of ordered adjacent letter pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigramTable {
    alphabet: Arc<Alphabet>,
    counts: Vec<u64>,
    total: u64,
}

impl DigramTable {
    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        let n = alphabet.len();
        Self {
            alphabet,
            counts: vec![0; n * n],
            total: 0,
        }
    }

    /// Row-major `n x n` counts (row = first letter).
    pub fn from_counts(alphabet: Arc<Alphabet>, counts: Vec<u64>) -> Result<Self> {
        let n = alphabet.len();
        if counts.len() != n * n {
            return Err(Error::SizeMismatch {
                left: counts.len(),
                right: n * n,
            });
        }
        let total = counts.iter().sum();
        Ok(Self {
            alphabet,
            counts,
            total,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, first: u8, second: u8) -> u64 {
        self.counts[usize::from(first) * self.alphabet.len() + usize::from(second)]
    }

    pub fn get_pair(&self, first: char, second: char) -> Option<u64> {
        Some(self.get(
            self.alphabet.index_of(first)?,
            self.alphabet.index_of(second)?,
        ))
    }

    pub fn row(&self, first: u8) -> &[u64] {
        let n = self.alphabet.len();
        let start = usize::from(first) * n;
        &self.counts[start..start + n]
    }

    pub fn row_total(&self, first: u8) -> u64 {
        self.row(first).iter().sum()
    }

    pub(crate) fn add(&mut self, first: u8, second: u8, n: u64) {
        let k = self.alphabet.len();
        self.counts[usize::from(first) * k + usize::from(second)] += n;
        self.total += n;
    }

    pub fn merge(&self, other: &DigramTable) -> Result<DigramTable> {
        Alphabet::ensure_same(&self.alphabet, &other.alphabet)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a + b)
            .collect();
        DigramTable::from_counts(self.alphabet.clone(), counts)
    }

    /// CSV with a `first,second,count` header; zero cells omitted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("first,second,count\n");
        let letters = self.alphabet.letters();
        let n = letters.len();
        for (k, &c) in self.counts.iter().enumerate() {
            if c > 0 {
                let _ = writeln!(out, "{},{},{}", letters[k / n], letters[k % n], c);
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let letters = self.alphabet.letters();
        let n = letters.len();
        let pairs: Vec<Value> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| {
                json!({
                    "first": letters[k / n].to_string(),
                    "second": letters[k % n].to_string(),
                    "count": c,
                })
            })
            .collect();
        json!({
            "alphabet": self.alphabet.name(),
            "total": self.total,
            "counts": pairs,
        })
    }
}

pub fn count_letters(seq: &LetterSequence) -> FrequencyTable {
    let mut counts = vec![0u64; seq.alphabet().len()];
    for &i in seq.indices() {
        counts[usize::from(i)] += 1;
    }
    FrequencyTable {
        alphabet: seq.alphabet().clone(),
        counts,
        total: seq.len() as u64,
    }
}

/// Overlapping adjacent pairs; a sequence of length `n` yields `max(0, n - 1)`.
pub fn count_digrams(seq: &LetterSequence) -> DigramTable {
    let mut table = DigramTable::empty(seq.alphabet().clone());
    for w in seq.indices().windows(2) {
        table.add(w[0], w[1], 1);
    }
    table
}

/// Pointwise sum of two tables over the same alphabet.
pub fn merge(a: &FrequencyTable, b: &FrequencyTable) -> Result<FrequencyTable> {
    Alphabet::ensure_same(&a.alphabet, &b.alphabet)?;
    let counts = a.counts.iter().zip(&b.counts).map(|(x, y)| x + y).collect();
    FrequencyTable::from_counts(a.alphabet.clone(), counts)
}

/// Letter indices by decreasing count, ties in alphabet order.
pub fn rank_indices(t: &FrequencyTable) -> Vec<u8> {
    let mut order: Vec<u8> = (0..t.counts.len()).map(|i| i as u8).collect();
    // stable sort keeps alphabet order among equal counts
    order.sort_by_key(|&a| std::cmp::Reverse(t.count_at(a)));
    order
}

pub fn rank_order(t: &FrequencyTable) -> Vec<char> {
    rank_indices(t)
        .into_iter()
        .map(|i| t.alphabet.letter(i))
        .collect()
}

pub(crate) fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}
