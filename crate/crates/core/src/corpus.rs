//! Normalized letter and word sequences extracted from raw text.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// Where a sequence came from and how much of the input was thrown away.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Provenance {
    pub label: String,
    /// Characters that were neither letters nor folded onto a letter.
    pub discarded: usize,
}

impl Provenance {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            discarded: 0,
        }
    }
}

/// A sequence of alphabet letters, stored as indices into the alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterSequence {
    alphabet: Arc<Alphabet>,
    symbols: Vec<u8>,
    pub source: Provenance,
}

impl LetterSequence {
    /// Builds a sequence from letter indices, checking each is in range.
    pub fn from_indices(
        alphabet: Arc<Alphabet>,
        symbols: Vec<u8>,
        source: Provenance,
    ) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| usize::from(s) >= alphabet.len()) {
            return Err(Error::InvalidArgument(format!(
                "letter index {bad} outside alphabet `{}` of size {}",
                alphabet.name(),
                alphabet.len()
            )));
        }
        Ok(Self {
            alphabet,
            symbols,
            source,
        })
    }

    pub(crate) fn from_indices_unchecked(
        alphabet: Arc<Alphabet>,
        symbols: Vec<u8>,
        source: Provenance,
    ) -> Self {
        debug_assert!(symbols.iter().all(|&s| usize::from(s) < alphabet.len()));
        Self {
            alphabet,
            symbols,
            source,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn indices(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn chars(&self) -> impl Iterator<Item = char> + '_ {
        self.symbols.iter().map(|&i| self.alphabet.letter(i))
    }

    /// The letters joined into a string.
    pub fn render(&self) -> String {
        self.chars().collect()
    }

    /// Contiguous sub-sequence `range`, labelled with the range.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        let label = format!("{}[{}..{}]", self.source.label, range.start, range.end);
        Self::from_indices_unchecked(
            self.alphabet.clone(),
            self.symbols[range].to_vec(),
            Provenance::new(label),
        )
    }

    /// Appends `other`, which must share the alphabet.
    pub fn concat(&self, other: &LetterSequence) -> Result<Self> {
        Alphabet::ensure_same(&self.alphabet, &other.alphabet)?;
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Self::from_indices_unchecked(
            self.alphabet.clone(),
            symbols,
            Provenance {
                label: format!("{}+{}", self.source.label, other.source.label),
                discarded: self.source.discarded + other.source.discarded,
            },
        ))
    }
}

impl fmt::Display for LetterSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.chars() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Words: maximal runs of letters, each stored as letter indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSequence {
    alphabet: Arc<Alphabet>,
    words: Vec<Vec<u8>>,
    pub source: Provenance,
}

impl WordSequence {
    /// Builds a word sequence from strings; every character must be a letter.
    pub fn from_words<S: AsRef<str>>(
        alphabet: Arc<Alphabet>,
        words: &[S],
        label: &str,
    ) -> Result<Self> {
        let mut out = Vec::with_capacity(words.len());
        for w in words {
            let w = w.as_ref();
            if w.is_empty() {
                return Err(Error::InvalidArgument("empty word".into()));
            }
            let idx = w
                .chars()
                .map(|c| {
                    alphabet.index_of(c).ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "{c:?} in {w:?} is not a letter of `{}`",
                            alphabet.name()
                        ))
                    })
                })
                .collect::<Result<Vec<u8>>>()?;
            out.push(idx);
        }
        Ok(Self {
            alphabet,
            words: out,
            source: Provenance::new(label),
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word_indices(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.words.iter().map(Vec::as_slice)
    }

    pub fn words(&self) -> impl Iterator<Item = String> + '_ {
        self.words
            .iter()
            .map(|w| w.iter().map(|&i| self.alphabet.letter(i)).collect())
    }

    /// All words concatenated, as a letter sequence.
    pub fn joined(&self) -> LetterSequence {
        LetterSequence::from_indices_unchecked(
            self.alphabet.clone(),
            self.words.concat(),
            self.source.clone(),
        )
    }
}

/// Case-folds, applies fold rules and drops everything that is not a letter.
pub fn normalize(raw: &str, alphabet: &Arc<Alphabet>) -> LetterSequence {
    normalize_labeled(raw, alphabet, "")
}

pub fn normalize_labeled(raw: &str, alphabet: &Arc<Alphabet>, label: &str) -> LetterSequence {
    let mut symbols = Vec::with_capacity(raw.len());
    let mut discarded = 0;
    scan(raw, alphabet, |item| match item {
        Some(i) => symbols.push(i),
        None => discarded += 1,
    });
    LetterSequence::from_indices_unchecked(
        alphabet.clone(),
        symbols,
        Provenance {
            label: label.to_string(),
            discarded,
        },
    )
}

/// Splits text into maximal runs of letters. Any character that does not
/// map to a letter (including apostrophes and hyphens) ends the current word.
pub fn tokenize_words(raw: &str, alphabet: &Arc<Alphabet>) -> WordSequence {
    tokenize_words_labeled(raw, alphabet, "")
}

pub fn tokenize_words_labeled(raw: &str, alphabet: &Arc<Alphabet>, label: &str) -> WordSequence {
    let mut words = Vec::new();
    let mut current = Vec::new();
    let mut discarded = 0;
    scan(raw, alphabet, |item| match item {
        Some(i) => current.push(i),
        None => {
            discarded += 1;
            if !current.is_empty() {
                words.push(std::mem::take(&mut current));
            }
        }
    });
    if !current.is_empty() {
        words.push(current);
    }
    WordSequence {
        alphabet: alphabet.clone(),
        words,
        source: Provenance {
            label: label.to_string(),
            discarded,
        },
    }
}

/// Feeds `Some(letter)` or `None` (discard) for every lowercased character.
fn scan(raw: &str, alphabet: &Alphabet, mut sink: impl FnMut(Option<u8>)) {
    for c in raw.chars() {
        for l in c.to_lowercase() {
            sink(alphabet.classify_lowered(l));
        }
    }
}
