use std::fmt;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::alphabet::Alphabet;
use crate::corpus::{LetterSequence, Provenance};
use crate::error::{Error, Result};
use crate::freq::{rank_indices, FrequencyTable};
use crate::rng::SplitMix64;

/// Default cryptogram length below which rank matching is unreliable.
pub const MIN_CRYPTOGRAM_LENGTH: usize = 90;

/// The ordered inventory of cipher symbols. Its size equals the alphabet size.
pub type Glyphs = Arc<[char]>;

fn default_glyphs(alphabet: &Alphabet) -> Glyphs {
    alphabet.letters().into()
}

fn check_glyphs(alphabet: &Alphabet, glyphs: &[char]) -> Result<()> {
    if glyphs.len() != alphabet.len() {
        return Err(Error::SizeMismatch {
            left: glyphs.len(),
            right: alphabet.len(),
        });
    }
    for (i, g) in glyphs.iter().enumerate() {
        if glyphs[..i].contains(g) {
            return Err(Error::InvalidKey(format!("duplicate cipher symbol {g:?}")));
        }
        if g.is_whitespace() {
            return Err(Error::InvalidKey(
                "whitespace cannot be a cipher symbol".into(),
            ));
        }
    }
    Ok(())
}

/// A bijection from plaintext letters onto cipher symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionKey {
    alphabet: Arc<Alphabet>,
    glyphs: Glyphs,
    /// plaintext letter index -> cipher symbol index
    forward: Vec<u8>,
}

impl SubstitutionKey {
    pub fn identity(alphabet: Arc<Alphabet>) -> Self {
        let forward = (0..alphabet.len()).map(|i| i as u8).collect();
        let glyphs = default_glyphs(&alphabet);
        Self {
            alphabet,
            glyphs,
            forward,
        }
    }

    /// `forward[i]` is the cipher symbol index for plaintext letter `i`.
    pub fn from_permutation(alphabet: Arc<Alphabet>, forward: Vec<u8>) -> Result<Self> {
        let glyphs = default_glyphs(&alphabet);
        Self::with_glyphs(alphabet, glyphs, forward)
    }

    pub fn with_glyphs(alphabet: Arc<Alphabet>, glyphs: Glyphs, forward: Vec<u8>) -> Result<Self> {
        check_glyphs(&alphabet, &glyphs)?;
        if forward.len() != alphabet.len() {
            return Err(Error::SizeMismatch {
                left: forward.len(),
                right: alphabet.len(),
            });
        }
        let mut seen = vec![false; forward.len()];
        for &f in &forward {
            let slot = seen
                .get_mut(usize::from(f))
                .ok_or_else(|| Error::InvalidKey(format!("cipher index {f} out of range")))?;
            if *slot {
                return Err(Error::InvalidKey(format!("cipher index {f} used twice")));
            }
            *slot = true;
        }
        Ok(Self {
            alphabet,
            glyphs,
            forward,
        })
    }

    /// Parses a key written as the cipher symbols for each letter in alphabet order,
    /// e.g. `"bcdefghijklmnopqrstuvwxyza"` for a shift by one. The symbols of the key
    /// become the glyph inventory when `glyphs` is `None`; otherwise they must all be
    /// drawn from `glyphs`.
    pub fn parse(alphabet: Arc<Alphabet>, text: &str, glyphs: Option<Glyphs>) -> Result<Self> {
        let symbols: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        match glyphs {
            None => {
                let mut sorted: Glyphs = symbols.clone().into();
                // glyph order follows the alphabet where possible
                let letters = alphabet.letters();
                if symbols.iter().all(|c| letters.contains(c)) {
                    sorted = letters.into();
                }
                let forward = symbols
                    .iter()
                    .map(|c| sorted.iter().position(|g| g == c).map(|i| i as u8))
                    .collect::<Option<Vec<u8>>>()
                    .ok_or_else(|| Error::InvalidKey("symbol outside inventory".into()))?;
                Self::with_glyphs(alphabet, sorted, forward)
            }
            Some(glyphs) => {
                let forward = symbols
                    .iter()
                    .map(|c| {
                        glyphs
                            .iter()
                            .position(|g| g == c)
                            .map(|i| i as u8)
                            .ok_or_else(|| {
                                Error::InvalidKey(format!("{c:?} is not a cipher symbol"))
                            })
                    })
                    .collect::<Result<Vec<u8>>>()?;
                Self::with_glyphs(alphabet, glyphs, forward)
            }
        }
    }

    /// Uniformly random key drawn from `rng`.
    pub fn random(alphabet: Arc<Alphabet>, rng: &mut SplitMix64) -> Self {
        let mut forward: Vec<u8> = (0..alphabet.len()).map(|i| i as u8).collect();
        rng.shuffle(&mut forward);
        let glyphs = default_glyphs(&alphabet);
        Self {
            alphabet,
            glyphs,
            forward,
        }
    }

    /// Same mapping, re-targeted at another glyph inventory of the same size.
    pub fn retarget(&self, glyphs: Glyphs) -> Result<Self> {
        Self::with_glyphs(self.alphabet.clone(), glyphs, self.forward.clone())
    }

    /// `compose(first, second)` encrypts with `first` and then with `second`,
    /// so decrypting with it undoes `second` first and `first` last.
    pub fn compose(first: &SubstitutionKey, second: &SubstitutionKey) -> Result<Self> {
        Alphabet::ensure_same(&first.alphabet, &second.alphabet)?;
        let forward = first
            .forward
            .iter()
            .map(|&c| second.forward[usize::from(c)])
            .collect();
        Self::with_glyphs(first.alphabet.clone(), second.glyphs.clone(), forward)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn glyphs(&self) -> &Glyphs {
        &self.glyphs
    }

    pub fn forward(&self) -> &[u8] {
        &self.forward
    }

    /// cipher symbol index -> plaintext letter index
    pub fn inverse(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.forward.len()];
        for (p, &c) in self.forward.iter().enumerate() {
            inv[usize::from(c)] = p as u8;
        }
        inv
    }

    pub fn cipher_for(&self, letter: char) -> Option<char> {
        let i = self.alphabet.index_of(letter)?;
        Some(self.glyphs[usize::from(self.forward[usize::from(i)])])
    }

    /// Number of plaintext letters mapped to the same cipher symbol in both keys.
    pub fn agreement(&self, other: &SubstitutionKey) -> usize {
        self.forward
            .iter()
            .zip(&other.forward)
            .filter(|(a, b)| a == b)
            .count()
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (i, &c) in self.forward.iter().enumerate() {
            map.insert(
                self.alphabet.letters()[i].to_string(),
                json!(self.glyphs[usize::from(c)].to_string()),
            );
        }
        Value::Object(map)
    }
}

impl fmt::Display for SubstitutionKey {
    /// Cipher symbols in plaintext alphabet order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.forward {
            write!(f, "{}", self.glyphs[usize::from(c)])?;
        }
        Ok(())
    }
}

/// An enciphered message: indices into a glyph inventory sized like the alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cryptogram {
    alphabet: Arc<Alphabet>,
    glyphs: Glyphs,
    symbols: Vec<u8>,
    pub source: Provenance,
}

impl Cryptogram {
    /// Reads one symbol per character. Whitespace separates nothing and is
    /// skipped; any other character outside the inventory is an error.
    /// With `glyphs` `None` the inventory is the alphabet's letters, matched
    /// case-insensitively.
    pub fn parse(text: &str, alphabet: Arc<Alphabet>, glyphs: Option<Glyphs>) -> Result<Self> {
        let (glyphs, fold_case) = match glyphs {
            Some(g) => {
                check_glyphs(&alphabet, &g)?;
                (g, false)
            }
            None => (default_glyphs(&alphabet), true),
        };
        let mut symbols = Vec::with_capacity(text.len());
        for (position, ch) in text.chars().enumerate() {
            if ch.is_whitespace() {
                continue;
            }
            let found = glyphs.iter().position(|&g| g == ch).or_else(|| {
                if !fold_case {
                    return None;
                }
                let mut lower = ch.to_lowercase();
                match (lower.next(), lower.next()) {
                    (Some(l), None) => glyphs.iter().position(|&g| g == l),
                    _ => None,
                }
            });
            match found {
                Some(i) => symbols.push(i as u8),
                None => {
                    return Err(Error::UnknownSymbol {
                        position,
                        symbol: ch,
                    })
                }
            }
        }
        Ok(Self {
            alphabet,
            glyphs,
            symbols,
            source: Provenance::default(),
        })
    }

    /// Reads a letter sequence as cipher symbols under the default inventory.
    pub fn from_letters(seq: &LetterSequence) -> Self {
        Self {
            alphabet: seq.alphabet().clone(),
            glyphs: default_glyphs(seq.alphabet()),
            symbols: seq.indices().to_vec(),
            source: seq.source.clone(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn glyphs(&self) -> &Glyphs {
        &self.glyphs
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

    pub fn render(&self) -> String {
        self.symbols
            .iter()
            .map(|&i| self.glyphs[usize::from(i)])
            .collect()
    }

    /// Symbol counts, slot `i` holding cipher symbol `i`. Ties rank in glyph order.
    pub fn symbol_table(&self) -> FrequencyTable {
        let mut counts = vec![0u64; self.alphabet.len()];
        for &s in &self.symbols {
            counts[usize::from(s)] += 1;
        }
        FrequencyTable::from_counts(self.alphabet.clone(), counts).expect("sized to the alphabet")
    }
}

impl fmt::Display for Cryptogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn encrypt(seq: &LetterSequence, key: &SubstitutionKey) -> Result<Cryptogram> {
    Alphabet::ensure_same(seq.alphabet(), &key.alphabet)?;
    Ok(Cryptogram {
        alphabet: key.alphabet.clone(),
        glyphs: key.glyphs.clone(),
        symbols: seq
            .indices()
            .iter()
            .map(|&p| key.forward[usize::from(p)])
            .collect(),
        source: seq.source.clone(),
    })
}

pub fn decrypt(c: &Cryptogram, key: &SubstitutionKey) -> Result<LetterSequence> {
    Alphabet::ensure_same(&c.alphabet, &key.alphabet)?;
    if c.glyphs != key.glyphs {
        return Err(Error::InvalidKey(
            "key and cryptogram use different cipher symbol inventories".into(),
        ));
    }
    let inv = key.inverse();
    Ok(LetterSequence::from_indices_unchecked(
        c.alphabet.clone(),
        c.symbols.iter().map(|&s| inv[usize::from(s)]).collect(),
        c.source.clone(),
    ))
}

/// Pairs the i-th most frequent cipher symbol with the i-th most frequent
/// reference letter. `cipher_table` is indexed by cipher symbol (see
/// [`Cryptogram::symbol_table`]); ties in either ranking follow index order.
pub fn frequency_match_key(
    cipher_table: &FrequencyTable,
    reference: &FrequencyTable,
) -> Result<SubstitutionKey> {
    let n = cipher_table.counts().len();
    if n != reference.counts().len() {
        return Err(Error::SizeMismatch {
            left: n,
            right: reference.counts().len(),
        });
    }
    let cipher_ranks = rank_indices(cipher_table);
    let plain_ranks = rank_indices(reference);
    let mut forward = vec![0u8; n];
    for (&p, &c) in plain_ranks.iter().zip(&cipher_ranks) {
        forward[usize::from(p)] = c;
    }
    SubstitutionKey::from_permutation(reference.alphabet().clone(), forward)
}

/// Too short for frequency analysis to be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct LengthWarning {
    pub length: usize,
    pub threshold: usize,
}

/// Warns when the cryptogram is shorter than `threshold` symbols.
pub fn length_check(c: &Cryptogram, threshold: usize) -> Option<LengthWarning> {
    (c.len() < threshold).then_some(LengthWarning {
        length: c.len(),
        threshold,
    })
}
