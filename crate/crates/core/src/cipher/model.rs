use std::fmt::Write as _;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::corpus::LetterSequence;
use crate::error::{Error, Result};
use crate::freq::{count_digrams, count_letters, DigramTable, FrequencyTable};

/// Jeffreys pseudo-count.
pub const DEFAULT_SMOOTHING: f64 = 0.5;

/// Unigram and digram tables of a reference language plus a smoothing pseudo-count.
#[derive(Debug, Clone, PartialEq)]
pub struct LanguageModel {
    unigram: FrequencyTable,
    digram: DigramTable,
    smoothing: f64,
}

impl LanguageModel {
    pub fn new(unigram: FrequencyTable, digram: DigramTable, smoothing: f64) -> Result<Self> {
        Alphabet::ensure_same(unigram.alphabet(), digram.alphabet())?;
        if !(smoothing > 0.0 && smoothing.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "smoothing must be positive, got {smoothing}"
            )));
        }
        Ok(Self {
            unigram,
            digram,
            smoothing,
        })
    }

    pub fn train(seq: &LetterSequence, smoothing: f64) -> Result<Self> {
        Self::new(count_letters(seq), count_digrams(seq), smoothing)
    }

    /// No counts at all: every transition has probability `1 / |A|`.
    pub fn uniform(alphabet: Arc<Alphabet>, smoothing: f64) -> Result<Self> {
        Self::new(
            FrequencyTable::empty(alphabet.clone()),
            DigramTable::empty(alphabet),
            smoothing,
        )
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.unigram.alphabet()
    }

    pub fn unigram(&self) -> &FrequencyTable {
        &self.unigram
    }

    pub fn digram(&self) -> &DigramTable {
        &self.digram
    }

    pub fn smoothing(&self) -> f64 {
        self.smoothing
    }

    /// Row-major `ln P(second | first)` with add-λ smoothing over the digram rows:
    /// `(count(first, second) + λ) / (row(first) + λ |A|)`.
    pub fn log_transition_matrix(&self) -> Vec<f64> {
        let n = self.alphabet().len();
        let lambda = self.smoothing;
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n as u8 {
            let denom = (self.digram.row_total(a) as f64 + lambda * n as f64).ln();
            out.extend(
                self.digram
                    .row(a)
                    .iter()
                    .map(|&c| (c as f64 + lambda).ln() - denom),
            );
        }
        out
    }

    /// Unigram table as `letter,count` CSV.
    pub fn unigram_csv(&self) -> String {
        let mut out = String::from("letter,count\n");
        for (l, c) in self.alphabet().letters().iter().zip(self.unigram.counts()) {
            let _ = writeln!(out, "{l},{c}");
        }
        out
    }

    /// Digram table as `first,second,count` CSV.
    pub fn digram_csv(&self) -> String {
        self.digram.to_csv()
    }

    /// Reads the two CSV tables. Letters must belong to `alphabet`; repeated
    /// rows accumulate.
    pub fn from_csv(
        alphabet: Arc<Alphabet>,
        unigram_csv: &str,
        digram_csv: &str,
        smoothing: f64,
    ) -> Result<Self> {
        let mut unigram = vec![0u64; alphabet.len()];
        for (line, rec) in read_records(unigram_csv, &["letter", "count"])? {
            let l = letter_field(&alphabet, &rec[0], line)?;
            unigram[usize::from(l)] += count_field(&rec[1], line)?;
        }
        let mut digram = DigramTable::empty(alphabet.clone());
        for (line, rec) in read_records(digram_csv, &["first", "second", "count"])? {
            let a = letter_field(&alphabet, &rec[0], line)?;
            let b = letter_field(&alphabet, &rec[1], line)?;
            digram.add(a, b, count_field(&rec[2], line)?);
        }
        Self::new(
            FrequencyTable::from_counts(alphabet, unigram)?,
            digram,
            smoothing,
        )
    }
}

fn read_records(text: &str, header: &[&str]) -> Result<Vec<(u64, Vec<String>)>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let got = reader
        .headers()
        .map_err(|e| Error::ModelFormat(e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect::<Vec<_>>();
    if got.len() < header.len() || got[..header.len()] != *header {
        return Err(Error::ModelFormat(format!(
            "expected header `{}`, got `{}`",
            header.join(","),
            got.join(",")
        )));
    }
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::ModelFormat(e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() < header.len() {
            return Err(Error::ModelFormat(format!(
                "line {line}: expected {} fields",
                header.len()
            )));
        }
        out.push((line, rec.iter().map(str::to_string).collect()));
    }
    Ok(out)
}

fn letter_field(alphabet: &Alphabet, field: &str, line: u64) -> Result<u8> {
    let mut chars = field.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => alphabet.index_of(c).ok_or_else(|| {
            Error::ModelFormat(format!(
                "line {line}: {c:?} is not a letter of `{}`",
                alphabet.name()
            ))
        }),
        _ => Err(Error::ModelFormat(format!(
            "line {line}: expected one letter, got {field:?}"
        ))),
    }
}

fn count_field(field: &str, line: u64) -> Result<u64> {
    field
        .parse()
        .map_err(|_| Error::ModelFormat(format!("line {line}: bad count {field:?}")))
}

/// Log-likelihood of the sequence's adjacent pairs under the model's smoothed
/// digram transitions. A single letter scores 0.
pub fn score(seq: &LetterSequence, model: &LanguageModel) -> Result<f64> {
    if seq.is_empty() {
        return Err(Error::Empty("cannot score an empty sequence"));
    }
    Alphabet::ensure_same(seq.alphabet(), model.alphabet())?;
    let n = model.alphabet().len();
    let logp = model.log_transition_matrix();
    Ok(seq
        .indices()
        .windows(2)
        .map(|w| logp[usize::from(w[0]) * n + usize::from(w[1])])
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::normalize;

    fn en() -> Arc<Alphabet> {
        Arc::new(Alphabet::builtin("en").unwrap())
    }

    #[test]
    fn uniform_model_closed_form() {
        let m = LanguageModel::uniform(en(), DEFAULT_SMOOTHING).unwrap();
        let s = normalize("thequickbrownfox", &en());
        let expected = (s.len() - 1) as f64 * (1.0f64 / 26.0).ln();
        assert!((score(&s, &m).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn trained_model_beats_uniform_on_its_own_text() {
        let text = "ab".repeat(50);
        let s = normalize(&text, &en());
        let trained = LanguageModel::train(&s, DEFAULT_SMOOTHING).unwrap();
        let uniform = LanguageModel::uniform(en(), DEFAULT_SMOOTHING).unwrap();
        assert!(score(&s, &trained).unwrap() > score(&s, &uniform).unwrap());
    }

    #[test]
    fn empty_sequence_is_an_error() {
        let m = LanguageModel::uniform(en(), 1.0).unwrap();
        assert!(matches!(
            score(&normalize("", &en()), &m),
            Err(Error::Empty(_))
        ));
        assert_eq!(score(&normalize("a", &en()), &m).unwrap(), 0.0);
    }

    #[test]
    fn smoothing_must_be_positive() {
        assert!(LanguageModel::uniform(en(), 0.0).is_err());
        assert!(LanguageModel::uniform(en(), -1.0).is_err());
        assert!(LanguageModel::uniform(en(), f64::NAN).is_err());
    }

    #[test]
    fn transition_rows_are_distributions() {
        let m = LanguageModel::train(&normalize("the cat sat on the mat", &en()), 0.5).unwrap();
        let lp = m.log_transition_matrix();
        for row in lp.chunks(26) {
            let s: f64 = row.iter().map(|x| x.exp()).sum();
            assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let m = LanguageModel::train(&normalize("the cat sat on the mat", &en()), 0.5).unwrap();
        let back = LanguageModel::from_csv(en(), &m.unigram_csv(), &m.digram_csv(), 0.5).unwrap();
        assert_eq!(back, m);
        assert!(matches!(
            LanguageModel::from_csv(en(), "l,c\n", "first,second,count\n", 0.5),
            Err(Error::ModelFormat(_))
        ));
        assert!(
            LanguageModel::from_csv(en(), "letter,count\n1,4\n", "first,second,count\n", 0.5)
                .is_err()
        );
        assert!(
            LanguageModel::from_csv(en(), "letter,count\na,x\n", "first,second,count\n", 0.5)
                .is_err()
        );
    }
}
