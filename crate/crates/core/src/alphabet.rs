//! Alphabets: ordered letter inventories with a vowel subset and fold rules.
//!
//! A spec document is line oriented:
//!
//! ```text
//! # comment
//! name: la
//! letters: abcdefghiklmnopqrstuxyz
//! vowels: aeiouy
//! fold: j > i
//! fold: ' > -
//! ```
//!
//! Whitespace inside `letters` and `vowels` is ignored. A fold target of `-`
//! discards the source character. Letters are stored lowercased because
//! input text is lowercased before lookup.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Where a folded character goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldTarget {
    Letter(char),
    Discard,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    name: String,
    letters: Vec<char>,
    vowel_mask: Vec<bool>,
    folds: BTreeMap<char, FoldTarget>,
}

/// Names accepted by [`Alphabet::builtin`].
pub const BUILTIN_NAMES: &[&str] = &["en", "en-y-vowel", "la", "fr", "it"];

const LATIN_SPEC: &str = "\
name: la
letters: abcdefghiklmnopqrstuxyz
vowels: aeiouy
fold: j > i
fold: v > u
fold: w > u
fold: ā > a
fold: ē > e
fold: ī > i
fold: ō > o
fold: ū > u
fold: ȳ > y
";

const FRENCH_SPEC: &str = "\
name: fr
letters: abcdefghijklmnopqrstuvwxyz
vowels: aeiouy
fold: à > a
fold: â > a
fold: ä > a
fold: æ > a
fold: ç > c
fold: é > e
fold: è > e
fold: ê > e
fold: ë > e
fold: î > i
fold: ï > i
fold: ô > o
fold: ö > o
fold: œ > o
fold: ù > u
fold: û > u
fold: ü > u
fold: ÿ > y
";

const ITALIAN_SPEC: &str = "\
name: it
letters: abcdefghijklmnopqrstuvwxyz
vowels: aeiou
fold: à > a
fold: è > e
fold: é > e
fold: ì > i
fold: í > i
fold: î > i
fold: ò > o
fold: ó > o
fold: ù > u
fold: ú > u
";

impl Alphabet {
    /// Builds an alphabet and checks every invariant.
    pub fn new(
        name: impl Into<String>,
        letters: &[char],
        vowels: &[char],
        folds: impl IntoIterator<Item = (char, FoldTarget)>,
    ) -> Result<Self> {
        let letters: Vec<char> = letters.iter().map(|&c| lower(c)).collect();
        let mut vowel_mask = vec![false; letters.len()];
        for &v in vowels {
            let v = lower(v);
            match letters.iter().position(|&l| l == v) {
                Some(i) => vowel_mask[i] = true,
                None => {
                    return Err(Error::InvalidAlphabet(format!(
                        "vowel {v:?} is not one of the letters"
                    )))
                }
            }
        }
        let folds = folds
            .into_iter()
            .map(|(src, dst)| {
                let dst = match dst {
                    FoldTarget::Letter(c) => FoldTarget::Letter(lower(c)),
                    FoldTarget::Discard => FoldTarget::Discard,
                };
                (lower(src), dst)
            })
            .collect();
        let alphabet = Self {
            name: name.into(),
            letters,
            vowel_mask,
            folds,
        };
        alphabet.check_invariants()?;
        Ok(alphabet)
    }

    /// Resolves one of the [`BUILTIN_NAMES`].
    pub fn builtin(name: &str) -> Result<Self> {
        let english = || -> Vec<char> { ('a'..='z').collect() };
        match name {
            "en" => Self::new("en", &english(), &['a', 'e', 'i', 'o', 'u'], []),
            "en-y-vowel" => Self::new(
                "en-y-vowel",
                &english(),
                &['a', 'e', 'i', 'o', 'u', 'y'],
                [],
            ),
            "la" => Self::from_spec(LATIN_SPEC),
            "fr" => Self::from_spec(FRENCH_SPEC),
            "it" => Self::from_spec(ITALIAN_SPEC),
            other => Err(Error::UnknownAlphabet(other.to_string())),
        }
    }

    /// Parses an alphabet spec document.
    pub fn from_spec(text: &str) -> Result<Self> {
        let mut name: Option<String> = None;
        let mut letters: Option<(usize, Vec<char>)> = None;
        let mut vowels: Option<(usize, Vec<char>)> = None;
        let mut folds: BTreeMap<char, FoldTarget> = BTreeMap::new();
        let mut last_line = 0;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::AlphabetSpec {
                line: line_no,
                message,
            };
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| err(format!("expected `key: value`, got {line:?}")))?;
            let value = value.trim();
            match key.trim() {
                "name" => {
                    if name.is_some() {
                        return Err(err("duplicate `name`".into()));
                    }
                    if value.is_empty() || value.chars().any(char::is_whitespace) {
                        return Err(err(format!("invalid identifier {value:?}")));
                    }
                    name = Some(value.to_string());
                }
                "letters" => {
                    if letters.is_some() {
                        return Err(err("duplicate `letters`".into()));
                    }
                    let symbols = symbols_of(value);
                    let mut seen = Vec::with_capacity(symbols.len());
                    for &c in &symbols {
                        if seen.contains(&c) {
                            return Err(err(format!("duplicate letter {c:?}")));
                        }
                        seen.push(c);
                    }
                    letters = Some((line_no, symbols));
                }
                "vowels" => {
                    if vowels.is_some() {
                        return Err(err("duplicate `vowels`".into()));
                    }
                    vowels = Some((line_no, symbols_of(value)));
                }
                "fold" => {
                    let mut chars = value.chars();
                    let src = chars.next().ok_or_else(|| err("empty fold rule".into()))?;
                    let rest = chars.as_str().trim_start();
                    let rest = rest
                        .strip_prefix('>')
                        .ok_or_else(|| {
                            err(format!("expected `<char> > <letter|->`, got {value:?}"))
                        })?
                        .trim();
                    let mut target = rest.chars();
                    let dst = match (target.next(), target.next()) {
                        (Some('-'), None) => FoldTarget::Discard,
                        (Some(c), None) => FoldTarget::Letter(lower(c)),
                        _ => {
                            return Err(err(format!(
                                "fold target must be one character, got {rest:?}"
                            )))
                        }
                    };
                    if folds.insert(lower(src), dst).is_some() {
                        return Err(err(format!("duplicate fold for {src:?}")));
                    }
                }
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }

        let missing = |what: &str| Error::AlphabetSpec {
            line: last_line,
            message: format!("missing `{what}` line"),
        };
        let name = name.ok_or_else(|| missing("name"))?;
        let (letters_line, letters) = letters.ok_or_else(|| missing("letters"))?;
        let (vowels_line, vowels) = vowels.ok_or_else(|| missing("vowels"))?;
        let lowered: Vec<char> = letters.iter().map(|&c| lower(c)).collect();
        for (i, c) in lowered.iter().enumerate() {
            if lowered[..i].contains(c) {
                return Err(Error::AlphabetSpec {
                    line: letters_line,
                    message: format!("letters {c:?} collide after lowercasing"),
                });
            }
        }
        for &v in &vowels {
            if !lowered.contains(&lower(v)) {
                return Err(Error::AlphabetSpec {
                    line: vowels_line,
                    message: format!("vowel {v:?} is not one of the letters"),
                });
            }
        }
        Self::new(name, &letters, &vowels, folds).map_err(|e| Error::AlphabetSpec {
            line: last_line,
            message: e.to_string(),
        })
    }

    /// Renders the alphabet back into spec-document form.
    pub fn to_spec(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "name: {}", self.name);
        let _ = writeln!(out, "letters: {}", self.letters.iter().collect::<String>());
        let _ = writeln!(out, "vowels: {}", self.vowels().collect::<String>());
        for (src, dst) in &self.folds {
            match dst {
                FoldTarget::Letter(c) => {
                    let _ = writeln!(out, "fold: {src} > {c}");
                }
                FoldTarget::Discard => {
                    let _ = writeln!(out, "fold: {src} > -");
                }
            }
        }
        out
    }

    pub fn check_invariants(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidAlphabet(m));
        if self.letters.is_empty() {
            return bad("no letters".into());
        }
        if self.letters.len() > usize::from(u8::MAX) + 1 {
            return bad(format!(
                "{} letters exceeds the limit of 256",
                self.letters.len()
            ));
        }
        for (i, c) in self.letters.iter().enumerate() {
            if self.letters[..i].contains(c) {
                return bad(format!("duplicate letter {c:?}"));
            }
            if c.is_whitespace() {
                return bad("whitespace cannot be a letter".into());
            }
        }
        let vowel_count = self.vowel_mask.iter().filter(|&&v| v).count();
        if vowel_count == 0 {
            return bad("vowel set is empty".into());
        }
        if vowel_count == self.letters.len() {
            return bad("vowels must be a strict subset of the letters".into());
        }
        for (src, dst) in &self.folds {
            if self.letters.contains(src) {
                return bad(format!("fold source {src:?} is itself a letter"));
            }
            if let FoldTarget::Letter(t) = dst {
                if !self.letters.contains(t) {
                    return bad(format!("fold target {t:?} is not a letter"));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, index: u8) -> char {
        self.letters[usize::from(index)]
    }

    pub fn index_of(&self, letter: char) -> Option<u8> {
        self.letters
            .iter()
            .position(|&l| l == letter)
            .map(|i| i as u8)
    }

    pub fn is_vowel(&self, index: u8) -> bool {
        self.vowel_mask[usize::from(index)]
    }

    pub fn vowels(&self) -> impl Iterator<Item = char> + '_ {
        self.letters
            .iter()
            .zip(&self.vowel_mask)
            .filter(|(_, &v)| v)
            .map(|(&c, _)| c)
    }

    pub fn folds(&self) -> &BTreeMap<char, FoldTarget> {
        &self.folds
    }

    /// Maps an already-lowercased character to a letter index, applying folds.
    pub(crate) fn classify_lowered(&self, c: char) -> Option<u8> {
        if let Some(i) = self.index_of(c) {
            return Some(i);
        }
        match self.folds.get(&c) {
            Some(FoldTarget::Letter(t)) => self.index_of(*t),
            _ => None,
        }
    }

    /// Same alphabet? Compares by pointer first, then structurally.
    pub fn same_as(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    pub(crate) fn ensure_same(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> Result<()> {
        if Self::same_as(a, b) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: a.name.clone(),
                right: b.name.clone(),
            })
        }
    }
}

/// Loads an alphabet from a builtin name or a spec document.
///
/// Anything containing a newline or a `:` is treated as a document.
pub fn load_alphabet(name_or_spec: &str) -> Result<Arc<Alphabet>> {
    if name_or_spec.contains('\n') || name_or_spec.contains(':') {
        Alphabet::from_spec(name_or_spec).map(Arc::new)
    } else {
        Alphabet::builtin(name_or_spec.trim()).map(Arc::new)
    }
}

fn symbols_of(value: &str) -> Vec<char> {
    value.chars().filter(|c| !c.is_whitespace()).collect()
}

fn lower(c: char) -> char {
    let mut it = c.to_lowercase();
    match (it.next(), it.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn english_builtin() {
        let en = Alphabet::builtin("en").unwrap();
        assert_eq!(en.len(), 26);
        assert_eq!(
            en.letters().iter().collect::<String>(),
            "abcdefghijklmnopqrstuvwxyz"
        );
        assert_eq!(en.vowels().collect::<String>(), "aeiou");
        assert!(!en.is_vowel(en.index_of('y').unwrap()));
        let ey = Alphabet::builtin("en-y-vowel").unwrap();
        assert!(ey.is_vowel(ey.index_of('y').unwrap()));
    }

    #[test]
    fn latin_builtin_has_23_letters() {
        let la = Alphabet::builtin("la").unwrap();
        assert_eq!(la.len(), 23);
        for c in ['j', 'v', 'w'] {
            assert_eq!(la.index_of(c), None);
        }
        assert_eq!(la.folds().get(&'j'), Some(&FoldTarget::Letter('i')));
        assert_eq!(la.folds().get(&'v'), Some(&FoldTarget::Letter('u')));
    }

    #[test]
    fn all_builtins_pass_invariants() {
        for name in BUILTIN_NAMES {
            let a = Alphabet::builtin(name).unwrap();
            a.check_invariants().unwrap();
            assert_eq!(a.name(), *name);
        }
        assert_eq!(
            Alphabet::builtin("xx"),
            Err(Error::UnknownAlphabet("xx".into()))
        );
    }

    #[test]
    fn vowels_must_be_strict_subset() {
        let err = Alphabet::from_spec("name: t\nletters: ab\nvowels: ab\n").unwrap_err();
        assert!(matches!(err, Error::AlphabetSpec { .. }), "{err}");
        assert!(err.to_string().contains("strict subset"));
    }

    #[test]
    fn duplicate_letter_reports_line() {
        let err = Alphabet::from_spec("# c\nname: t\nletters: abca\nvowels: a\n").unwrap_err();
        assert_eq!(
            err,
            Error::AlphabetSpec {
                line: 3,
                message: "duplicate letter 'a'".into()
            }
        );
    }

    #[test]
    fn vowel_not_in_letters_reports_line() {
        let err = Alphabet::from_spec("name: t\nletters: abc\nvowels: az\n").unwrap_err();
        match err {
            Error::AlphabetSpec { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("'z'"));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            Alphabet::from_spec("name t\n"),
            Err(Error::AlphabetSpec { line: 1, .. })
        ));
        assert!(matches!(
            Alphabet::from_spec("name: t\nletters: ab\nvowels: a\ncolour: red\n"),
            Err(Error::AlphabetSpec { line: 4, .. })
        ));
        assert!(matches!(
            Alphabet::from_spec("name: t\nletters: ab\nvowels: a\nfold: x y\n"),
            Err(Error::AlphabetSpec { line: 4, .. })
        ));
        assert!(matches!(
            Alphabet::from_spec("name: t\nletters: ab\n"),
            Err(Error::AlphabetSpec { .. })
        ));
        // fold onto something that is not a letter
        assert!(Alphabet::from_spec("name: t\nletters: ab\nvowels: a\nfold: x > z\n").is_err());
    }

    #[test]
    fn fold_rules_parse_discard_and_angle_source() {
        let a =
            Alphabet::from_spec("name: t\nletters: a b c\nvowels: a\nfold: > > -\nfold: Á > a\n")
                .unwrap();
        assert_eq!(a.folds().get(&'>'), Some(&FoldTarget::Discard));
        assert_eq!(a.folds().get(&'á'), Some(&FoldTarget::Letter('a')));
    }

    #[test]
    fn spec_round_trip() {
        for name in BUILTIN_NAMES {
            let a = Alphabet::builtin(name).unwrap();
            assert_eq!(Alphabet::from_spec(&a.to_spec()).unwrap(), a);
        }
    }

    #[test]
    fn load_alphabet_dispatch() {
        assert_eq!(load_alphabet("en").unwrap().len(), 26);
        assert_eq!(
            load_alphabet("name: q\nletters: xyz\nvowels: y")
                .unwrap()
                .name(),
            "q"
        );
    }
}
