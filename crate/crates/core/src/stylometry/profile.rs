use std::fmt;

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::corpus::LetterSequence;
use crate::error::{Error, Result};
use crate::freq::round6;
use crate::stats::normal_two_sided_p;

/// Default block length when one long text is cut into samples.
pub const DEFAULT_BLOCK: usize = 1000;

/// Vowel and consonant counts of a text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VCProfile {
    pub vowel_count: u64,
    pub consonant_count: u64,
}

impl VCProfile {
    pub fn new(vowel_count: u64, consonant_count: u64) -> Self {
        Self {
            vowel_count,
            consonant_count,
        }
    }

    pub fn total(&self) -> u64 {
        self.vowel_count + self.consonant_count
    }

    /// `V / (V + C)` as an exact fraction; `None` for an empty profile.
    pub fn vowel_ratio(&self) -> Option<Ratio<u64>> {
        (self.total() > 0).then(|| Ratio::new(self.vowel_count, self.total()))
    }

    pub fn vowel_share(&self) -> Option<f64> {
        (self.total() > 0).then(|| self.vowel_count as f64 / self.total() as f64)
    }

    pub fn consonant_share(&self) -> Option<f64> {
        (self.total() > 0).then(|| self.consonant_count as f64 / self.total() as f64)
    }

    /// `100 V / C`; `None` when there are no consonants.
    pub fn vowels_per_100(&self) -> Option<f64> {
        (self.consonant_count > 0)
            .then(|| 100.0 * self.vowel_count as f64 / self.consonant_count as f64)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vowels": self.vowel_count,
            "consonants": self.consonant_count,
            "vowel_share": self.vowel_share().map(round6),
            "vowels_per_100": self.vowels_per_100().map(round6),
        })
    }
}

pub fn vc_profile(seq: &LetterSequence) -> VCProfile {
    let alphabet = seq.alphabet();
    let vowels = seq
        .indices()
        .iter()
        .filter(|&&i| alphabet.is_vowel(i))
        .count() as u64;
    VCProfile::new(vowels, seq.len() as u64 - vowels)
}

/// Profiles of consecutive `block`-letter pieces. A shorter tail is dropped.
pub fn block_profiles(seq: &LetterSequence, block: usize) -> Result<Vec<VCProfile>> {
    if block == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    Ok((0..seq.len() / block)
        .map(|i| vc_profile(&seq.slice(i * block..(i + 1) * block)))
        .collect())
}

pub fn poetry_threshold() -> Ratio<u64> {
    Ratio::new(7, 16)
}

pub fn orator_threshold() -> Ratio<u64> {
    Ratio::new(3, 7)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlbertiLabel {
    PoetryConsistent,
    OratorConsistent,
    BelowBoth,
    /// The share equals one of the two thresholds exactly.
    Boundary,
}

impl AlbertiLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::PoetryConsistent => "poetry-consistent",
            Self::OratorConsistent => "orator-consistent",
            Self::BelowBoth => "below-both",
            Self::Boundary => "boundary",
        }
    }
}

impl fmt::Display for AlbertiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlbertiVerdict {
    pub vowel_share: Ratio<u64>,
    pub above_poetry_threshold: bool,
    pub above_orator_threshold: bool,
    pub label: AlbertiLabel,
}

impl AlbertiVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "vowel_share": round6(ratio_f64(self.vowel_share)),
            "vowel_share_exact": self.vowel_share.to_string(),
            "poetry_threshold": poetry_threshold().to_string(),
            "orator_threshold": orator_threshold().to_string(),
            "above_poetry_threshold": self.above_poetry_threshold,
            "above_orator_threshold": self.above_orator_threshold,
            "label": self.label,
        })
    }
}

fn ratio_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Places the vowel share against 7/16 and 3/7 with exact comparisons.
///
/// | share            | label               |
/// |------------------|---------------------|
/// | > 7/16           | `poetry-consistent` |
/// | = 7/16 or = 3/7  | `boundary`          |
/// | in (3/7, 7/16)   | `orator-consistent` |
/// | < 3/7            | `below-both`        |
pub fn alberti_test(p: &VCProfile) -> Result<AlbertiVerdict> {
    let share = p
        .vowel_ratio()
        .ok_or(Error::Empty("profile has no letters"))?;
    let (poetry, orator) = (poetry_threshold(), orator_threshold());
    let label = if share > poetry {
        AlbertiLabel::PoetryConsistent
    } else if share == poetry || share == orator {
        AlbertiLabel::Boundary
    } else if share > orator {
        AlbertiLabel::OratorConsistent
    } else {
        AlbertiLabel::BelowBoth
    };
    Ok(AlbertiVerdict {
        vowel_share: share,
        above_poetry_threshold: share > poetry,
        above_orator_threshold: share > orator,
        label,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ProportionTest {
    pub z: f64,
    pub p_value: f64,
}

/// Pooled two-proportion z-test on the vowel shares.
pub fn two_sample_proportion_test(a: &VCProfile, b: &VCProfile) -> Result<ProportionTest> {
    if a.total() == 0 || b.total() == 0 {
        return Err(Error::Empty("profile has no letters"));
    }
    let (n1, n2) = (a.total() as f64, b.total() as f64);
    let p1 = a.vowel_count as f64 / n1;
    let p2 = b.vowel_count as f64 / n2;
    let pooled = (a.vowel_count + b.vowel_count) as f64 / (n1 + n2);
    let se = (pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2)).sqrt();
    if se == 0.0 {
        return Ok(ProportionTest {
            z: 0.0,
            p_value: 1.0,
        });
    }
    let z = (p1 - p2) / se;
    Ok(ProportionTest {
        z,
        p_value: normal_two_sided_p(z),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct VariationSummary {
    pub minimum: f64,
    pub median: f64,
    pub maximum: f64,
    pub sample_count: usize,
}

/// Range and lower-middle median of vowels per 100 consonants.
pub fn compass_of_variation(profiles: &[VCProfile]) -> Result<VariationSummary> {
    if profiles.is_empty() {
        return Err(Error::Empty("no samples"));
    }
    let mut values = profiles
        .iter()
        .map(|p| {
            p.vowels_per_100()
                .ok_or_else(|| Error::InvalidArgument("sample has no consonants".into()))
        })
        .collect::<Result<Vec<f64>>>()?;
    values.sort_by(f64::total_cmp);
    Ok(VariationSummary {
        minimum: values[0],
        median: values[(values.len() - 1) / 2],
        maximum: values[values.len() - 1],
        sample_count: values.len(),
    })
}
