//! Word rank-frequency tables and log-log power-law fits.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::corpus::WordSequence;
use crate::error::{Error, Result};

/// Default smallest count a word needs to take part in a fit.
pub const DEFAULT_MIN_COUNT: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankEntry {
    pub rank: usize,
    pub word: String,
    pub count: u64,
}

/// Distinct words by decreasing count, ranked from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFrequency {
    entries: Vec<RankEntry>,
}

impl RankFrequency {
    /// Sorts `(word, count)` pairs by decreasing count, then by word.
    /// Zero counts are dropped.
    pub fn from_counts(counts: Vec<(String, u64)>) -> Result<Self> {
        let mut counts: Vec<_> = counts.into_iter().filter(|(_, c)| *c > 0).collect();
        if counts.is_empty() {
            return Err(Error::Empty("no words to rank"));
        }
        counts.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        Ok(Self::ranked(counts))
    }

    fn ranked(sorted: Vec<(String, u64)>) -> Self {
        Self {
            entries: sorted
                .into_iter()
                .enumerate()
                .map(|(i, (word, count))| RankEntry {
                    rank: i + 1,
                    word,
                    count,
                })
                .collect(),
        }
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.count).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("rank,word,count\n");
        for e in &self.entries {
            let _ = writeln!(out, "{},{},{}", e.rank, e.word, e.count);
        }
        out
    }
}

/// Counts each distinct word. Equal counts are ordered by the words' letter
/// indices, which is alphabetical order within the alphabet.
pub fn word_rank_frequency(words: &WordSequence) -> Result<RankFrequency> {
    if words.is_empty() {
        return Err(Error::Empty("no words to rank"));
    }
    let mut counts: HashMap<&[u8], u64> = HashMap::new();
    for w in words.word_indices() {
        *counts.entry(w).or_default() += 1;
    }
    let mut sorted: Vec<(&[u8], u64)> = counts.into_iter().collect();
    sorted.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let alphabet = words.alphabet();
    Ok(RankFrequency::ranked(
        sorted
            .into_iter()
            .map(|(w, c)| (w.iter().map(|&i| alphabet.letter(i)).collect(), c))
            .collect(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PowerLawFit {
    /// Negated slope of ln(count) against ln(rank).
    pub exponent: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub points_used: usize,
}

impl PowerLawFit {
    /// Least squares of `ln(count)` on `ln(rank)` over `(rank, count)` points.
    /// Points need positive coordinates.
    pub fn from_points(points: &[(f64, f64)]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints {
                min_count: 0,
                found: points.len(),
            });
        }
        if points.iter().any(|&(r, c)| !(r > 0.0 && c > 0.0)) {
            return Err(Error::InvalidArgument(
                "ranks and counts must be positive".into(),
            ));
        }
        let xy: Vec<(f64, f64)> = points.iter().map(|&(r, c)| (r.ln(), c.ln())).collect();
        let n = xy.len() as f64;
        let mx = xy.iter().map(|p| p.0).sum::<f64>() / n;
        let my = xy.iter().map(|p| p.1).sum::<f64>() / n;
        let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
        let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let syy: f64 = xy.iter().map(|p| (p.1 - my).powi(2)).sum();
        if sxx == 0.0 {
            return Err(Error::InvalidArgument("all points share one rank".into()));
        }
        let slope = sxy / sxx;
        let intercept = my - slope * mx;
        // a flat line is fitted perfectly
        let r_squared = if syy == 0.0 {
            1.0
        } else {
            let sse: f64 = xy
                .iter()
                .map(|p| (p.1 - intercept - slope * p.0).powi(2))
                .sum();
            (1.0 - sse / syy).clamp(0.0, 1.0)
        };
        Ok(Self {
            exponent: if slope == 0.0 { 0.0 } else { -slope },
            intercept,
            r_squared,
            points_used: xy.len(),
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "exponent": self.exponent,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "points_used": self.points_used,
        })
    }
}

/// Fits the entries with `count >= min_count`.
pub fn fit_power_law(rf: &RankFrequency, min_count: u64) -> Result<PowerLawFit> {
    let points: Vec<(f64, f64)> = rf
        .entries
        .iter()
        .filter(|e| e.count >= min_count)
        .map(|e| (e.rank as f64, e.count as f64))
        .collect();
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            min_count,
            found: points.len(),
        });
    }
    PowerLawFit::from_points(&points)
}
