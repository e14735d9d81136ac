use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::freq::{DigramTable, FrequencyTable};

/// Bits per letter under models of increasing order.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EntropyReport {
    /// `log2 |A|`
    pub h0: f64,
    /// Unigram entropy.
    pub h1: f64,
    /// Conditional entropy of a letter given the one before it.
    pub h2: f64,
}

fn plogp(count: u64, total: f64) -> f64 {
    if count == 0 {
        return 0.0;
    }
    let p = count as f64 / total;
    -p * p.log2()
}

/// Entropy estimates from a unigram and a digram table.
///
/// `h1` is clamped to `h0` and `h2` to `h1`. The clamps only bite when the
/// two tables disagree, e.g. the digram table of a short text that lacks
/// its last letter's successor, or through rounding.
pub fn entropy_estimates(unigram: &FrequencyTable, digram: &DigramTable) -> Result<EntropyReport> {
    Alphabet::ensure_same(unigram.alphabet(), digram.alphabet())?;
    if unigram.total() == 0 {
        return Err(Error::Empty("unigram table has no letters"));
    }
    if digram.total() == 0 {
        return Err(Error::Empty("digram table has no pairs"));
    }
    let n = unigram.alphabet().len();
    let h0 = (n as f64).log2();
    let total = unigram.total() as f64;
    let h1 = unigram
        .counts()
        .iter()
        .map(|&c| plogp(c, total))
        .sum::<f64>()
        .min(h0);

    let pairs = digram.total() as f64;
    let mut h2 = 0.0;
    for a in 0..n as u8 {
        let row = digram.row_total(a);
        if row == 0 {
            continue;
        }
        let weight = row as f64 / pairs;
        let row_h: f64 = digram.row(a).iter().map(|&c| plogp(c, row as f64)).sum();
        h2 += weight * row_h;
    }
    Ok(EntropyReport {
        h0,
        h1,
        h2: h2.max(0.0).min(h1),
    })
}
