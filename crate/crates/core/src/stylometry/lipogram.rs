use serde_json::{json, Value};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::freq::{round6, FrequencyTable};
use crate::stats::binomial_cdf;

/// A letter that occurs significantly less often than the reference predicts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LipogramFlag {
    pub letter: char,
    pub observed: u64,
    pub expected: f64,
    pub p_value: f64,
}

impl LipogramFlag {
    pub fn to_json(&self) -> Value {
        json!({
            "letter": self.letter.to_string(),
            "observed": self.observed,
            "expected": round6(self.expected),
            "p_value": self.p_value,
        })
    }
}

/// Flags letters whose observed count falls in the lower binomial tail.
///
/// Each letter is tested against `Binomial(observed total, reference share)`
/// and flagged when `P(X <= observed) < alpha / |A|`. Letters absent from the
/// reference are never flagged. Flags come back in alphabet order.
pub fn lipogram_scan(
    observed: &FrequencyTable,
    reference: &FrequencyTable,
    alpha: f64,
) -> Result<Vec<LipogramFlag>> {
    Alphabet::ensure_same(observed.alphabet(), reference.alphabet())?;
    if reference.total() == 0 {
        return Err(Error::Empty("reference table has no letters"));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )));
    }
    let n = observed.total();
    let cutoff = alpha / observed.alphabet().len() as f64;
    let mut flags = Vec::new();
    for (i, (&obs, q)) in observed
        .counts()
        .iter()
        .zip(reference.proportions())
        .enumerate()
    {
        if q == 0.0 {
            continue;
        }
        let p_value = binomial_cdf(obs, n, q);
        if p_value < cutoff {
            flags.push(LipogramFlag {
                letter: observed.alphabet().letter(i as u8),
                observed: obs,
                expected: q * n as f64,
                p_value,
            });
        }
    }
    Ok(flags)
}
