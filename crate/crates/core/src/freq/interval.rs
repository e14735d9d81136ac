use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats::normal_quantile;

/// A two-sided interval for a binomial proportion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConfidenceInterval {
    pub estimate: f64,
    pub lower: f64,
    pub upper: f64,
    pub level: f64,
}

impl ConfidenceInterval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, p: f64) -> bool {
        self.lower <= p && p <= self.upper
    }
}

/// Wilson score interval for `count` successes out of `total`.
///
/// With `z` the two-sided normal quantile for `level` and `p = count / total`:
///
/// ```text
/// center = (p + z^2 / 2n) / (1 + z^2 / n)
/// half   = z / (1 + z^2 / n) * sqrt(p (1 - p) / n + z^2 / 4n^2)
/// ```
///
/// Bounds are clamped so that `0 <= lower <= p <= upper <= 1` survives rounding.
pub fn proportion_ci(count: u64, total: u64, level: f64) -> Result<ConfidenceInterval> {
    if total == 0 {
        return Err(Error::Empty("proportion with total 0"));
    }
    if count > total {
        return Err(Error::InvalidArgument(format!(
            "count {count} exceeds total {total}"
        )));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "level {level} outside (0, 1)"
        )));
    }
    let n = total as f64;
    let p = count as f64 / n;
    let z = normal_quantile(1.0 - (1.0 - level) / 2.0);
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    Ok(ConfidenceInterval {
        estimate: p,
        lower: (center - half).clamp(0.0, p),
        upper: (center + half).clamp(p, 1.0),
        level,
    })
}
