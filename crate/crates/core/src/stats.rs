//! Distribution tails used by the tests in this crate.

use libm::erfc;
use statrs::distribution::{Binomial, ContinuousCDF, DiscreteCDF, Normal};

/// Standard normal quantile.
pub(crate) fn normal_quantile(p: f64) -> f64 {
    Normal::standard().inverse_cdf(p)
}

/// `P(|Z| >= |z|)` for a standard normal `Z`.
pub(crate) fn normal_two_sided_p(z: f64) -> f64 {
    erfc(z.abs() / std::f64::consts::SQRT_2).min(1.0)
}

/// Upper tail of the chi-square distribution with one degree of freedom.
///
/// With one degree of freedom the statistic is the square of a standard
/// normal, so `P(X >= x) = erfc(sqrt(x / 2))`.
pub(crate) fn chi_square_df1_sf(x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    erfc((x / 2.0).sqrt()).min(1.0)
}

/// `P(X <= k)` for `X ~ Binomial(n, p)`.
pub(crate) fn binomial_cdf(k: u64, n: u64, p: f64) -> f64 {
    if k >= n {
        return 1.0;
    }
    if p <= 0.0 {
        return 1.0;
    }
    if p >= 1.0 {
        return 0.0;
    }
    Binomial::new(p, n)
        .expect("p checked to lie in (0, 1)")
        .cdf(k)
        .clamp(0.0, 1.0)
}
