use super::compare::{compare_tables, TableDistance};
use super::table::{count_letters, FrequencyTable};
use crate::corpus::LetterSequence;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// One point of a stability curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityPoint {
    pub size: usize,
    pub distance: TableDistance,
}

/// Distance from the table of each prefix of `seq` to the whole-corpus table.
pub fn stability_curve(seq: &LetterSequence, sizes: &[usize]) -> Result<Vec<StabilityPoint>> {
    check_sizes(seq, sizes)?;
    let full = count_letters(seq);
    sizes
        .iter()
        .map(|&size| {
            let prefix = count_letters(&seq.slice(0..size));
            Ok(StabilityPoint {
                size,
                distance: compare_tables(&prefix, &full)?,
            })
        })
        .collect()
}

/// Like [`stability_curve`], but each size draws letters without
/// replacement at seeded random positions instead of taking a prefix.
pub fn stability_curve_random(
    seq: &LetterSequence,
    sizes: &[usize],
    seed: u64,
) -> Result<Vec<StabilityPoint>> {
    check_sizes(seq, sizes)?;
    let full = count_letters(seq);
    let mut rng = SplitMix64::new(seed);
    let mut positions: Vec<usize> = (0..seq.len()).collect();
    let symbols = seq.indices();
    sizes
        .iter()
        .map(|&size| {
            // partial Fisher-Yates: the first `size` slots become the sample
            for i in 0..size {
                let j = i + rng.below((positions.len() - i) as u64) as usize;
                positions.swap(i, j);
            }
            let mut counts = vec![0u64; seq.alphabet().len()];
            for &p in &positions[..size] {
                counts[usize::from(symbols[p])] += 1;
            }
            let sample = FrequencyTable::from_counts(seq.alphabet().clone(), counts)?;
            Ok(StabilityPoint {
                size,
                distance: compare_tables(&sample, &full)?,
            })
        })
        .collect()
}

fn check_sizes(seq: &LetterSequence, sizes: &[usize]) -> Result<()> {
    for &size in sizes {
        if size == 0 {
            return Err(Error::InvalidArgument(
                "sample size must be positive".into(),
            ));
        }
        if size > seq.len() {
            return Err(Error::SizeExceedsCorpus {
                size,
                length: seq.len(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::corpus::normalize;
    use std::sync::Arc;

    fn seq(text: &str) -> LetterSequence {
        normalize(text, &Arc::new(Alphabet::builtin("en").unwrap()))
    }

    #[test]
    fn full_length_has_zero_distance() {
        let s = seq("the quick brown fox jumps over the lazy dog");
        let c = stability_curve(&s, &[s.len()]).unwrap();
        assert_eq!(c[0].distance.total_variation, 0.0);
    }

    #[test]
    fn size_one_formula() {
        let s = seq("the quick brown fox jumps over the lazy dog");
        let full = count_letters(&s);
        let first = s.indices()[0];
        let q = full.count_at(first) as f64 / full.total() as f64;
        let c = stability_curve(&s, &[1]).unwrap();
        assert!((c[0].distance.total_variation - (1.0 - q)).abs() < 1e-12);
    }

    #[test]
    fn one_entry_per_size() {
        let s = seq("abcabcabcabc");
        let c = stability_curve(&s, &[3, 1, 12, 6]).unwrap();
        assert_eq!(
            c.iter().map(|p| p.size).collect::<Vec<_>>(),
            vec![3, 1, 12, 6]
        );
    }

    #[test]
    fn oversize_and_zero_rejected() {
        let s = seq("abc");
        assert_eq!(
            stability_curve(&s, &[4]),
            Err(Error::SizeExceedsCorpus { size: 4, length: 3 })
        );
        assert!(stability_curve(&s, &[0]).is_err());
    }

    #[test]
    fn random_variant_reproducible_and_exact_at_full_size() {
        let s = seq("the quick brown fox jumps over the lazy dog again and again");
        let a = stability_curve_random(&s, &[5, 20, s.len()], 11).unwrap();
        let b = stability_curve_random(&s, &[5, 20, s.len()], 11).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[2].distance.total_variation, 0.0);
    }
}
