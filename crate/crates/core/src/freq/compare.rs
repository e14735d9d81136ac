use serde::Serialize;

use super::table::FrequencyTable;
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// How far apart two frequency tables are.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableDistance {
    /// Half the L1 distance between the two proportion vectors, in `[0, 1]`.
    pub total_variation: f64,
    /// Two-sample homogeneity statistic with pooled expected counts.
    pub chi_square: f64,
    /// Spearman correlation of the two rank vectors, ties averaged.
    pub rank_correlation: f64,
}

pub fn compare_tables(a: &FrequencyTable, b: &FrequencyTable) -> Result<TableDistance> {
    Alphabet::ensure_same(a.alphabet(), b.alphabet())?;
    if a.total() == 0 || b.total() == 0 {
        return Err(Error::Empty("frequency table with total 0"));
    }
    let pa = a.proportions();
    let pb = b.proportions();
    let tv = 0.5 * pa.iter().zip(&pb).map(|(x, y)| (x - y).abs()).sum::<f64>();

    Ok(TableDistance {
        total_variation: tv.clamp(0.0, 1.0),
        chi_square: homogeneity_chi_square(a.counts(), b.counts()),
        rank_correlation: spearman(a.counts(), b.counts()),
    })
}

/// Sum over categories of `(O - E)^2 / E` for both rows of the 2 x k table,
/// with `E` from pooled column totals. Empty categories are skipped.
fn homogeneity_chi_square(a: &[u64], b: &[u64]) -> f64 {
    let na: u64 = a.iter().sum();
    let nb: u64 = b.iter().sum();
    let n = (na + nb) as f64;
    let mut stat = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        let pooled = x + y;
        if pooled == 0 {
            continue;
        }
        let ea = na as f64 * pooled as f64 / n;
        let eb = nb as f64 * pooled as f64 / n;
        stat += (x as f64 - ea).powi(2) / ea + (y as f64 - eb).powi(2) / eb;
    }
    stat
}

/// Ranks (1-based, ascending by value) with ties given their average rank.
pub(crate) fn average_ranks(values: &[u64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| values[i]);
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start..end share ranks start+1 ..= end
        let avg = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = avg;
        }
        start = end;
    }
    ranks
}

/// Pearson correlation of average ranks. When a rank vector is constant the
/// correlation is undefined; it is reported as 1 if both vectors are equal and 0 otherwise.
fn spearman(a: &[u64], b: &[u64]) -> f64 {
    let ra = average_ranks(a);
    let rb = average_ranks(b);
    let n = ra.len() as f64;
    let ma = ra.iter().sum::<f64>() / n;
    let mb = rb.iter().sum::<f64>() / n;
    let mut sab = 0.0;
    let mut saa = 0.0;
    let mut sbb = 0.0;
    for (x, y) in ra.iter().zip(&rb) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma).powi(2);
        sbb += (y - mb).powi(2);
    }
    if saa == 0.0 || sbb == 0.0 {
        return if ra == rb { 1.0 } else { 0.0 };
    }
    (sab / (saa * sbb).sqrt()).clamp(-1.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn alpha_xy() -> Arc<Alphabet> {
        Arc::new(Alphabet::from_spec("name: xy\nletters: xyz\nvowels: x\n").unwrap())
    }

    #[test]
    fn identical_tables() {
        let en = Arc::new(Alphabet::builtin("en").unwrap());
        let t = FrequencyTable::from_pairs(en, &[('e', 12), ('t', 9), ('a', 8), ('q', 1)]).unwrap();
        let d = compare_tables(&t, &t).unwrap();
        assert_eq!(d.total_variation, 0.0);
        assert_eq!(d.chi_square, 0.0);
        assert!((d.rank_correlation - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hand_computed_total_variation() {
        let a = FrequencyTable::from_pairs(alpha_xy(), &[('x', 1), ('y', 1)]).unwrap();
        let b = FrequencyTable::from_pairs(alpha_xy(), &[('x', 2)]).unwrap();
        let d = compare_tables(&a, &b).unwrap();
        assert!((d.total_variation - 0.5).abs() < 1e-15);
        // pooled x:3 y:1, each row n=2: E_x = 1.5, E_y = 0.5
        // (1-1.5)^2/1.5 + (2-1.5)^2/1.5 + (1-0.5)^2/0.5 + (0-0.5)^2/0.5
        let expected = 0.25 / 1.5 * 2.0 + 0.25 / 0.5 * 2.0;
        assert!((d.chi_square - expected).abs() < 1e-12);
    }

    #[test]
    fn empty_table_is_an_error() {
        let a = FrequencyTable::from_pairs(alpha_xy(), &[('x', 1)]).unwrap();
        let z = FrequencyTable::empty(alpha_xy());
        assert!(matches!(compare_tables(&a, &z), Err(Error::Empty(_))));
    }

    #[test]
    fn average_ranks_with_ties() {
        assert_eq!(average_ranks(&[5, 1, 5, 3]), vec![3.5, 1.0, 3.5, 2.0]);
    }

    #[test]
    fn reversed_ranks_give_minus_one() {
        let a = FrequencyTable::from_pairs(alpha_xy(), &[('x', 1), ('y', 2), ('z', 3)]).unwrap();
        let b = FrequencyTable::from_pairs(alpha_xy(), &[('x', 3), ('y', 2), ('z', 1)]).unwrap();
        assert!((compare_tables(&a, &b).unwrap().rank_correlation + 1.0).abs() < 1e-12);
    }
}
