use std::sync::Arc;

use lettercount::alphabet::BUILTIN_NAMES;
use lettercount::cipher::{score, LanguageModel};
use lettercount::corpus::{normalize, LetterSequence};
use lettercount::freq::{compare_tables, count_letters, proportion_ci, rank_order, FrequencyTable};
use lettercount::markov::{fit_transitions, to_vc_sequence, BinarySequence};
use lettercount::stylometry::{alberti_test, lipogram_scan, two_sample_proportion_test, VCProfile};
use lettercount::zipf::PowerLawFit;
use lettercount::{load_alphabet, Alphabet};
use num_rational::Ratio;
use proptest::prelude::*;

fn en() -> Arc<Alphabet> {
    load_alphabet("en").unwrap()
}

fn table() -> impl Strategy<Value = FrequencyTable> {
    prop::collection::vec(0u64..500, 26).prop_map(|c| FrequencyTable::from_counts(en(), c).unwrap())
}

fn nonempty_table() -> impl Strategy<Value = FrequencyTable> {
    table().prop_filter("needs letters", |t| t.total() > 0)
}

#[test]
fn builtin_alphabets_pass_their_checks() {
    for name in BUILTIN_NAMES {
        let a = load_alphabet(name).unwrap();
        a.check_invariants().unwrap();
        assert_eq!(
            *Alphabet::from_spec(&a.to_spec()).unwrap().letters(),
            *a.letters()
        );
    }
}

proptest! {
    #[test]
    fn rank_order_is_a_permutation(t in table()) {
        let mut order = rank_order(&t);
        order.sort_unstable();
        let mut letters = en().letters().to_vec();
        letters.sort_unstable();
        prop_assert_eq!(order, letters);
    }

    #[test]
    fn total_variation_is_a_metric_on_distributions(a in nonempty_table(), b in nonempty_table()) {
        let ab = compare_tables(&a, &b).unwrap();
        let ba = compare_tables(&b, &a).unwrap();
        prop_assert_eq!(ab.total_variation, ba.total_variation);
        prop_assert!((0.0..=1.0).contains(&ab.total_variation));
        let same = a.proportions() == b.proportions();
        prop_assert_eq!(ab.total_variation == 0.0, same);
        prop_assert_eq!(compare_tables(&a, &a).unwrap().chi_square, 0.0);
    }

    #[test]
    fn scaled_table_has_zero_distance(a in nonempty_table(), k in 2u64..9) {
        let scaled = FrequencyTable::from_counts(en(), a.counts().iter().map(|c| c * k).collect()).unwrap();
        prop_assert!(compare_tables(&a, &scaled).unwrap().total_variation < 1e-12);
    }

    #[test]
    fn wilson_interval_contains_estimate_and_narrows(total in 1u64..5000, frac in 0.0f64..=1.0) {
        let count = (frac * total as f64).round() as u64;
        let ci = proportion_ci(count, total, 0.95).unwrap();
        prop_assert!(ci.lower <= ci.estimate && ci.estimate <= ci.upper);
        prop_assert!(0.0 <= ci.lower && ci.upper <= 1.0);
        let wider = proportion_ci(4 * count, 4 * total, 0.95).unwrap();
        prop_assert!(wider.width() < ci.width());
    }

    #[test]
    fn score_ignores_relabeling(text in "[a-z]{2,80}", train in "[a-z]{2,200}", seed in any::<u64>()) {
        let mut perm: Vec<u8> = (0..26).collect();
        lettercount::rng::SplitMix64::new(seed).shuffle(&mut perm);
        let relabel = |s: &LetterSequence| {
            LetterSequence::from_indices(en(), s.indices().iter().map(|&i| perm[usize::from(i)]).collect(), Default::default()).unwrap()
        };
        let (seq, corpus) = (normalize(&text, &en()), normalize(&train, &en()));
        let model = LanguageModel::train(&corpus, 0.5).unwrap();
        let moved = LanguageModel::train(&relabel(&corpus), 0.5).unwrap();
        let a = score(&seq, &model).unwrap();
        let b = score(&relabel(&seq), &moved).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
    }

    #[test]
    fn vowel_and_consonant_shares_are_complements(v in 0u64..10_000, c in 0u64..10_000) {
        prop_assume!(v + c > 0);
        let p = VCProfile::new(v, c);
        prop_assert_eq!(p.vowel_ratio().unwrap(), Ratio::from_integer(1) - Ratio::new(c, v + c));
        prop_assert!((p.vowel_share().unwrap() - (1.0 - p.consonant_share().unwrap())).abs() < 1e-15);
    }

    #[test]
    fn alberti_label_survives_scaling(v in 0u64..2000, c in 0u64..2000, k in 1u64..1000) {
        prop_assume!(v + c > 0);
        let a = alberti_test(&VCProfile::new(v, c)).unwrap();
        let b = alberti_test(&VCProfile::new(v * k, c * k)).unwrap();
        prop_assert_eq!(a.label, b.label);
        prop_assert!(!a.above_poetry_threshold || a.above_orator_threshold);
    }

    #[test]
    fn two_sample_test_is_antisymmetric(a in (0u64..5000, 0u64..5000), b in (0u64..5000, 0u64..5000)) {
        prop_assume!(a.0 + a.1 > 0 && b.0 + b.1 > 0);
        let (pa, pb) = (VCProfile::new(a.0, a.1), VCProfile::new(b.0, b.1));
        let ab = two_sample_proportion_test(&pa, &pb).unwrap();
        let ba = two_sample_proportion_test(&pb, &pa).unwrap();
        prop_assert_eq!(ab.z, -ba.z);
        prop_assert_eq!(ab.p_value, ba.p_value);
    }

    #[test]
    fn lowering_alpha_never_adds_flags(obs in table(), reference in nonempty_table(), hi in 1e-8f64..1.0, frac in 0.0f64..1.0) {
        let lo = hi * frac;
        prop_assume!(lo > 0.0);
        let strict = lipogram_scan(&obs, &reference, lo).unwrap();
        let loose = lipogram_scan(&obs, &reference, hi).unwrap();
        prop_assert!(strict.iter().all(|f| loose.iter().any(|g| g.letter == f.letter)));
    }

    #[test]
    fn vc_reduction_commutes_with_concatenation(a in "[a-z]{0,40}", b in "[a-z]{0,40}") {
        let (x, y) = (normalize(&a, &en()), normalize(&b, &en()));
        let joined = to_vc_sequence(&x.concat(&y).unwrap());
        prop_assert_eq!(joined.render(), to_vc_sequence(&x).render() + &to_vc_sequence(&y).render());
    }

    #[test]
    fn transitions_count_adjacent_pairs(states in "[VC]{2,200}") {
        let b = BinarySequence::parse(&states).unwrap();
        prop_assert_eq!(fit_transitions(&b).unwrap().total(), b.len() as u64 - 1);
    }

    #[test]
    fn vowel_counts_agree_with_profiles(text in "[a-z ]{0,100}") {
        let seq = normalize(&text, &en());
        let p = lettercount::stylometry::vc_profile(&seq);
        prop_assert_eq!(p.vowel_count, to_vc_sequence(&seq).vowel_count());
        prop_assert_eq!(count_letters(&seq).total(), p.total());
    }

    #[test]
    fn power_law_fit_ignores_scale_and_order(counts in prop::collection::vec(1u32..100_000, 2..60), k in 2.0f64..1000.0) {
        let mut counts = counts;
        counts.sort_unstable_by(|a, b| b.cmp(a));
        let points: Vec<(f64, f64)> = counts.iter().enumerate().map(|(i, &c)| ((i + 1) as f64, f64::from(c))).collect();
        let scaled: Vec<(f64, f64)> = points.iter().map(|&(r, c)| (r, c * k)).collect();
        let reversed: Vec<(f64, f64)> = points.iter().rev().copied().collect();
        let base = PowerLawFit::from_points(&points).unwrap();
        prop_assert!((PowerLawFit::from_points(&scaled).unwrap().exponent - base.exponent).abs() < 1e-12);
        prop_assert!((PowerLawFit::from_points(&reversed).unwrap().exponent - base.exponent).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&base.r_squared));
    }
}
