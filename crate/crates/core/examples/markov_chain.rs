//! Do vowels and consonants alternate independently? Compare a real text
//! against shuffles of its own letters.

use lettercount::markov::{fit_transitions, generate_vc, independence_test, to_vc_sequence, State};
use lettercount::rng::SplitMix64;
use lettercount::{load_alphabet, normalize, LetterSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let en = load_alphabet("en")?;
    let raw = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/alice29.txt"))?;
    let text = normalize(&raw, &en).slice(0..20_000);

    let chain = fit_transitions(&to_vc_sequence(&text))?;
    let report = independence_test(&chain, false)?;
    println!(
        "first 20,000 letters: {}",
        to_vc_sequence(&text.slice(0..40)).render()
    );
    println!(
        "  P(V|V) {:.3}  P(C|V) {:.3}  P(V|C) {:.3}  P(C|C) {:.3}",
        report.p_vv, report.p_vc, report.p_cv, report.p_cc
    );
    println!(
        "  chi-square {:.1}, p = {:e}",
        report.chi_square, report.p_value
    );

    let mut letters = text.indices().to_vec();
    let mut rng = SplitMix64::new(1913);
    let mut rejected = 0;
    for _ in 0..100 {
        rng.shuffle(&mut letters);
        let shuffled =
            LetterSequence::from_indices(en.clone(), letters.clone(), Default::default())?;
        let r = independence_test(&fit_transitions(&to_vc_sequence(&shuffled))?, false)?;
        rejected += usize::from(r.p_value < 0.05);
    }
    println!("shuffled letters: {rejected}/100 rejected at 0.05");

    let simulated = generate_vc(&chain, 60, 7)?;
    println!("simulated chain:  {simulated}");
    println!(
        "  starts with {}",
        if simulated.states[0] == State::Vowel {
            "a vowel"
        } else {
            "a consonant"
        }
    );
    Ok(())
}
