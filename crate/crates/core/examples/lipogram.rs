//! Build a text from only the words that avoid `e` and let the scan find the gap.

use lettercount::freq::count_letters;
use lettercount::stylometry::lipogram_scan;
use lettercount::{load_alphabet, normalize, tokenize_words, WordSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let en = load_alphabet("en")?;
    let dir = env!("CARGO_MANIFEST_DIR");
    let reference_text = normalize(
        &std::fs::read_to_string(format!("{dir}/corpus/lcet10.txt"))?,
        &en,
    );
    let reference = count_letters(&reference_text);
    let raw = std::fs::read_to_string(format!("{dir}/corpus/alice29.txt"))?;

    let kept: Vec<String> = tokenize_words(&raw, &en)
        .words()
        .filter(|w| !w.contains('e'))
        .collect();
    let lipogram = WordSequence::from_words(en.clone(), &kept, "words without e")?.joined();
    println!(
        "{} letters from {} words without e",
        lipogram.len(),
        kept.len()
    );
    for f in lipogram_scan(&count_letters(&lipogram), &reference, 1e-6)? {
        println!(
            "  {}: {} seen, {:.0} expected, p = {:.2e}",
            f.letter, f.observed, f.expected, f.p_value
        );
    }

    let plain = reference_text.slice(0..5_000);
    let flags = lipogram_scan(&count_letters(&plain), &reference, 0.01)?;
    let letters: String = flags.iter().map(|f| f.letter).collect();
    println!(
        "opening 5,000 letters of the reference itself: {} flagged {letters:?}",
        flags.len()
    );
    Ok(())
}
