//! Word rank-frequency table and a log-log fit of its head.

use lettercount::zipf::{fit_power_law, word_rank_frequency, DEFAULT_MIN_COUNT};
use lettercount::{load_alphabet, tokenize_words};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let en = load_alphabet("en")?;
    for name in ["alice29.txt", "lcet10.txt"] {
        let raw = std::fs::read_to_string(format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR")))?;
        let rf = word_rank_frequency(&tokenize_words(&raw, &en))?;
        let fit = fit_power_law(&rf, DEFAULT_MIN_COUNT)?;
        println!(
            "{name}: {} words, {} distinct; exponent {:.3}, r^2 {:.3} over {} words",
            rf.total(),
            rf.len(),
            fit.exponent,
            fit.r_squared,
            fit.points_used
        );
        for e in rf.entries().iter().take(5) {
            println!("  {:>3} {:<6} {}", e.rank, e.word, e.count);
        }
    }
    Ok(())
}
