//! Letter table of a text with ranks, 95% intervals and word-position tallies.
//!
//! cargo run --example frequency_table [-- path/to/text.txt]

use lettercount::freq::{count_letters, positional_stats, proportion_ci, rank_indices};
use lettercount::{load_alphabet, normalize, tokenize_words};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/alice29.txt").to_string());
    let raw = std::fs::read_to_string(&path)?;
    let en = load_alphabet("en")?;
    let letters = normalize(&raw, &en);
    let table = count_letters(&letters);
    println!(
        "{path}: {} letters, {} other characters discarded",
        table.total(),
        letters.source.discarded
    );

    println!("rank letter   count   share   95% interval");
    for (rank, &i) in rank_indices(&table).iter().enumerate() {
        let count = table.count_at(i);
        let ci = proportion_ci(count, table.total(), 0.95)?;
        println!(
            "{:>4}   {}   {:>8}  {:.4}   [{:.4}, {:.4}]",
            rank + 1,
            en.letter(i),
            count,
            ci.estimate,
            ci.lower,
            ci.upper
        );
    }

    let positions = positional_stats(&tokenize_words(&raw, &en));
    let top = |t: &lettercount::freq::FrequencyTable| -> String {
        lettercount::freq::rank_order(t)
            .into_iter()
            .take(8)
            .collect()
    };
    println!("most common first letters: {}", top(&positions.initial));
    println!("most common last letters:  {}", top(&positions.final_));
    let mut doubles: Vec<(char, u64)> = en
        .letters()
        .iter()
        .copied()
        .zip(positions.doubles.iter().copied())
        .collect();
    doubles.sort_by_key(|d| std::cmp::Reverse(d.1));
    println!("most doubled: {:?}", &doubles[..5]);
    Ok(())
}
