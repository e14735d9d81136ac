//! Entropy of increasing-order letter models, with random text from each.

use lettercount::cipher::LanguageModel;
use lettercount::freq::{count_digrams, count_letters};
use lettercount::markov::{entropy_estimates, generate_letters, Order};
use lettercount::{load_alphabet, normalize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let en = load_alphabet("en")?;
    let raw = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/lcet10.txt"))?;
    let text = normalize(&raw, &en);
    let e = entropy_estimates(&count_letters(&text), &count_digrams(&text))?;
    println!(
        "h0 {:.3}  h1 {:.3}  h2 {:.3} bits per letter",
        e.h0, e.h1, e.h2
    );

    let model = LanguageModel::train(&text, 0.5)?;
    for (name, order) in [("order 0", Order::Zero), ("order 1", Order::One)] {
        println!("{name}: {}", generate_letters(&model, order, 100, 1948)?);
    }
    Ok(())
}
