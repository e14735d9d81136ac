//! Encipher a passage with a random key, then break it two ways: by matching
//! frequency ranks alone, and by digram hill climbing.

use lettercount::cipher::{
    decrypt, encrypt, frequency_match_key, hill_climb_solve, LanguageModel, SolverConfig,
    SubstitutionKey,
};
use lettercount::rng::SplitMix64;
use lettercount::{load_alphabet, normalize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let en = load_alphabet("en")?;
    let dir = env!("CARGO_MANIFEST_DIR");
    let reference = normalize(
        &std::fs::read_to_string(format!("{dir}/corpus/lcet10.txt"))?,
        &en,
    );
    let model = LanguageModel::train(&reference, 0.5)?;

    let text = normalize(
        &std::fs::read_to_string(format!("{dir}/corpus/alice29.txt"))?,
        &en,
    );
    let plain = text.slice(8_000..10_000);
    let key = SubstitutionKey::random(en.clone(), &mut SplitMix64::new(1467));
    let cryptogram = encrypt(&plain, &key)?;
    println!("key        {key}");
    println!("cryptogram {}...", &cryptogram.render()[..80]);

    let ranked = frequency_match_key(&cryptogram.symbol_table(), model.unigram())?;
    println!(
        "\nrank matching: {}/26 letters right\n  {}...",
        ranked.agreement(&key),
        &decrypt(&cryptogram, &ranked)?.render()[..80]
    );

    let report = hill_climb_solve(&cryptogram, &model, &SolverConfig::default())?;
    println!(
        "\nhill climbing: {}/26 letters right, score {:.1} from {:.1}\n  {}...",
        report.best_key.agreement(&key),
        report.best_score,
        report.seed_score,
        &report.plaintext.render()[..80]
    );

    let short = encrypt(&plain.slice(0..60), &key)?;
    let report = hill_climb_solve(&short, &model, &SolverConfig::default())?;
    if let Some(w) = report.length_warning {
        println!(
            "\n{} symbols is below {}: {}/26 right",
            w.length,
            w.threshold,
            report.best_key.agreement(&key)
        );
    }
    Ok(())
}
