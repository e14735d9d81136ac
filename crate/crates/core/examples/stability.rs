//! How quickly a letter table settles as the sample grows.

use lettercount::freq::{
    compare_tables, count_letters, rank_order, stability_curve, stability_curve_random,
};
use lettercount::{load_alphabet, normalize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let en = load_alphabet("en")?;
    let raw = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/alice29.txt"))?;
    let text = normalize(&raw, &en);

    let sizes = [90, 300, 1_000, 3_000, 10_000, 30_000, 100_000];
    let prefix = stability_curve(&text, &sizes)?;
    let random = stability_curve_random(&text, &sizes, 42)?;
    println!("{:>7}  {:>10}  {:>10}", "size", "prefix tv", "random tv");
    for (p, r) in prefix.iter().zip(&random) {
        println!(
            "{:>7}  {:>10.4}  {:>10.4}",
            p.size, p.distance.total_variation, r.distance.total_variation
        );
    }

    let a = count_letters(&text.slice(0..10_000));
    let b = count_letters(&text.slice(10_000..20_000));
    let d = compare_tables(&a, &b)?;
    println!(
        "two 10,000-letter halves: tv {:.4}, spearman {:.4}, top six {} / {}",
        d.total_variation,
        d.rank_correlation,
        rank_order(&a).iter().take(6).collect::<String>(),
        rank_order(&b).iter().take(6).collect::<String>()
    );
    Ok(())
}
