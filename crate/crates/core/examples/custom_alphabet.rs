//! Alphabets with fold rules: Latin merges j into i and v into u, and an
//! alphabet document can define any other.

use lettercount::freq::{count_letters, rank_order};
use lettercount::{load_alphabet, normalize, Alphabet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let la = load_alphabet("la")?;
    let line =
        "Gallia est omnis divisa in partes tres, quarum unam incolunt Belgae, aliam Aquitani, \
                tertiam qui ipsorum lingua Celtae, nostra Galli appellantur. IVLIVS CAESAR";
    let text = normalize(line, &la);
    println!("{} letters of {:?}: {}", text.len(), la.name(), text);
    println!(
        "rank order: {}",
        rank_order(&count_letters(&text)).iter().collect::<String>()
    );

    // the okina is a consonant; an ASCII apostrophe folds onto it
    let spec = "name: haw\nletters: a e i o u h k l m n p w ʻ\nvowels: a e i o u\n\
                fold: ā > a\nfold: ē > e\nfold: ī > i\nfold: ō > o\nfold: ū > u\nfold: ' > ʻ\n";
    let haw = std::sync::Arc::new(Alphabet::from_spec(spec)?);
    let seq = normalize("Ua mau ke ea o ka ʻāina i ka pono. Hawai'i", &haw);
    println!(
        "{}: {} ({} characters dropped)",
        haw.name(),
        seq,
        seq.source.discarded
    );
    print!("{}", haw.to_spec());
    Ok(())
}
