//! Vowel/consonant profiles of two texts: thresholds, a two-sample test and
//! the spread over 1,000-letter blocks.

use lettercount::stylometry::{
    alberti_test, block_profiles, compass_of_variation, two_sample_proportion_test, vc_profile,
    DEFAULT_BLOCK,
};
use lettercount::{load_alphabet, normalize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = env!("CARGO_MANIFEST_DIR");
    for alphabet in ["en", "en-y-vowel"] {
        let a = load_alphabet(alphabet)?;
        println!("alphabet {alphabet}");
        let mut profiles = Vec::new();
        for name in ["alice29.txt", "lcet10.txt"] {
            let text = normalize(
                &std::fs::read_to_string(format!("{dir}/corpus/{name}"))?,
                &a,
            );
            let p = vc_profile(&text);
            let verdict = alberti_test(&p)?;
            let spread = compass_of_variation(&block_profiles(&text, DEFAULT_BLOCK)?)?;
            println!(
                "  {name:<12} share {} ({:.4}) -> {}; {:.1} vowels per 100 consonants, blocks {:.1}..{:.1} median {:.1}",
                verdict.vowel_share,
                p.vowel_share().unwrap_or(0.0),
                verdict.label,
                p.vowels_per_100().unwrap_or(f64::NAN),
                spread.minimum,
                spread.maximum,
                spread.median
            );
            profiles.push(p);
        }
        let t = two_sample_proportion_test(&profiles[0], &profiles[1])?;
        println!("  difference: z = {:.2}, p = {:.2e}", t.z, t.p_value);
    }
    Ok(())
}
