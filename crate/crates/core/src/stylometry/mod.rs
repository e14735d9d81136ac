//! Vowel/consonant statistics and lipogram detection.

mod lipogram;
mod profile;

pub use lipogram::{lipogram_scan, LipogramFlag};
pub use profile::{
    alberti_test, block_profiles, compass_of_variation, orator_threshold, poetry_threshold,
    two_sample_proportion_test, vc_profile, AlbertiLabel, AlbertiVerdict, ProportionTest,
    VCProfile, VariationSummary, DEFAULT_BLOCK,
};
