//! Letter, digram and positional counting, ranking, comparison and intervals.

mod compare;
mod interval;
mod positional;
mod stability;
mod table;

pub use compare::{compare_tables, TableDistance};
pub use interval::{proportion_ci, ConfidenceInterval};
pub use positional::{positional_stats, PositionalStats};
pub use stability::{stability_curve, stability_curve_random, StabilityPoint};
pub(crate) use table::round6;
pub use table::{
    count_digrams, count_letters, merge, rank_indices, rank_order, DigramTable, FrequencyTable,
};
