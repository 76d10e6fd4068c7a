//! `<=3`-confusability: region parsing, extended regions, the recursive
//! decision procedure, labels, and trace normalization.

mod decide;
mod ext;
mod label;
mod region;
mod trace;

pub use decide::{confuse, confuse_full_scan, confuse_with_stats, ConfuseStats};
pub use ext::{count_occurrences, ext_prefix, star_pref};
pub use label::{compute_label, label_confusable, Label, LabelEntry, Sign};
pub use region::{count_regions, main_and_region, RegionDescriptor};
pub use trace::{normalize_trace, DuplicationTrace};

pub(crate) use ext::ExtScanner;
pub(crate) use label::{entries_confusable, label_entries};
