//! Tandem-duplication words: roots, `<=3`-confusability, labels, code
//! constructions, size bounds and exact optimal code sizes.

pub mod bounds;
pub mod codes;
pub mod confusability;
pub mod error;
pub mod optimal;
pub mod oracle;
pub mod roots;
pub mod word;

pub use bounds::{binomial, constr1_size, count_i, eq1_upper, prop4_upper, u_bound, BoundsTable};
pub use codes::{
    assemble_lower_bound, construct_irreducible_code, construct_one_region_code, construct_pair_code,
    construct_recursive, match_one_region, one_region_patterns, one_region_size, validate_code, Assembler, Code,
    ExactSource, LowerBound, OneRegionPattern, Provenance, Validation,
};
pub use confusability::{
    compute_label, confuse, confuse_full_scan, confuse_with_stats, count_occurrences, count_regions, ext_prefix,
    label_confusable, main_and_region, normalize_trace, star_pref, ConfuseStats, DuplicationTrace, Label,
    LabelEntry, RegionDescriptor, Sign,
};
pub use error::{Error, Result};
pub use optimal::{
    build_graph, build_graph_with_budget, labels_by_root, max_clique, t_of_n, t_of_root, t_of_root_code,
    CacheEntry, Clique, LabelGraph, TCache, TofN, CACHE_ENV,
};
pub use oracle::{
    canonical_form, canonical_irreducible, descendant_cone, descendant_cone_with_budget, enumerate_irreducible,
    enumerate_labels, enumerate_labels_with_budget, irreducible_counts, oracle_confusable,
    oracle_confusable_with_budget, oracle_pair_matrix, ConeFrontier, OracleOutcome, DEFAULT_ORACLE_SLACK,
    DEFAULT_STATE_BUDGET,
};
pub use roots::{
    confusable_root_based, root_exact_k, root_le_k, streaming_push, RootKind, RootMode, StreamingRoot,
};
pub use word::{
    format_symbols, is_irreducible, pad_xi, remove_duplicates_pass, reverse, tandem_duplicate, DuplicationStep,
    Reducibility, Symbol, Word,
};
