//! Compatibility of orderings with valuations, convexity, lifting of
//! residue orderings and the Baer–Krull correspondence.

mod finite;
mod symbolic;

pub use finite::{
    compatibility_report, cond_i, cond_ii, cond_iii, cond_iv, convexity_check,
    finite_baer_krull_forward, finite_baer_krull_inverse, finite_characters,
    induced_residue_set, lift_ordering, lift_preordering, natural_valuation,
    residue_ordering_archimedean_check, CompatReport, Convexity, ResidueOrdering,
};
pub use symbolic::{
    incomparability_witnesses, st_baer_krull, st_baer_krull_forward, st_baer_krull_inverse,
    st_compatibility_report, st_convexity_check, st_induced_residue_set, st_lift_contains,
    st_lift_ordering, BaerKrullRow, BaerKrullTable, IncomparablePair,
};
