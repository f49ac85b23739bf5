//! Signed-value hyperfields over `Z^k`: the signed tropical hyperfield and
//! `Q` modulo positive `p`-adic units, with exact arithmetic on infinite
//! sums.

mod analysis;
mod elem;
mod field;
mod ordering;
mod stset;

pub use analysis::{
    st_a_of_p, st_axiom_check, st_hull_check, st_i_of_p, st_in_a_of_p, st_in_cycle,
    st_in_i_of_p, st_induced_on, st_maximal_ideal, st_nonsingleton_sum_demo,
    st_nonstrict_subhyperring_demo, st_residue, st_residue_sign_isomorphism,
    st_valuation_report, st_valuation_ring, Hull, HullCheck, NonSingletonDemo, NonStrictDemo,
    SymbolicResidue, SymbolicValuation,
};
pub use elem::{Gamma, Sign, StElem, MAX_RANK};
pub use field::{AddOverride, AddRule, SignedValueHyperfield};
pub use ordering::{
    ordering_case_analysis, ordering_contains, ordering_window_report, set_meets_ordering,
    set_within_ordering, st_is_ordering, st_orderings, st_signature, Character, SymbolicVerdict,
};
pub use stset::StSet;
