//! Valuations, valuation hyperrings, residue hyperfields and the round
//! trips between them.

mod finite;
mod symbolic;

pub use finite::{
    enumerate_valuation_hyperrings, enumerate_valuation_hyperrings_powerset, equivalent,
    inclusion_reversal_holds, is_valuation, is_valuation_hyperring, maximal_ideal_check,
    residue_hyperfield, ring_from_valuation, units_and_maximal_ideal, valuation_from_hyperring,
    MaximalIdealCheck, QuotientGroup, Residue, Valuation, Value, ValueGroup,
    VALUATION_POWERSET_BOUND,
};
pub use symbolic::{
    induced_valuation_on_factor, st_valuation_round_trip, InducedValuation, SymbolicRingCheck,
};
