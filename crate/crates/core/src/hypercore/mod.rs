//! Finite hyperstructures and the axiom and homomorphism checkers.

mod axioms;
mod morphism;
mod report;
mod structure;

pub use axioms::{
    check_canonical_hypergroup, check_canonical_hypergroup_with_limit, check_double_distributivity,
    check_hyperfield, check_hyperfield_with_limit, check_hyperring, check_hyperring_with_limit,
    add_table_mutation_coverage, check_zero_neutral, DoubleDistributivity, MutationCoverage,
};
pub use morphism::{
    check_homomorphism, find_isomorphism, induced_subhyperring, is_isomorphism,
    is_strict_subhyperring, kernel, strictness_witness, HomomorphismSpec, Subhyperring,
};
pub use report::{Axiom, Violation, ViolationReport, DEFAULT_WITNESS_LIMIT};
pub use structure::{FiniteHyperstructure, TableSpec};
