//! Factor hyperfields, quotient hyperrings, hyperideals and the enumeration
//! of small hyperfields.

pub mod arith;
mod builtin;
mod enumerate;
mod factor;
mod qfactor;
mod quotient;

pub use builtin::{krasner_hyperfield, sign_hyperfield, zero_ring, SIGN_NEG, SIGN_POS};
pub use enumerate::{canonical, enumerate_hyperfields, enumerate_up_to, MAX_ENUMERATION_ORDER};
pub use factor::{
    factor_hyperfield, fp_mod_squares, is_prime, prime_field, FactorHyperfield, PrimeFieldSpec,
    SubgroupSpec, DEFAULT_PRIME_BOUND,
};
pub use quotient::{
    enumerate_hyperideals, hyperideal_closure, is_hyperideal, is_maximal, is_maximal_direct,
    is_maximal_via_quotient, is_prime as is_prime_hyperideal, is_prime_direct,
    is_prime_via_quotient, quotient_hyperring, Quotient, HYPERIDEAL_SEARCH_BOUND,
};
pub use qfactor::{
    q_factor_class, q_factor_sum, subgroup_elements, verify_witnesses, BoundedHSet, ClosedForm,
    QClass, QSubgroup, Rational, CLOSED_FORM_SEARCH_CAP,
};
