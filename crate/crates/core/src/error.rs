use thiserror::Error;

use crate::hset::MAX_CARRIER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {index} is outside a carrier of size {size}")]
    OutOfCarrier { index: usize, size: usize },
    #[error("operand set is empty")]
    EmptySet,
    #[error("carrier of {0} elements exceeds the supported maximum of {MAX_CARRIER}")]
    CarrierTooLarge(usize),
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("{what} bound exceeded: {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("not a hyperideal: {0}")]
    NotHyperideal(String),
    #[error("not a hyperfield: {0}")]
    NotHyperfield(String),
    #[error("not an ordering: {0}")]
    InvalidOrdering(String),
    #[error("not a preordering: {0}")]
    NotPreordering(String),
    #[error("invalid valuation: {0}")]
    InvalidValuation(String),
    #[error("not a valuation hyperring: {0}")]
    InvalidValuationRing(String),
    #[error("homomorphism check failed: {0}")]
    InvalidHomomorphism(String),
    #[error("ordering is not compatible with the valuation: {0}")]
    Incompatible(String),
    #[error("residue hyperfield has no orderings")]
    NonRealResidue,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("mixed value-group ranks {0} and {1}")]
    RankMismatch(usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
