//! Hyperfields over finite and symbolic carriers: construction, axiom
//! checking, orderings, valuations and the compatibility theory between them.

pub mod compat;
pub mod constructions;
pub mod error;
pub mod hset;
pub mod hypercore;
pub mod realalg;
pub mod sgntrop;
pub mod valtheory;

pub use error::{Error, Result};
pub use hset::{Elem, HSet};
