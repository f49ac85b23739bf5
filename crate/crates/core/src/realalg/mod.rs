//! Orderings, preorderings, realness, the sums `I_n`, the convexity hull
//! `A(P)` with its ideal `I(P)`, and archimedean tests.

mod cr;
mod hull;
mod orderings;
mod preorder;
pub mod qsquares;

pub use cr::{theorem_cr_check, CrCheck, CrInstance};
pub use hull::{
    a_of_p, a_of_p_with, compute_in, i_of_p, i_of_p_with, in_a_of_p, in_i_of_p, in_law_failures,
    in_sequence, is_archimedean, HullReading, InSeq,
};
pub use orderings::{
    enumerate_orderings, enumerate_orderings_powerset, is_ordering, is_real, sign_hom, signature,
    OrderingSet, Realness, POWERSET_ORACLE_BOUND,
};
pub use preorder::{
    adjoin, enumerate_preorderings, intersection_recovers, is_preordering,
    maximal_preordering_extensions, sums_of_squares_preordering,
};
