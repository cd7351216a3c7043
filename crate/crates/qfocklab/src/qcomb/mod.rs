//! Exact q-combinatorics kernel.
//!
//! Everything here is computed in exact rational arithmetic: permutation
//! inversions, pair-partition crossings, q-integers and q-factorials, the
//! crossing generating polynomials of even moments, and the q-Hermite
//! family. The floating-point Fock-space machinery elsewhere in the crate is
//! tested against these values, never the other way around.

mod hermite;
mod pairing;
mod poly;

pub use hermite::{q_hermite, XPoly};
pub use pairing::{
    crossings, enumerate_pair_partitions, inversions, moment_polynomial, q_factorial, q_integer,
    PairPartition, PairPartitionIter, Permutation, PAIR_ENUMERATION_GUARD,
};
pub use poly::QPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QCombError {
    #[error("image array is not a permutation")]
    NotAPermutation,

    #[error("pairs do not form a pair partition")]
    NotAPairPartition,

    #[error("pair partitions need an even ground set, got n = {n}")]
    OddGroundSet { n: usize },

    #[error("ground set n = {n} exceeds the enumeration guard {guard}")]
    GroundSetTooLarge { n: usize, guard: usize },
}
