//! Permutations, set-partitions, pair-partitions, and left-to-right minima.

pub mod pairpart;
pub mod perm;
pub mod setpart;

pub use pairpart::{
    coset_type, pair_partitions, pair_partitions_below, type_of_pair, type_representative, PairPartition,
};
pub use perm::{lrmin, permutations, young_subgroup, Permutation};
pub use setpart::{set_partitions, SetPartition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombError {
    #[error("enumerating {what} for k = {k} exceeds the limit {max}")]
    LimitExceeded { what: &'static str, k: usize, max: usize },
    #[error("ground sets differ ({0} vs {1})")]
    GroundSetMismatch(usize, usize),
    #[error("coset type needs an even ground set, got {0}")]
    OddGroundSet(usize),
}
