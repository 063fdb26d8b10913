//! Permutation groups, double cosets and the group-side model of splitting
//! types.
//!
//! For a Galois extension `N/F` with group `G`, an intermediate field `E`
//! fixed by `G_E`, and a place with decomposition group `D` and inertia
//! group `I`, the splitting type of the place in `E` is the multiset of fibre
//! sizes of `I\G/G_E -> D\G/G_E`.

mod census;
mod decomp;
mod group;
mod io;
pub mod linsolve;
mod perm;

pub use census::{
    census_from_unramified_types, conjugating_element, divisors, double_coset_count_from_census,
    double_coset_counts_of, gassmann_equivalent, reconstruct_from_unramified,
    recover_splitting_type, unramified_types, ClassIntersectionCensus, Reconstruction,
};
pub use decomp::{
    double_cosets, enumerate_decompositions, splitting_type_from_fibers,
    splitting_type_from_formula, valid_generators, DecompositionData, SplittingType,
};
pub use group::{PermGroup, SubgroupHandle, DEFAULT_ORDER_BOUND};
pub use io::{DecompSpec, GroupFile};
pub use perm::Perm;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order exceeds the bound {0}")]
    GroupTooLarge(usize),
    #[error("subgroups belong to different groups")]
    ParentMismatch,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("invalid decomposition data: {0}")]
    InvalidDecomposition(String),
    #[error("inconsistent census: {0}")]
    InconsistentCensus(String),
    #[error("invalid double coset counts: {0}")]
    InvalidCounts(String),
    #[error("gcd system has no nonnegative integer solution")]
    NoIntegerSolution,
    #[error("invalid splitting type {0}")]
    InvalidSplittingType(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}
