//! Permutations of finite point sets and small permutation groups handled by
//! explicit enumeration.

mod group;
mod partition;
mod permutation;

pub use group::{PermutationGroup, DEFAULT_ENUMERATION_CAP};
pub use partition::Partition;
pub use permutation::{fixed_points, fpr, fpr_on, Permutation};
