//! Fixity of automorphisms of vertex-transitive graphs: exact fixed-point
//! ratios, automorphism search, the Praeger-Xu and split Praeger-Xu families,
//! and the verification harness for the one-third edge-fixity threshold.

pub mod error;
pub mod families;
pub mod fixity;
pub mod graph;
pub mod permgroup;
pub mod scalar;
pub mod symmetry;
pub mod verify;

use num_rational::Ratio;

pub use error::{Error, Result};
pub use graph::{Digraph, Girth, Graph};
pub use num_bigint::BigInt;
pub use permgroup::{Partition, Permutation, PermutationGroup};
pub use scalar::ExactInt;

/// Exact ratio over machine integers; enough for every desk-scale count.
pub type Fraction = Ratio<i64>;
/// Exact ratio without overflow.
pub type BigFraction = Ratio<BigInt>;
