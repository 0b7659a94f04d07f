use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("images do not form a bijection on 0..{degree}")]
    NotABijection { degree: usize },
    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("automorphism search exceeded its budget of {budget} nodes")]
    SearchBudgetExceeded { budget: usize },
    #[error("element is not a member of the group")]
    NotInGroup,
    #[error("fixed-point ratio over an empty domain")]
    EmptyDomain,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not invariant under the permutation")]
    NotInvariant,
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("repeated edge {{{0}, {1}}}")]
    RepeatedEdge(usize, usize),
    #[error("edge-connectivity is only supported for 1 <= k <= 4, got {0}")]
    UnsupportedConnectivity(usize),
    #[error("invalid Praeger-Xu parameters r={r}, s={s} (need r >= 3, 1 <= s <= r-1)")]
    InvalidPxParams { r: usize, s: usize },
    #[error("vertex {vertex} has in-valency {in_valency} and out-valency {out_valency}; splitting needs 2 and 2")]
    SplitValency { vertex: usize, in_valency: usize, out_valency: usize },
    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),
    #[error("merge is not a simple graph: {0}")]
    MergeNotSimple(String),
    #[error("local orbit structure at vertex {vertex} is {orbit_lengths:?}, expected [1, 2]")]
    LocalOrbitStructure { vertex: usize, orbit_lengths: Vec<usize> },
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("not an automorphism: edge {{{}, {}}} maps to non-edge {{{}, {}}}", edge.0, edge.1, image.0, image.1)]
    NotAnAutomorphism { edge: (usize, usize), image: (usize, usize) },
    #[error("identity element where a non-identity element is required")]
    IdentityElement,
    #[error("trivial group")]
    TrivialGroup,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
