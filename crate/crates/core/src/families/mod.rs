//! Constructors for the graph families: Praeger-Xu graphs and their
//! generators, split graphs and merging, Cayley graphs, and named graphs.

mod cayley;
mod named;
mod px;
mod split;

pub use cayley::{cayley_digraph, cayley_graph, CayleySpec, GroupTable};
pub use named::{
    bch, circulant, complete, complete_bipartite, cycle, generalized_petersen, heawood, hypercube, k55_minus_matching,
    moebius, named, path, petersen, prism, FANO_LINES,
};
pub use px::{delta_column, directed_px, px, px_groups, px_rho, px_sigma, px_tau, PraegerXuParams, PxGroups, PxVertex};
pub use split::{canonical_matching, merge, minus, plus, rung_matching, split, split_px};
