//! Fixed vertices, edges and arcs of automorphisms, with exact ratios.

mod cayley;
mod edges;
mod inequalities;
mod scan;

pub use cayley::{cayley_edge_fpr, connection_edge_classes, EdgeClass};
pub use edges::{classify_edges, edge_perm, fixity_report, EdgeClassification, FixityReport, FixitySummary};
pub use inequalities::{
    check_counting_inequalities, forest_euler_check, CountingContext, ForestCheck, Inequality, InequalityCheck,
    InequalityStatus,
};
pub use scan::{
    max_edge_fpr, max_edge_fpr_by_class, max_point_fpr, normal_quotient_valency, quotient_fpr_pair, MaxFixity,
};
