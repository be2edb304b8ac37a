//! Triangulations of `Δ_{d−1} × Δ_{n−1}` as sets of spanning trees of
//! `K_{R,E}`, their validation, and the (pointed) polyhedral matching fields
//! they carry.

mod field;
mod tree;
mod validate;

pub use field::{
    extract_matching_field, is_linkage, linkage_pd_graph, placing_triangulation, pointed_completion, pointed_extension,
    restrict_to_inner, LinkageReport, MatchingField,
};
pub use tree::{perfect_matching, r_saturating_matching, Tree, TreeSet};
pub use validate::{validate_triangulation, TriangulationReport, Violation};
