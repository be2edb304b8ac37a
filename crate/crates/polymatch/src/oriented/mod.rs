//! Sign maps of (pointed) matching fields with a sign matrix, duality, and
//! the dictionary between pd-graphs and signed circuits, cocircuits, topes and
//! covectors.

mod chirotope;
mod circuits;
mod covectors;
mod duality;
mod matrix;

pub use chirotope::{chirotope, sign_map_unchecked, tree_chirotope, tree_chirotope_by_matchings};
pub use circuits::{
    chow_pd_graph, chow_tree, circuit_from_chirotope, circuits_of, cocircuit_from_chirotope, cocircuits, cocircuits_of,
    is_minimal_transversal, orthogonality_witness, signed_circuits,
};
pub use covectors::{is_covector, psi, psi_pointed, psi_raw, topes, TOPE_LIMIT};
pub use duality::{check_duality, check_duality_all_orderings, dual_pair, DualityReport};
pub use matrix::SignMatrix;
