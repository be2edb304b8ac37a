//! Coherent matching fields from weight matrices, the diagonal family, the
//! sets of sign maps a field induces, and tropical non-singularity.

mod assignment;
mod iso;
mod omm;
mod weights;

pub use iso::{are_isomorphic, canonical_form, isomorphism_classes, Canonical, ISO_ELEMENT_LIMIT};
pub use omm::{chirotope_evidence, expected_count, omm, ChirotopeEvidence, OmmSet, FREE_ENTRY_LIMIT};
pub use weights::{
    coherent_field, coherent_oracle, determinant_signs, nonsingular_masks, oracle_parameter, regular_triangulation,
    tropically_nonsingular_minors, WeightMatrix,
};

use crate::core::subset::combinations;
use crate::core::{GroundConfig, Matching};
use crate::triangulation::MatchingField;
use crate::Result;

/// `σ = {j_1 < … < j_d} ↦ {(0, j_1), …, (d−1, j_d)}`.
pub fn diagonal_field(d: usize, n: usize) -> Result<MatchingField> {
    let config = GroundConfig::new(d, n)?;
    let ms = combinations(n, d).map(Matching::new).collect::<Result<Vec<_>>>()?;
    MatchingField::new(config, ms)
}
