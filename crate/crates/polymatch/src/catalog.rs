//! Small worked examples used across the crate, the command line tool and
//! the browser demo. Rows and columns are 0-based.

use crate::core::subset::{combinations, mask_of};
use crate::core::{GroundConfig, Matching};
use crate::triangulation::{perfect_matching, MatchingField, TreeSet};
use crate::Result;

/// Four trees triangulating `Δ₁ × Δ₃`; their matchings form the diagonal field.
pub fn two_by_four_triangulation() -> TreeSet {
    TreeSet::from_edges(
        2,
        4,
        &[
            &[(0, 0), (1, 0), (1, 1), (1, 2), (1, 3)],
            &[(0, 0), (0, 1), (1, 1), (1, 2), (1, 3)],
            &[(0, 0), (0, 1), (0, 2), (1, 2), (1, 3)],
            &[(0, 0), (0, 1), (0, 2), (0, 3), (1, 3)],
        ],
    )
    .expect("static data")
}

/// A staircase triangulation of the prism `Δ₁ × Δ₂` with column order 0, 2, 1.
pub fn prism_triangulation() -> TreeSet {
    TreeSet::from_edges(
        2,
        3,
        &[
            &[(0, 0), (0, 1), (0, 2), (1, 1)],
            &[(0, 0), (0, 2), (1, 1), (1, 2)],
            &[(0, 0), (1, 0), (1, 1), (1, 2)],
        ],
    )
    .expect("static data")
}

/// The smallest matching field that is not linkage.
pub fn non_linkage_field() -> MatchingField {
    MatchingField::from_cols(2, 3, &[&[0, 1], &[2, 0], &[1, 2]]).expect("static data")
}

/// A (3,5) linkage field that no triangulation carries.
pub fn non_polyhedral_linkage_field() -> MatchingField {
    MatchingField::from_cols(
        3,
        5,
        &[
            &[3, 4, 2],
            &[4, 1, 3],
            &[0, 3, 4],
            &[4, 1, 2],
            &[0, 4, 2],
            &[0, 1, 4],
            &[3, 1, 2],
            &[0, 3, 2],
            &[0, 1, 3],
            &[0, 1, 2],
        ],
    )
    .expect("static data")
}

/// The (d, d+1) field whose matchings are the perfect matchings of a
/// spanning tree of `K_{d,d+1}`.
pub fn field_from_linkage_tree(d: usize, edges: &[(usize, usize)]) -> Result<MatchingField> {
    let config = GroundConfig::new(d, d + 1)?;
    let rows = (1u64 << d) - 1;
    let mut ms = Vec::new();
    for sigma in combinations(d + 1, d) {
        let m = perfect_matching(edges, rows, mask_of(&sigma))
            .ok_or_else(|| crate::Error::NotLinkage { tau: (0..=d).collect() })?;
        ms.push(Matching::from_edges(d, &m)?);
    }
    MatchingField::new(config, ms)
}

/// Two coherent (3,4) fields with different supports but the same set of
/// sign maps, given by their linkage trees.
pub fn equal_omm_pair() -> (MatchingField, MatchingField) {
    let path = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3)];
    let bent = [(0, 0), (0, 3), (1, 1), (1, 2), (2, 2), (2, 3)];
    (
        field_from_linkage_tree(3, &path).expect("static data"),
        field_from_linkage_tree(3, &bent).expect("static data"),
    )
}

/// A non-regular triangulation of `Δ₂ × Δ₅` whose pointed field, with
/// [`RINGEL_SIGNS`], gives the non-realizable uniform oriented matroid of rank 3
/// on 9 elements.
pub fn ringel_triangulation() -> TreeSet {
    TreeSet::from_edges(3, 6, RINGEL_TREES).expect("static data")
}

pub const RINGEL_SIGNS: [[i8; 6]; 3] = [[1, -1, -1, 1, 1, 1], [-1, 1, 1, 1, 1, -1], [1, 1, 1, -1, -1, 1]];

const RINGEL_TREES: &[&[(usize, usize)]] = &[
    &[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (2, 1)],
    &[(0, 0), (0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (2, 1), (2, 3)],
    &[(0, 0), (0, 2), (0, 4), (0, 5), (1, 0), (2, 1), (2, 3), (2, 5)],
    &[(0, 0), (0, 2), (0, 4), (1, 0), (2, 0), (2, 1), (2, 3), (2, 5)],
    &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (1, 1), (2, 1)],
    &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (1, 1), (1, 3), (2, 3)],
    &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (1, 1), (2, 1), (2, 3)],
    &[(0, 2), (0, 4), (0, 5), (1, 0), (1, 1), (1, 3), (1, 4), (2, 3)],
    &[(0, 2), (0, 4), (0, 5), (1, 0), (1, 1), (1, 4), (2, 1), (2, 3)],
    &[(0, 2), (0, 4), (0, 5), (1, 0), (1, 4), (2, 1), (2, 3), (2, 5)],
    &[(0, 2), (0, 4), (1, 0), (1, 4), (2, 0), (2, 1), (2, 3), (2, 5)],
    &[(0, 2), (0, 4), (1, 4), (2, 0), (2, 1), (2, 3), (2, 4), (2, 5)],
    &[(0, 2), (0, 5), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (2, 3)],
    &[(0, 2), (0, 5), (1, 0), (1, 1), (1, 2), (1, 4), (2, 3), (2, 5)],
    &[(0, 2), (0, 5), (1, 0), (1, 1), (1, 4), (2, 1), (2, 3), (2, 5)],
    &[(0, 2), (1, 0), (1, 1), (1, 2), (1, 4), (2, 2), (2, 3), (2, 5)],
    &[(0, 2), (1, 0), (1, 1), (1, 4), (2, 1), (2, 2), (2, 3), (2, 5)],
    &[(0, 2), (1, 0), (1, 4), (2, 0), (2, 1), (2, 2), (2, 3), (2, 5)],
    &[(0, 2), (1, 4), (2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (2, 5)],
    &[(0, 5), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3)],
    &[(0, 5), (1, 0), (1, 1), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5)],
];

/// Heights whose tropically non-singular maximal minors do not form a matroid.
pub const TROPICAL_SINGULAR_HEIGHTS: [[i64; 5]; 3] = [[0, 0, 0, 0, 0], [0, 1, 1, 2, 2], [0, 0, 1, 1, 2]];

/// Heights of a regular triangulation of `Δ₂ × Δ₂` (max convention) used for
/// covectors of a pointed field.
pub const COVECTOR_HEIGHTS: [[i64; 3]; 3] = [[1, 3, 1], [4, 5, 6], [2, 0, 8]];

pub const COVECTOR_SIGNS: [[i8; 3]; 3] = [[1, 1, -1], [-1, -1, 1], [-1, -1, -1]];

/// The triangulation induced by [`COVECTOR_HEIGHTS`].
pub fn covector_triangulation() -> TreeSet {
    TreeSet::from_edges(
        3,
        3,
        &[
            &[(0, 0), (0, 1), (0, 2), (1, 2), (2, 2)],
            &[(0, 0), (0, 1), (1, 0), (1, 2), (2, 2)],
            &[(0, 0), (0, 1), (1, 0), (2, 0), (2, 2)],
            &[(0, 1), (1, 0), (1, 1), (1, 2), (2, 2)],
            &[(0, 1), (1, 0), (1, 1), (2, 0), (2, 2)],
            &[(0, 1), (1, 1), (2, 0), (2, 1), (2, 2)],
        ],
    )
    .expect("static data")
}
