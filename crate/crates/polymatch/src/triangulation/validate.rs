use std::collections::HashMap;

use super::tree::{perfect_matching, Tree, TreeSet};
use crate::core::subset::{combinations, mask_of, Mask};

/// First violated condition of the tree-set characterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotSpanningTree {
        tree: usize,
    },
    MissingNeighbour {
        tree: usize,
        edge: (usize, usize),
    },
    MatchingConflict {
        trees: (usize, usize),
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
    WrongCount {
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationReport {
    pub holds: bool,
    pub violation: Option<Violation>,
}

impl TriangulationReport {
    fn fail(v: Violation) -> Self {
        TriangulationReport {
            holds: false,
            violation: Some(v),
        }
    }
}

/// Checks that `ts` lists the maximal simplices of a triangulation:
/// (1) spanning trees, (2) every interior facet `G−e` is shared with another
/// tree, (3) perfect matchings on a common node set agree; then the cell count.
pub fn validate_triangulation(ts: &TreeSet) -> TriangulationReport {
    let config = ts.config();
    let trees = ts.trees();
    if let Some(i) = trees.iter().position(|t| !t.is_spanning_tree(config)) {
        return TriangulationReport::fail(Violation::NotSpanningTree { tree: i });
    }
    for (i, g) in trees.iter().enumerate() {
        for &e in g.edges() {
            if g.row_degree(e.0) == 1 || g.col_degree(e.1) == 1 {
                continue;
            }
            let facet = g.without(e);
            let shared = trees
                .iter()
                .enumerate()
                .any(|(j, h)| j != i && h.contains_all(facet.edges()));
            if !shared {
                return TriangulationReport::fail(Violation::MissingNeighbour { tree: i, edge: e });
            }
        }
    }
    if let Some(v) = matching_conflict(trees, config.d, config.n) {
        return TriangulationReport::fail(v);
    }
    let expected = ts.expected_count();
    if trees.len() != expected {
        return TriangulationReport::fail(Violation::WrongCount {
            expected,
            found: trees.len(),
        });
    }
    TriangulationReport {
        holds: true,
        violation: None,
    }
}

fn matching_conflict(trees: &[Tree], d: usize, n: usize) -> Option<Violation> {
    let mut seen: HashMap<(Mask, Mask), (Vec<(usize, usize)>, usize)> = HashMap::new();
    for (i, t) in trees.iter().enumerate() {
        for k in 1..=d {
            for rows in combinations(d, k) {
                let rmask = mask_of(&rows);
                for cols in combinations(n, k) {
                    let cmask = mask_of(&cols);
                    let Some(m) = perfect_matching(t.edges(), rmask, cmask) else {
                        continue;
                    };
                    match seen.get(&(rmask, cmask)) {
                        Some((other, j)) if *other != m => {
                            return Some(Violation::MatchingConflict {
                                trees: (*j, i),
                                rows,
                                cols,
                            });
                        }
                        Some(_) => {}
                        None => {
                            seen.insert((rmask, cmask), (m, i));
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn two_by_four_passes() {
        let r = validate_triangulation(&catalog::two_by_four_triangulation());
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn missing_tree_breaks_a_facet() {
        let ts = catalog::two_by_four_triangulation();
        let trees = ts.trees()[..3].to_vec();
        let cut = TreeSet::new(ts.config(), trees).unwrap();
        let r = validate_triangulation(&cut);
        assert!(matches!(r.violation, Some(Violation::MissingNeighbour { .. })), "{r:?}");
    }

    #[test]
    fn prism_and_ringel_pass() {
        assert!(validate_triangulation(&catalog::prism_triangulation()).holds);
        let ringel = catalog::ringel_triangulation();
        assert_eq!(ringel.len(), 21);
        assert_eq!(ringel.expected_count(), 21);
        let r = validate_triangulation(&ringel);
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn non_tree_is_condition_one() {
        let ts = TreeSet::from_edges(2, 2, &[&[(0, 0), (1, 1)]]).unwrap();
        assert_eq!(
            validate_triangulation(&ts).violation,
            Some(Violation::NotSpanningTree { tree: 0 })
        );
    }

    #[test]
    fn conflicting_matchings_are_caught() {
        // Both triangulations of Δ₁×Δ₁ at once: every facet is shared but the
        // matchings on {0,1} differ.
        let cycle = [(0, 0), (0, 1), (1, 1), (1, 0)];
        let trees = (0..4)
            .map(|k| Tree::new(cycle.iter().copied().filter(|&e| e != cycle[k]).collect()))
            .collect();
        let ts = TreeSet::new(crate::core::GroundConfig::new(2, 2).unwrap(), trees).unwrap();
        let r = validate_triangulation(&ts);
        assert!(matches!(r.violation, Some(Violation::MatchingConflict { .. })), "{r:?}");
    }

    #[test]
    fn duplicate_count_is_caught() {
        let ts = TreeSet::from_edges(1, 3, &[&[(0, 0), (0, 1), (0, 2)], &[(0, 0), (0, 1), (0, 2)]]).unwrap();
        let r = validate_triangulation(&ts);
        assert_eq!(r.violation, Some(Violation::WrongCount { expected: 1, found: 2 }));
    }
}
