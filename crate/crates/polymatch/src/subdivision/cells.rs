use std::collections::BTreeMap;

use crate::core::subset::{combinations, mask_of, Mask};
use crate::core::{GroundConfig, Matching, Matroid};
use crate::triangulation::{perfect_matching, pointed_extension, restrict_to_inner, Tree, TreeSet};
use crate::{Error, Result};

/// The transversal matroid of a tree together with the matching it uses on
/// each basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidCell {
    pub matroid: Matroid,
    pub source_tree: usize,
    pub matchings: BTreeMap<Mask, Matching>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub ambient: Matroid,
    pub cells: Vec<MatroidCell>,
    /// Configuration the cell trees live in.
    pub config: GroundConfig,
    pub trees: Vec<Tree>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubdivisionKind {
    /// Inner trees, subdividing `U_{d,n}`.
    Inner,
    /// Pointed trees, subdividing `U_{d,n+d}`.
    Pointed,
}

fn matched_bases(tree: &Tree, config: GroundConfig) -> BTreeMap<Mask, Matching> {
    let rows = (1u64 << config.d) - 1;
    combinations(config.n, config.d)
        .filter_map(|sigma| {
            let m = perfect_matching(tree.edges(), rows, mask_of(&sigma))?;
            Some((
                mask_of(&sigma),
                Matching::from_edges(config.d, &m).expect("perfect matching"),
            ))
        })
        .collect()
}

/// Bases are the d-subsets matched by an R-saturating matching of `tree`.
pub fn transversal_matroid(tree: &Tree, config: GroundConfig) -> Result<Matroid> {
    let bases = matched_bases(tree, config);
    if bases.is_empty() {
        return Err(Error::RankDeficient);
    }
    Matroid::new(config.n, bases.into_keys())
}

/// One cell per inner (or pointed) tree. Cells sharing a basis must use the
/// same matching on it.
pub fn build_subdivision(ts: &TreeSet, kind: SubdivisionKind) -> Result<Subdivision> {
    let trees = match kind {
        SubdivisionKind::Inner => restrict_to_inner(ts),
        SubdivisionKind::Pointed => pointed_extension(ts),
    };
    let config = trees.config();
    let mut cells = Vec::new();
    let mut used: BTreeMap<Mask, Matching> = BTreeMap::new();
    for (i, t) in trees.trees().iter().enumerate() {
        let matchings = matched_bases(t, config);
        if matchings.is_empty() {
            return Err(Error::RankDeficient);
        }
        for (&b, m) in &matchings {
            if let Some(prev) = used.insert(b, m.clone()) {
                if prev != *m {
                    return Err(Error::TriangulationCorrupt(format!(
                        "cells disagree on the matching of basis {:?}",
                        m.sorted_support()
                    )));
                }
            }
        }
        let matroid = Matroid::new(config.n, matchings.keys().copied())?;
        cells.push(MatroidCell {
            matroid,
            source_tree: i,
            matchings,
        });
    }
    Ok(Subdivision {
        ambient: Matroid::uniform(config.d, config.n),
        cells,
        config,
        trees: trees.trees().to_vec(),
    })
}

impl Subdivision {
    /// Every ambient basis lies in some cell.
    pub fn covers_ambient(&self) -> bool {
        self.ambient
            .bases()
            .iter()
            .all(|b| self.cells.iter().any(|c| c.matroid.is_basis(*b)))
    }

    /// The subdivision with a single cell equal to the ambient matroid.
    pub fn trivial(ambient: Matroid) -> Subdivision {
        let config = GroundConfig {
            d: ambient.rank(),
            n: ambient.n(),
        };
        Subdivision {
            cells: vec![MatroidCell {
                matroid: ambient.clone(),
                source_tree: 0,
                matchings: BTreeMap::new(),
            }],
            ambient,
            config,
            trees: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::core::is_matroid;

    fn labels(m: &Matroid) -> Vec<Vec<usize>> {
        m.bases().iter().map(|&b| crate::core::subset::elements(b)).collect()
    }

    #[test]
    fn two_by_four_cells() {
        let ts = catalog::two_by_four_triangulation();
        let c = ts.config();
        let t23 = Tree::new(vec![(0, 0), (0, 1), (1, 1), (1, 2), (1, 3)]);
        let t32 = Tree::new(vec![(0, 0), (0, 1), (0, 2), (1, 2), (1, 3)]);
        let mut a = labels(&transversal_matroid(&t23, c).unwrap());
        a.sort();
        assert_eq!(a, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
        let mut b = labels(&transversal_matroid(&t32, c).unwrap());
        b.sort();
        assert_eq!(b, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let sub = build_subdivision(&ts, SubdivisionKind::Inner).unwrap();
        assert_eq!(sub.cells.len(), 2);
        assert!(sub.covers_ambient());
    }

    #[test]
    fn single_matching_is_one_basis() {
        let c = GroundConfig::new(2, 2).unwrap();
        let m = transversal_matroid(&Tree::new(vec![(0, 1), (1, 0)]), c).unwrap();
        assert_eq!(m.bases().len(), 1);
        let c = GroundConfig::new(2, 3).unwrap();
        assert_eq!(
            transversal_matroid(&Tree::new(vec![(0, 0), (0, 1), (0, 2)]), c),
            Err(Error::RankDeficient)
        );
    }

    #[test]
    fn rank_one_is_one_cell() {
        let ts = TreeSet::from_edges(1, 4, &[&[(0, 0), (0, 1), (0, 2), (0, 3)]]).unwrap();
        let sub = build_subdivision(&ts, SubdivisionKind::Inner).unwrap();
        assert_eq!(sub.cells.len(), 1);
        assert_eq!(sub.cells[0].matroid, Matroid::uniform(1, 4));
    }

    #[test]
    fn ringel_pointed_cells() {
        let sub = build_subdivision(&catalog::ringel_triangulation(), SubdivisionKind::Pointed).unwrap();
        assert_eq!(sub.cells.len(), 21);
        assert_eq!(sub.ambient, Matroid::uniform(3, 9));
        assert!(sub.covers_ambient());
        for c in &sub.cells {
            assert_eq!(c.matroid.rank(), 3);
            let bases: Vec<Mask> = c.matroid.bases().iter().copied().collect();
            assert!(is_matroid(&bases).unwrap());
        }
        let inner = build_subdivision(&catalog::ringel_triangulation(), SubdivisionKind::Inner).unwrap();
        assert!(inner.covers_ambient());
    }
}
