use crate::core::subset::{binomial, elements, Mask};
use crate::core::{GroundConfig, Matching};
use crate::{Error, Result};

/// Edge set of a subgraph of `K_{R,E}`, edges `(row, column)` kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
}

impl Tree {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Tree {
        edges.sort_unstable();
        edges.dedup();
        Tree { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge: (usize, usize)) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    pub fn contains_all(&self, edges: &[(usize, usize)]) -> bool {
        edges.iter().all(|&e| self.contains(e))
    }

    pub fn row_degree(&self, r: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == r).count()
    }

    pub fn col_degree(&self, c: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == c).count()
    }

    pub fn without(&self, edge: (usize, usize)) -> Tree {
        Tree {
            edges: self.edges.iter().copied().filter(|&e| e != edge).collect(),
        }
    }

    /// Spanning tree of `K_{d,n}`: `d+n−1` edges and connected.
    pub fn is_spanning_tree(&self, config: GroundConfig) -> bool {
        let GroundConfig { d, n } = config;
        if self.edges.len() != d + n - 1 {
            return false;
        }
        let mut parent: Vec<usize> = (0..d + n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(r, c) in &self.edges {
            let (a, b) = (find(&mut parent, r), find(&mut parent, d + c));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}

/// The unique perfect matching of a forest on the node set `rows ⊔ cols`,
/// by leaf peeling.
pub fn perfect_matching(edges: &[(usize, usize)], rows: Mask, cols: Mask) -> Option<Vec<(usize, usize)>> {
    if rows.count_ones() != cols.count_ones() {
        return None;
    }
    let mut live: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(r, c)| rows >> r & 1 == 1 && cols >> c & 1 == 1)
        .collect();
    let (mut rows, mut cols) = (rows, cols);
    let mut out = Vec::new();
    while rows != 0 {
        let leaf = elements(rows)
            .into_iter()
            .map(|r| (true, r))
            .chain(elements(cols).into_iter().map(|c| (false, c)))
            .find_map(|(is_row, v)| {
                let incident: Vec<(usize, usize)> = live
                    .iter()
                    .copied()
                    .filter(|&(r, c)| if is_row { r == v } else { c == v })
                    .collect();
                match incident.len() {
                    0 => Some(None),
                    1 => Some(Some(incident[0])),
                    _ => None,
                }
            })?;
        let (r, c) = leaf?;
        out.push((r, c));
        rows &= !(1 << r);
        cols &= !(1 << c);
        live.retain(|&(a, b)| a != r && b != c);
    }
    out.sort_unstable();
    Some(out)
}

/// A matching of a forest covering every row, found by leaf peeling: a row
/// leaf is forced onto its neighbour, a column leaf is discarded.
pub fn r_saturating_matching(tree: &Tree, config: GroundConfig) -> Option<Matching> {
    let GroundConfig { d, n } = config;
    let mut live: Vec<(usize, usize)> = tree.edges().to_vec();
    let mut rows: Vec<bool> = vec![true; d];
    let mut cols: Vec<bool> = vec![true; n];
    let mut cols_of = vec![usize::MAX; d];
    loop {
        if let Some(r) = (0..d).find(|&r| rows[r] && !live.iter().any(|e| e.0 == r)) {
            let _ = r;
            return None;
        }
        let row_leaf = (0..d).find(|&r| rows[r] && live.iter().filter(|e| e.0 == r).count() == 1);
        if let Some(r) = row_leaf {
            let &(_, c) = live.iter().find(|e| e.0 == r).unwrap();
            cols_of[r] = c;
            rows[r] = false;
            cols[c] = false;
            live.retain(|&(a, b)| a != r && b != c);
            continue;
        }
        let col_leaf = (0..n).find(|&c| cols[c] && live.iter().filter(|e| e.1 == c).count() <= 1);
        match col_leaf {
            Some(c) => {
                cols[c] = false;
                live.retain(|&(_, b)| b != c);
            }
            None => break,
        }
    }
    if rows.iter().any(|&r| r) {
        return None;
    }
    Matching::new(cols_of).ok()
}

/// Maximal simplices of a triangulation of `Δ_{d−1} × Δ_{n−1}` as spanning
/// trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSet {
    config: GroundConfig,
    trees: Vec<Tree>,
}

impl TreeSet {
    /// Canonicalizes (sorted edges, sorted trees); rejects out-of-range edges.
    pub fn new(config: GroundConfig, trees: Vec<Tree>) -> Result<TreeSet> {
        for t in &trees {
            for &(r, c) in t.edges() {
                if r >= config.d {
                    return Err(Error::OutOfRange {
                        what: "row",
                        value: r,
                        bound: config.d,
                    });
                }
                if c >= config.n {
                    return Err(Error::OutOfRange {
                        what: "column",
                        value: c,
                        bound: config.n,
                    });
                }
            }
        }
        let mut trees = trees;
        trees.sort();
        Ok(TreeSet { config, trees })
    }

    pub fn from_edges(d: usize, n: usize, trees: &[&[(usize, usize)]]) -> Result<TreeSet> {
        TreeSet::new(
            GroundConfig::new(d, n)?,
            trees.iter().map(|t| Tree::new(t.to_vec())).collect(),
        )
    }

    pub fn config(&self) -> GroundConfig {
        self.config
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Normalized volume `C(d+n−2, d−1)`.
    pub fn expected_count(&self) -> usize {
        let GroundConfig { d, n } = self.config;
        binomial(d + n - 2, d - 1) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::subset::mask_of;

    #[test]
    fn leaf_peeling_finds_the_matching() {
        let edges = [(0, 0), (0, 1), (1, 1), (1, 2)];
        assert_eq!(
            perfect_matching(&edges, 0b11, mask_of(&[0, 2])),
            Some(vec![(0, 0), (1, 2)])
        );
        assert_eq!(
            perfect_matching(&edges, 0b11, mask_of(&[0, 1])),
            Some(vec![(0, 0), (1, 1)])
        );
        assert_eq!(
            perfect_matching(&edges, 0b11, mask_of(&[1, 2])),
            Some(vec![(0, 1), (1, 2)])
        );
        assert_eq!(perfect_matching(&edges, 0b01, mask_of(&[2])), None);
    }

    #[test]
    fn spanning_tree_check() {
        let c = GroundConfig::new(2, 2).unwrap();
        assert!(Tree::new(vec![(0, 0), (0, 1), (1, 1)]).is_spanning_tree(c));
        assert!(!Tree::new(vec![(0, 0), (1, 1), (0, 1), (1, 0)]).is_spanning_tree(c));
        assert!(!Tree::new(vec![(0, 0), (1, 1)]).is_spanning_tree(c));
    }

    #[test]
    fn saturating_matching_in_inner_tree() {
        let c = GroundConfig::new(2, 4).unwrap();
        let t = Tree::new(vec![(0, 0), (0, 1), (1, 1), (1, 2), (1, 3)]);
        let m = r_saturating_matching(&t, c).unwrap();
        assert!(m.edges().iter().all(|&e| t.contains(e)));
        let star = Tree::new(vec![(0, 0), (0, 1), (0, 2), (0, 3), (1, 3)]);
        assert!(r_saturating_matching(&star, c).is_some());
    }

    #[test]
    fn out_of_range_edges_are_rejected() {
        assert!(TreeSet::from_edges(2, 3, &[&[(0, 3)]]).is_err());
        assert!(TreeSet::from_edges(2, 3, &[&[(2, 0)]]).is_err());
    }
}
