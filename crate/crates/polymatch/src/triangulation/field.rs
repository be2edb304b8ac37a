use std::collections::{BTreeMap, BTreeSet};

use super::tree::{perfect_matching, Tree, TreeSet};
use crate::core::subset::{combinations, mask_of, Mask};
use crate::core::{GroundConfig, Matching};
use crate::{Error, Result};

/// One R-saturating matching `M_σ` per d-subset `σ` of `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingField {
    config: GroundConfig,
    matchings: BTreeMap<Mask, Matching>,
}

impl MatchingField {
    /// Requires exactly one matching for every d-subset.
    pub fn new(config: GroundConfig, matchings: Vec<Matching>) -> Result<MatchingField> {
        let mut map = BTreeMap::new();
        for m in matchings {
            if m.d() != config.d {
                return Err(Error::InvalidMatching(format!("{} rows, expected {}", m.d(), config.d)));
            }
            if let Some(&c) = m.cols().iter().find(|&&c| c >= config.n) {
                return Err(Error::OutOfRange {
                    what: "column",
                    value: c,
                    bound: config.n,
                });
            }
            if map.insert(m.support(), m.clone()).is_some() {
                return Err(Error::InvalidMatching(format!(
                    "two matchings on {:?}",
                    m.sorted_support()
                )));
            }
        }
        for sigma in combinations(config.n, config.d) {
            if !map.contains_key(&mask_of(&sigma)) {
                return Err(Error::InvalidMatching(format!("no matching on {sigma:?}")));
            }
        }
        Ok(MatchingField { config, matchings: map })
    }

    /// Field from per-σ column lists, `cols[r]` matched to row `r`.
    pub fn from_cols(d: usize, n: usize, cols: &[&[usize]]) -> Result<MatchingField> {
        let ms = cols
            .iter()
            .map(|c| Matching::new(c.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        MatchingField::new(GroundConfig::new(d, n)?, ms)
    }

    pub fn config(&self) -> GroundConfig {
        self.config
    }

    pub fn get(&self, sigma: Mask) -> Option<&Matching> {
        self.matchings.get(&sigma)
    }

    pub fn get_sorted(&self, sigma: &[usize]) -> Option<&Matching> {
        self.matchings.get(&mask_of(sigma))
    }

    /// Matchings in colex order of their supports.
    pub fn iter(&self) -> impl Iterator<Item = (Mask, &Matching)> {
        self.matchings.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    /// Union of all matching edges.
    pub fn support(&self) -> BTreeSet<(usize, usize)> {
        self.matchings.values().flat_map(|m| m.edges()).collect()
    }
}

/// The matching field carried by a triangulation: for each σ, the perfect
/// matching on `R ⊔ σ` found inside some tree.
pub fn extract_matching_field(ts: &TreeSet) -> Result<MatchingField> {
    let GroundConfig { d, n } = ts.config();
    let all_rows: Mask = (1 << d) - 1;
    let mut out = Vec::new();
    for sigma in combinations(n, d) {
        let smask = mask_of(&sigma);
        let mut found: Option<Vec<(usize, usize)>> = None;
        for t in ts.trees() {
            if let Some(m) = perfect_matching(t.edges(), all_rows, smask) {
                match &found {
                    Some(prev) if *prev != m => {
                        return Err(Error::NotATriangulation(format!("two matchings on {sigma:?}")));
                    }
                    _ => found = Some(m),
                }
            }
        }
        let edges = found.ok_or_else(|| Error::NotATriangulation(format!("no matching on {sigma:?}")))?;
        out.push(Matching::from_edges(d, &edges)?);
    }
    MatchingField::new(ts.config(), out)
}

/// Trees in which every row has degree at least 2.
pub fn restrict_to_inner(ts: &TreeSet) -> TreeSet {
    let d = ts.config().d;
    let inner = ts
        .trees()
        .iter()
        .filter(|t| (0..d).all(|r| t.row_degree(r) >= 2))
        .cloned()
        .collect();
    TreeSet::new(ts.config(), inner).expect("subset of a valid tree set")
}

/// Trees on `R ⊔ Ẽ` with `Ẽ = R̃ ∪ E`: column `i < d` is `ĩ`, column `d+j` is `j`,
/// each tree gaining the edges `(i, ĩ)`.
pub fn pointed_extension(ts: &TreeSet) -> TreeSet {
    let GroundConfig { d, n } = ts.config();
    let config = GroundConfig::new(d, n + d).expect("n+d within bounds");
    let trees = ts
        .trees()
        .iter()
        .map(|t| {
            Tree::new(
                t.edges()
                    .iter()
                    .map(|&(r, c)| (r, c + d))
                    .chain((0..d).map(|i| (i, i)))
                    .collect(),
            )
        })
        .collect();
    TreeSet::new(config, trees).expect("extended edges in range")
}

/// Completes `pointed_extension(ts)` to a triangulation of
/// `Δ_{d−1} × Δ_{n+d−1}` by placing the vertices `(i, ĩ)` first and then the
/// remaining `(i, j̃)`.
pub fn pointed_completion(ts: &TreeSet) -> TreeSet {
    let GroundConfig { d, n } = ts.config();
    let config = GroundConfig::new(d, n + d).expect("n+d within bounds");
    let mut cells: Vec<Tree> = ts
        .trees()
        .iter()
        .map(|t| Tree::new(t.edges().iter().map(|&(r, c)| (r, c + d)).collect()))
        .collect();
    let mut placed: Vec<(usize, usize)> = (0..d).flat_map(|r| (d..d + n).map(move |c| (r, c))).collect();
    let order = (0..d)
        .map(|i| (i, i))
        .chain((0..d).flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j))));
    for p in order {
        cells = place(&cells, &placed, p, d, n + d);
        placed.push(p);
    }
    TreeSet::new(config, cells).expect("placed edges in range")
}

/// The placing triangulation of `Δ_{d−1} × Δ_{n−1}` for an ordering of its
/// vertices `(row, column)`. Points are taken in the given order, except that
/// a point is postponed until it touches an already placed row or column.
pub fn placing_triangulation(config: GroundConfig, order: &[(usize, usize)]) -> Result<TreeSet> {
    let GroundConfig { d, n } = config;
    let mut seen = BTreeSet::new();
    for &(r, c) in order {
        if r >= d || c >= n || !seen.insert((r, c)) {
            return Err(Error::Config(format!(
                "placing order must list each vertex once, bad {:?}",
                (r, c)
            )));
        }
    }
    if seen.len() != d * n {
        return Err(Error::Config("placing order must list every vertex".into()));
    }
    let mut rest: Vec<(usize, usize)> = order.to_vec();
    let first = rest.remove(0);
    let mut cells = vec![Tree::new(vec![first])];
    let mut placed = vec![first];
    while !rest.is_empty() {
        let k = rest
            .iter()
            .position(|&(r, c)| placed.iter().any(|&(a, b)| a == r || b == c))
            .expect("product graph is connected");
        let p = rest.remove(k);
        cells = place(&cells, &placed, p, d, n);
        placed.push(p);
    }
    TreeSet::new(config, cells)
}

/// One placing step; a point on a new row or column is a cone point. For a facet `G−e` with components `A ∋ row(e)` and
/// `B ∋ col(e)`, the affine functional through it is `+1` on edges from `A`-rows
/// to `B`-columns, `−1` on edges from `B`-rows to `A`-columns and `0` otherwise.
fn place(cells: &[Tree], placed: &[(usize, usize)], p: (usize, usize), d: usize, cols: usize) -> Vec<Tree> {
    if !placed.iter().any(|e| e.1 == p.1) || !placed.iter().any(|e| e.0 == p.0) {
        return cells
            .iter()
            .map(|g| {
                let mut edges = g.edges().to_vec();
                edges.push(p);
                Tree::new(edges)
            })
            .collect();
    }
    let mut out = cells.to_vec();
    for g in cells {
        for &e in g.edges() {
            let facet = g.without(e);
            let comp = components(&facet, d, cols);
            let (a, b) = (comp[e.0], comp[d + e.1]);
            let side = |(r, c): (usize, usize)| -> i8 {
                if comp[r] == a && comp[d + c] == b {
                    1
                } else if comp[r] == b && comp[d + c] == a {
                    -1
                } else {
                    0
                }
            };
            if side(p) == -1 && placed.iter().all(|&s| side(s) >= 0) {
                let mut edges = facet.edges().to_vec();
                edges.push(p);
                out.push(Tree::new(edges));
            }
        }
    }
    out
}

fn components(forest: &Tree, d: usize, cols: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..d + cols).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(r, c) in forest.edges() {
        let (x, y) = (find(&mut parent, r), find(&mut parent, d + c));
        parent[x] = y;
    }
    (0..d + cols).map(|v| find(&mut parent, v)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageReport {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

fn union_on(mf: &MatchingField, tau: &[usize]) -> Tree {
    let d = mf.config().d;
    let mut edges = Vec::new();
    for sigma in combinations(tau.len(), d) {
        let s: Vec<usize> = sigma.iter().map(|&i| tau[i]).collect();
        edges.extend(mf.get_sorted(&s).expect("complete field").edges());
    }
    Tree::new(edges)
}

fn is_linkage_tree(tree: &Tree, d: usize, tau: &[usize]) -> bool {
    if tree.len() != 2 * d || (0..d).any(|r| tree.row_degree(r) != 2) {
        return false;
    }
    let relabeled = Tree::new(
        tree.edges()
            .iter()
            .map(|&(r, c)| (r, tau.iter().position(|&t| t == c).expect("column in tau")))
            .collect(),
    );
    relabeled.is_spanning_tree(GroundConfig { d, n: tau.len() })
}

/// For every (d+1)-subset τ, the union of `M_σ`, `σ ⊂ τ`, must be a spanning
/// tree of `R ⊔ τ` with all rows of degree 2.
pub fn is_linkage(mf: &MatchingField) -> LinkageReport {
    let GroundConfig { d, n } = mf.config();
    for tau in combinations(n, d + 1) {
        if !is_linkage_tree(&union_on(mf, &tau), d, &tau) {
            return LinkageReport {
                holds: false,
                witness: Some(tau),
            };
        }
    }
    LinkageReport {
        holds: true,
        witness: None,
    }
}

/// The linkage pd-graph `T_τ`, with columns in `E` labels.
pub fn linkage_pd_graph(mf: &MatchingField, tau: &[usize]) -> Result<Tree> {
    let GroundConfig { d, n } = mf.config();
    let mut tau = tau.to_vec();
    tau.sort_unstable();
    tau.dedup();
    if tau.len() != d + 1 {
        return Err(Error::Config(format!("tau must have {} elements", d + 1)));
    }
    if let Some(&c) = tau.iter().find(|&&c| c >= n) {
        return Err(Error::OutOfRange {
            what: "column",
            value: c,
            bound: n,
        });
    }
    let t = union_on(mf, &tau);
    if !is_linkage_tree(&t, d, &tau) {
        return Err(Error::NotLinkage { tau });
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::core::subset::{elements, mask_of};
    use crate::triangulation::{r_saturating_matching, validate_triangulation};
    use proptest::prelude::*;

    fn diagonal(d: usize, n: usize) -> MatchingField {
        let ms = combinations(n, d).map(|s| Matching::new(s).unwrap()).collect();
        MatchingField::new(GroundConfig::new(d, n).unwrap(), ms).unwrap()
    }

    /// Brute-force oracle: every tree, every injective row→σ assignment.
    fn matchings_by_search(ts: &TreeSet, sigma: &[usize]) -> BTreeSet<Vec<usize>> {
        let d = ts.config().d;
        let mut out = BTreeSet::new();
        for perm in crate::core::subset::permutations(d) {
            let cols: Vec<usize> = perm.iter().map(|&i| sigma[i]).collect();
            if ts.trees().iter().any(|t| (0..d).all(|r| t.contains((r, cols[r])))) {
                out.insert(cols);
            }
        }
        out
    }

    #[test]
    fn two_by_four_gives_diagonal() {
        let mf = extract_matching_field(&catalog::two_by_four_triangulation()).unwrap();
        assert_eq!(mf, diagonal(2, 4));
        assert!(is_linkage(&mf).holds);
    }

    #[test]
    fn single_simplex() {
        let ts = TreeSet::from_edges(2, 2, &[&[(0, 1), (1, 1), (1, 0)]]).unwrap();
        let mf = extract_matching_field(&ts).unwrap();
        assert_eq!(mf.get(0b11).unwrap().cols(), &[1, 0]);
    }

    #[test]
    fn ringel_field_matches_search() {
        let ts = catalog::ringel_triangulation();
        let mf = extract_matching_field(&ts).unwrap();
        assert_eq!(mf.len(), 20);
        for (mask, m) in mf.iter() {
            let found = matchings_by_search(&ts, &elements(mask));
            assert_eq!(found.len(), 1);
            assert!(found.contains(m.cols()));
        }
        assert!(is_linkage(&mf).holds);
        assert_eq!(mf.support().len(), 3 * 4);
    }

    #[test]
    fn inner_trees() {
        let inner = restrict_to_inner(&catalog::two_by_four_triangulation());
        let degrees: Vec<Vec<usize>> = inner
            .trees()
            .iter()
            .map(|t| (0..2).map(|r| t.row_degree(r)).collect())
            .collect();
        assert_eq!(inner.len(), 2);
        assert!(degrees.contains(&vec![2, 3]) && degrees.contains(&vec![3, 2]));
        let ts = TreeSet::from_edges(1, 3, &[&[(0, 0), (0, 1), (0, 2)]]).unwrap();
        assert_eq!(restrict_to_inner(&ts), ts);
        let ringel = restrict_to_inner(&catalog::ringel_triangulation());
        assert!(ringel.len() < 21);
        for t in ringel.trees() {
            assert!(r_saturating_matching(t, ringel.config()).is_some());
        }
    }

    #[test]
    fn pointed_extension_of_prism_gives_ten_matchings() {
        let pointed = pointed_extension(&catalog::prism_triangulation());
        let mf = extract_matching_field(&pointed).unwrap();
        // The drawn field lists R̃ after E; columns 0,1,2 of E drawn as 1,2,3
        // and R̃ as 4,5 (1-based, row 1 first).
        let drawn: [[usize; 2]; 10] = [
            [1, 2],
            [1, 3],
            [4, 1],
            [1, 5],
            [3, 2],
            [4, 2],
            [2, 5],
            [4, 3],
            [3, 5],
            [4, 5],
        ];
        let relabel = |c: usize| if c >= 4 { c - 4 } else { c + 1 };
        for pair in drawn {
            let cols: Vec<usize> = pair.iter().map(|&c| relabel(c)).collect();
            assert_eq!(mf.get(mask_of(&cols)).unwrap().cols(), &cols[..]);
        }
        let ext = extract_matching_field(&pointed_extension(&catalog::two_by_four_triangulation())).unwrap();
        assert_eq!(ext.len(), 15);
        let line = TreeSet::from_edges(1, 2, &[&[(0, 0), (0, 1)]]).unwrap();
        assert_eq!(pointed_extension(&line).trees()[0].len(), 3);
    }

    #[test]
    fn linkage_examples() {
        let r = is_linkage(&catalog::non_linkage_field());
        assert_eq!(r.witness, Some(vec![0, 1, 2]));
        let sz = catalog::non_polyhedral_linkage_field();
        assert!(is_linkage(&sz).holds);
        for tau in combinations(5, 4) {
            assert_eq!(linkage_pd_graph(&sz, &tau).unwrap().len(), 6);
        }
        assert!(linkage_pd_graph(&sz, &[0, 1, 2, 3, 4]).is_err());
        assert_eq!(sz.support().len(), 3 * 3);
        let t = linkage_pd_graph(&diagonal(2, 4), &[0, 1, 2]).unwrap();
        assert_eq!(t.edges(), &[(0, 0), (0, 1), (1, 1), (1, 2)]);
        let star = linkage_pd_graph(&diagonal(1, 3), &[0, 2]).unwrap();
        assert_eq!(star.edges(), &[(0, 0), (0, 2)]);
        assert_eq!(
            linkage_pd_graph(&catalog::non_linkage_field(), &[0, 1, 2]),
            Err(Error::NotLinkage { tau: vec![0, 1, 2] })
        );
    }

    #[test]
    fn equal_omm_pair_differs_on_one_basis() {
        let (a, b) = catalog::equal_omm_pair();
        let diff: Vec<Mask> = a.iter().filter(|(k, m)| b.get(*k) != Some(m)).map(|(k, _)| k).collect();
        assert_eq!(diff, vec![mask_of(&[1, 2, 3])]);
        assert_eq!(a, diagonal(3, 4));
    }

    #[test]
    fn pointed_completion_is_a_triangulation_with_the_pointed_field() {
        for ts in [
            catalog::prism_triangulation(),
            catalog::two_by_four_triangulation(),
            catalog::ringel_triangulation(),
        ] {
            let pointed = pointed_extension(&ts);
            let full = pointed_completion(&ts);
            let r = validate_triangulation(&full);
            assert!(r.holds, "{r:?}");
            for t in pointed.trees() {
                assert!(full.trees().contains(t));
            }
            assert_eq!(
                extract_matching_field(&full).unwrap(),
                extract_matching_field(&pointed).unwrap()
            );
        }
    }

    fn random_triangulation() -> impl Strategy<Value = TreeSet> {
        (1usize..=3, 0usize..=3)
            .prop_flat_map(|(d, extra)| {
                let n = d + extra;
                let pts: Vec<(usize, usize)> = (0..d).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
                (Just(GroundConfig::new(d, n).unwrap()), Just(pts).prop_shuffle())
            })
            .prop_map(|(config, order)| placing_triangulation(config, &order).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn placing_yields_valid_linkage_triangulations(ts in random_triangulation()) {
            let r = validate_triangulation(&ts);
            prop_assert!(r.holds, "{:?}", r);
            let mf = extract_matching_field(&ts).unwrap();
            prop_assert!(is_linkage(&mf).holds);
            let GroundConfig { d, n } = ts.config();
            prop_assert_eq!(mf.support().len(), d * (n - d + 1));
            for t in restrict_to_inner(&ts).trees() {
                prop_assert!(r_saturating_matching(t, ts.config()).is_some());
            }
            let full = pointed_completion(&ts);
            prop_assert!(validate_triangulation(&full).holds);
            prop_assert_eq!(
                extract_matching_field(&full).unwrap(),
                extract_matching_field(&pointed_extension(&ts)).unwrap()
            );
        }
    }
}
