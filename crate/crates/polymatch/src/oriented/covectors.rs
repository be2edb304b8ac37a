use std::collections::HashSet;

use crate::core::subset::combinations;
use crate::core::{GroundConfig, Sign, SignMap, SignedVector};
use crate::triangulation::{pointed_extension, TreeSet};
use crate::{Error, Result};

use super::circuits::circuit_from_chirotope;
use super::matrix::SignMatrix;

/// Largest ground set for which topes are enumerated.
pub const TOPE_LIMIT: usize = 9;

/// Column rule on `S·A_F`: `0` if a column is empty or mixed, otherwise its
/// common sign.
pub fn psi_raw(s: &[Sign], f: &[(usize, usize)], a: &SignMatrix) -> SignedVector {
    let mut pos = vec![false; a.n()];
    let mut neg = vec![false; a.n()];
    for &(r, c) in f {
        match s[r] * a.get(r, c) {
            Sign::Plus => pos[c] = true,
            Sign::Minus => neg[c] = true,
            Sign::Zero => {}
        }
    }
    SignedVector::new(
        (0..a.n())
            .map(|c| match (pos[c], neg[c]) {
                (true, false) => Sign::Plus,
                (false, true) => Sign::Minus,
                _ => Sign::Zero,
            })
            .collect(),
    )
}

fn check_inputs(config: GroundConfig, s: &[Sign], f: &[(usize, usize)]) -> Result<()> {
    if s.len() != config.d {
        return Err(Error::Config(format!(
            "S has {} entries, expected {}",
            s.len(),
            config.d
        )));
    }
    for &(r, c) in f {
        if r >= config.d || c >= config.n {
            return Err(Error::OutOfRange {
                what: "edge",
                value: if r >= config.d { r } else { c },
                bound: if r >= config.d { config.d } else { config.n },
            });
        }
    }
    Ok(())
}

fn in_some_tree(ts: &TreeSet, f: &[(usize, usize)]) -> bool {
    ts.trees().iter().any(|t| t.contains_all(f))
}

/// `ψ_A(S, F)` for a covector pd-graph `F`: a subgraph of a tree of the
/// triangulation with no isolated column. The result is a covector when `S`
/// is non-zero on every row that `F` uses; a zero there acts like deleting
/// the row's edges, which can isolate columns.
pub fn psi(ts: &TreeSet, s: &[Sign], f: &[(usize, usize)], a: &SignMatrix) -> Result<SignedVector> {
    let config = ts.config();
    check_inputs(config, s, f)?;
    if !in_some_tree(ts, f) {
        return Err(Error::NotCovectorPdGraph(
            "not inside a tree of the triangulation".into(),
        ));
    }
    if let Some(c) = (0..config.n).find(|&c| !f.iter().any(|e| e.1 == c)) {
        return Err(Error::NotCovectorPdGraph(format!("column {c} is isolated")));
    }
    Ok(psi_raw(s, f, a))
}

/// `ψ_{(I|A)}(S, F)` on `Ẽ = R̃ ∪ E` for `F` inside a pointed tree: no column
/// of `E` isolated, `ĩ` isolated only together with row `i`, and `S` non-zero
/// on every non-isolated row.
pub fn psi_pointed(ts: &TreeSet, s: &[Sign], f: &[(usize, usize)], a: &SignMatrix) -> Result<SignedVector> {
    let pointed = pointed_extension(ts);
    let GroundConfig { d, n } = pointed.config();
    check_inputs(pointed.config(), s, f)?;
    if !in_some_tree(&pointed, f) {
        return Err(Error::NotCovectorPdGraph("not inside a pointed tree".into()));
    }
    let touched = |c: usize| f.iter().any(|e| e.1 == c);
    if let Some(c) = (d..n).find(|&c| !touched(c)) {
        return Err(Error::NotCovectorPdGraph(format!("column {c} is isolated")));
    }
    for i in 0..d {
        let row_used = f.iter().any(|e| e.0 == i);
        if !touched(i) && row_used {
            return Err(Error::NotCovectorPdGraph(format!(
                "copy of row {i} isolated but row {i} is not"
            )));
        }
        if row_used && s[i].is_zero() {
            return Err(Error::NotCovectorPdGraph(format!("S vanishes on used row {i}")));
        }
    }
    Ok(psi_raw(s, f, &a.pointed()))
}

/// Topes: full sign vectors (zero exactly on loops) that are not conformal
/// to any signed circuit.
pub fn topes(chi: &SignMap) -> Result<Vec<SignedVector>> {
    let n = chi.n();
    if n > TOPE_LIMIT {
        return Err(Error::DeskScaleLimit(format!("tope enumeration on {n} elements")));
    }
    let circuits: Vec<SignedVector> = combinations(n, chi.d() + 1)
        .map(|tau| circuit_from_chirotope(chi, &tau).expect("valid subset"))
        .filter(|c| !c.is_zero())
        .collect();
    let loops: Vec<bool> = (0..n)
        .map(|e| circuits.iter().any(|c| c.support() == vec![e]))
        .collect();
    let free: Vec<usize> = (0..n).filter(|&e| !loops[e]).collect();
    let mut out = Vec::new();
    for bits in 0u32..1 << free.len() {
        let mut signs = vec![Sign::Zero; n];
        for (k, &e) in free.iter().enumerate() {
            signs[e] = if bits >> k & 1 == 1 { Sign::Minus } else { Sign::Plus };
        }
        let t = SignedVector::new(signs);
        let conformal = circuits.iter().any(|c| {
            let s = c.support();
            s.iter().all(|&e| t.get(e) == c.get(e)) || s.iter().all(|&e| t.get(e) == -c.get(e))
        });
        if !conformal {
            out.push(t);
        }
    }
    Ok(out)
}

/// Mandel's criterion: `X ∘ T` is a tope for every tope `T`.
pub fn is_covector(x: &SignedVector, chi: &SignMap) -> Result<bool> {
    if x.len() != chi.n() {
        return Err(Error::Config("sign vector length differs from the ground set".into()));
    }
    let all = topes(chi)?;
    let set: HashSet<&SignedVector> = all.iter().collect();
    Ok(all.iter().all(|t| set.contains(&x.compose(t))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::oriented::{chirotope, cocircuits_of};
    use crate::triangulation::{extract_matching_field, placing_triangulation, restrict_to_inner};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn signs(v: &[i8]) -> Vec<Sign> {
        v.iter().map(|&x| Sign::from_i64(x as i64)).collect()
    }

    fn covector_example() -> (TreeSet, SignMatrix) {
        (
            catalog::covector_triangulation(),
            SignMatrix::from_rows(&catalog::COVECTOR_SIGNS).unwrap(),
        )
    }

    #[test]
    fn worked_example() {
        let (ts, a) = covector_example();
        let f = [(1, 1), (1, 3), (1, 4), (2, 2), (2, 3), (2, 5)];
        let x = psi_pointed(&ts, &signs(&[0, -1, 1]), &f, &a).unwrap();
        assert_eq!(x, SignedVector::new(signs(&[0, -1, 1, 0, 1, -1])));
        let t = [(0, 0), (1, 1), (1, 3), (1, 4), (2, 2), (2, 5)];
        let y = psi_pointed(&ts, &signs(&[-1, -1, 1]), &t, &a).unwrap();
        assert_eq!(y, SignedVector::new(signs(&[-1, -1, 1, 1, 1, -1])));
        assert!(y.dominates(&x));

        let chi = chirotope(&extract_matching_field(&pointed_extension(&ts)).unwrap(), &a.pointed()).unwrap();
        assert!(is_covector(&x, &chi).unwrap());
        assert!(topes(&chi).unwrap().contains(&y));
        assert!(is_covector(&SignedVector::zero(6), &chi).unwrap());
    }

    #[test]
    fn zero_s_gives_zero() {
        let (ts, a) = covector_example();
        let pointed = pointed_extension(&ts);
        let tree = &pointed.trees()[0];
        assert!(psi_raw(&signs(&[0, 0, 0]), tree.edges(), &a.pointed()).is_zero());
    }

    #[test]
    fn vanishing_s_on_a_used_row_can_leave_the_covectors() {
        let order = [
            (1, 4),
            (2, 2),
            (0, 1),
            (1, 0),
            (0, 4),
            (2, 0),
            (1, 3),
            (0, 2),
            (1, 2),
            (2, 3),
            (0, 0),
            (1, 1),
            (2, 1),
            (0, 3),
            (2, 4),
        ];
        let ts = placing_triangulation(GroundConfig::new(3, 5).unwrap(), &order).unwrap();
        let mut found = false;
        'search: for t in ts.trees() {
            for bits in 0u32..1 << 7 {
                let a = SignMatrix::from_fn(3, 5, |r, c| {
                    if bits >> ((r * 5 + c) % 7) & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                });
                let chi = chirotope(&extract_matching_field(&ts).unwrap(), &a).unwrap();
                for s in [[0i8, 0, 1], [0, 1, 0], [1, 0, 0]] {
                    let x = psi(&ts, &signs(&s), t.edges(), &a).unwrap();
                    if !is_covector(&x, &chi).unwrap() {
                        found = true;
                        break 'search;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn bad_graphs_are_rejected() {
        let (ts, a) = covector_example();
        // Column 0 of E isolated.
        assert!(psi(&ts, &signs(&[1, 1, 1]), &[(0, 1), (1, 2)], &a).is_err());
        // Not inside any tree: the complete graph.
        let all: Vec<(usize, usize)> = (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).collect();
        assert_eq!(
            psi(&ts, &signs(&[1, 1, 1]), &all, &a),
            Err(Error::NotCovectorPdGraph(
                "not inside a tree of the triangulation".into()
            ))
        );
        // Row 0 used but its copy isolated.
        let pointed = pointed_extension(&ts);
        let tree = &pointed.trees()[0];
        let f: Vec<(usize, usize)> = tree.edges().iter().copied().filter(|&e| e != (0, 0)).collect();
        assert!(psi_pointed(&ts, &signs(&[1, 1, 1]), &f, &a).is_err());
        assert!(psi_pointed(&ts, &signs(&[1, 1, 1]), tree.edges(), &a).is_ok());
    }

    #[test]
    fn tope_and_covector_basics() {
        // U_{2,3} realized by three generic vectors in the plane: 6 topes.
        let chi = SignMap::from_fn(3, 2, |_| Sign::Plus);
        let t = topes(&chi).unwrap();
        assert_eq!(t.len(), 6);
        for c in cocircuits_of(&chi) {
            assert!(is_covector(&c, &chi).unwrap());
        }
        // Circuit (+,-,+) of the all-plus map: the conformal full vector is no tope.
        let bad = SignedVector::new(signs(&[1, -1, 1]));
        assert!(!t.contains(&bad));
        assert!(!is_covector(&bad, &chi).unwrap());
        let big = SignMap::from_fn(10, 2, |_| Sign::Plus);
        assert!(matches!(topes(&big), Err(Error::DeskScaleLimit(_))));
    }

    #[test]
    fn inner_tope_graphs_give_topes_on_ringel_subfield() {
        let ts = catalog::ringel_triangulation();
        let a = SignMatrix::from_rows(&catalog::RINGEL_SIGNS).unwrap();
        let chi = chirotope(&extract_matching_field(&ts).unwrap(), &a).unwrap();
        let all: HashSet<SignedVector> = topes(&chi).unwrap().into_iter().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for t in restrict_to_inner(&ts).trees() {
            for _ in 0..8 {
                let f: Vec<(usize, usize)> = (0..6)
                    .map(|c| {
                        let opts: Vec<(usize, usize)> = t.edges().iter().copied().filter(|e| e.1 == c).collect();
                        opts[rng.gen_range(0..opts.len())]
                    })
                    .collect();
                let s: Vec<Sign> = (0..3)
                    .map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus })
                    .collect();
                assert!(all.contains(&psi(&ts, &s, &f, &a).unwrap()));
            }
        }
    }

    fn random_instance() -> impl Strategy<Value = (TreeSet, SignMatrix, u64)> {
        (2usize..=3, 1usize..=3, any::<u64>()).prop_map(|(d, extra, seed)| {
            let n = d + extra;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pts: Vec<(usize, usize)> = (0..d).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
            for i in (1..pts.len()).rev() {
                pts.swap(i, rng.gen_range(0..=i));
            }
            let ts = placing_triangulation(GroundConfig::new(d, n).unwrap(), &pts).unwrap();
            let a = SignMatrix::from_fn(d, n, |_, _| if rng.gen() { Sign::Plus } else { Sign::Minus });
            (ts, a, seed)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn psi_gives_topes_and_covectors((ts, a, seed) in random_instance()) {
            let GroundConfig { d, n } = ts.config();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
            let chi = chirotope(&extract_matching_field(&ts).unwrap(), &a).unwrap();
            let all: HashSet<SignedVector> = topes(&chi).unwrap().into_iter().collect();
            for t in restrict_to_inner(&ts).trees() {
                let f: Vec<(usize, usize)> = (0..n)
                    .map(|c| {
                        let opts: Vec<(usize, usize)> = t.edges().iter().copied().filter(|e| e.1 == c).collect();
                        opts[rng.gen_range(0..opts.len())]
                    })
                    .collect();
                let s: Vec<Sign> = (0..d).map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus }).collect();
                prop_assert!(all.contains(&psi(&ts, &s, &f, &a).unwrap()));
            }
            // Covector pd-graphs: random subgraphs of a tree keeping every column.
            let t = &ts.trees()[rng.gen_range(0..ts.len())];
            let f: Vec<(usize, usize)> = t
                .edges()
                .iter()
                .copied()
                .filter(|e| rng.gen_bool(0.6) || t.col_degree(e.1) == 1)
                .collect();
            let f: Vec<(usize, usize)> = if (0..n).all(|c| f.iter().any(|e| e.1 == c)) { f } else { t.edges().to_vec() };
            // S may vanish only on rows that F does not use.
            let s: Vec<Sign> = (0..d)
                .map(|r| match (f.iter().any(|e| e.0 == r), rng.gen_range(-1..=1)) {
                    (true, 0) => Sign::Plus,
                    (_, v) => Sign::from_i64(v),
                })
                .collect();
            let x = psi(&ts, &s, &f, &a).unwrap();
            prop_assert!(is_covector(&x, &chi).unwrap());
        }
    }
}
