use crate::core::subset::{combinations, permutations};
use crate::core::{parity, GroundConfig, SignMap};
use crate::triangulation::{extract_matching_field, pointed_extension, Tree, TreeSet};
use crate::{Error, Result};

use super::chirotope::chirotope;
use super::matrix::SignMatrix;

/// The pointed chirotopes of both factor orders on the common ground set
/// `R̄ ∪ E` (size d+n): rank d with `(I | A)` and rank n with `(−Aᵀ | I)`.
pub fn dual_pair(ts: &TreeSet, a: &SignMatrix) -> Result<(SignMap, SignMap)> {
    if a.has_zero() {
        return Err(Error::Config("duality needs a sign matrix without zeros".into()));
    }
    let GroundConfig { d, n } = ts.config();
    let first = chirotope(&extract_matching_field(&pointed_extension(ts))?, &a.pointed())?;
    // Rows Ē, columns R̄ (0..d) then E (d..d+n): tree edge (i, j) becomes
    // (j, i), and every row j gains (j, d+j).
    let swapped: Vec<Tree> = ts
        .trees()
        .iter()
        .map(|t| {
            Tree::new(
                t.edges()
                    .iter()
                    .map(|&(i, j)| (j, i))
                    .chain((0..n).map(|j| (j, d + j)))
                    .collect(),
            )
        })
        .collect();
    let swapped = TreeSet::new(GroundConfig::new(n, n + d)?, swapped)?;
    let second = chirotope(&extract_matching_field(&swapped)?, &a.dual_block())?;
    Ok((first, second))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub holds: bool,
    /// An ordering `(x_1, …, x_{d+n})` violating the product identity.
    pub witness: Option<Vec<usize>>,
    pub checked: usize,
}

fn check_orderings(
    chi: &SignMap,
    dual: &SignMap,
    orderings: impl Iterator<Item = Vec<usize>>,
) -> Result<DualityReport> {
    let total = chi.n();
    if dual.n() != total || chi.d() + dual.d() != total {
        return Err(Error::Config(
            "ranks must be complementary on a common ground set".into(),
        ));
    }
    let d = chi.d();
    let mut checked = 0;
    for order in orderings {
        checked += 1;
        if chi.eval(&order[..d]) * dual.eval(&order[d..]) != parity(&order) {
            return Ok(DualityReport {
                holds: false,
                witness: Some(order),
                checked,
            });
        }
    }
    Ok(DualityReport {
        holds: true,
        witness: None,
        checked,
    })
}

/// `χ(x_1..x_d) · χ'(x_{d+1}..x_{d+n}) = sign(x_1..x_{d+n})` over all
/// partitions into two increasing blocks.
pub fn check_duality(chi: &SignMap, dual: &SignMap) -> Result<DualityReport> {
    let (total, d) = (chi.n(), chi.d());
    let orders = combinations(total, d).map(move |first| {
        let mut order = first.clone();
        order.extend((0..total).filter(|e| !first.contains(e)));
        order
    });
    check_orderings(chi, dual, orders)
}

/// The identity over every ordering of the ground set; at most 9 elements.
pub fn check_duality_all_orderings(chi: &SignMap, dual: &SignMap) -> Result<DualityReport> {
    if chi.n() > 9 {
        return Err(Error::DeskScaleLimit(format!("{}! orderings", chi.n())));
    }
    check_orderings(chi, dual, permutations(chi.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::core::{is_chirotope, Sign};

    #[test]
    fn smallest_case() {
        let ts = TreeSet::from_edges(1, 1, &[&[(0, 0)]]).unwrap();
        let a = SignMatrix::parse(&["+"]).unwrap();
        let (x, y) = dual_pair(&ts, &a).unwrap();
        assert_eq!(x.to_string(), "(1,+),(2,+)");
        assert_eq!(y.to_string(), "(1,-),(2,+)");
        let r = check_duality(&x, &y).unwrap();
        assert!(r.holds);
        assert_eq!(r.checked, 2);
        assert!(check_duality_all_orderings(&x, &y).unwrap().holds);
        assert!(!check_duality(&x, &y.negated()).unwrap().holds);
    }

    #[test]
    fn prism_all_matrices() {
        let ts = catalog::prism_triangulation();
        for bits in 0u32..64 {
            let a = SignMatrix::from_fn(2, 3, |r, c| {
                if bits >> (3 * r + c) & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            });
            let (x, y) = dual_pair(&ts, &a).unwrap();
            assert!(is_chirotope(&x) && is_chirotope(&y));
            let r = check_duality(&x, &y).unwrap();
            assert!(r.holds && r.checked == 10, "{r:?}");
            assert!(check_duality_all_orderings(&x, &y).unwrap().holds);
        }
    }

    #[test]
    fn two_by_four_all_plus() {
        let (x, y) = dual_pair(
            &catalog::two_by_four_triangulation(),
            &SignMatrix::filled(2, 4, Sign::Plus),
        )
        .unwrap();
        let r = check_duality(&x, &y).unwrap();
        assert!(r.holds && r.checked == 15);
        assert!(check_duality_all_orderings(&x, &y).unwrap().holds);
    }

    #[test]
    fn zeros_rejected() {
        let ts = catalog::prism_triangulation();
        let a = SignMatrix::parse(&["+0+", "+++"]).unwrap();
        assert!(dual_pair(&ts, &a).is_err());
    }

    mod props {
        use super::*;
        use crate::triangulation::placing_triangulation;
        use proptest::prelude::*;

        fn instance() -> impl Strategy<Value = (TreeSet, SignMatrix)> {
            (1usize..=3, 0usize..=3)
                .prop_filter("d+n <= 8", |(d, extra)| 2 * d + extra <= 8)
                .prop_flat_map(|(d, extra)| {
                    let n = d + extra;
                    let pts: Vec<(usize, usize)> = (0..d).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
                    (
                        Just((d, n)),
                        Just(pts).prop_shuffle(),
                        proptest::collection::vec(any::<bool>(), d * n),
                    )
                })
                .prop_map(|((d, n), order, bits)| {
                    let ts = placing_triangulation(GroundConfig::new(d, n).unwrap(), &order).unwrap();
                    let a = SignMatrix::from_fn(d, n, |r, c| if bits[r * n + c] { Sign::Minus } else { Sign::Plus });
                    (ts, a)
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn identity_over_all_orderings((ts, a) in instance()) {
                let (x, y) = dual_pair(&ts, &a).unwrap();
                prop_assert!(check_duality(&x, &y).unwrap().holds);
                prop_assert!(check_duality_all_orderings(&x, &y).unwrap().holds);
            }
        }
    }
}
