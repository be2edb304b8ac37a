use std::collections::BTreeSet;

use super::cells::Subdivision;
use crate::core::gp::{relations, three_terms};
use crate::core::subset::{elements, mask_of, Mask};
use crate::core::{check_3term_gp, check_full_gp, is_chirotope, GpReport, Matroid, Sign, SignMap};
use crate::{Error, Result};

/// A face of a matroid polytope isomorphic to the octahedron of `U_{2,4}`:
/// all six sets `{two of quad} ∪ rest` are bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctahedronFace {
    pub quad: [usize; 4],
    pub rest: Vec<usize>,
}

impl OctahedronFace {
    /// Vertices in antipodal order: pairs `(0,1)`, `(2,3)`, `(4,5)` are
    /// `{x1x2, y1y2}`, `{x1y1, x2y2}`, `{x1y2, x2y1}`.
    pub fn vertices(&self) -> [Mask; 6] {
        let [x1, x2, y1, y2] = self.quad;
        let rest = mask_of(&self.rest);
        let v = |a: usize, b: usize| rest | 1 << a | 1 << b;
        [v(x1, x2), v(y1, y2), v(x1, y1), v(x2, y2), v(x1, y2), v(x2, y1)]
    }
}

/// Brute force over `(rest, quad)` pairs.
pub fn octahedron_faces(m: &Matroid) -> Vec<OctahedronFace> {
    relations(m.n(), m.rank())
        .map(|(rest, quad)| OctahedronFace { quad, rest })
        .filter(|f| f.vertices().iter().all(|&b| m.is_basis(b)))
        .collect()
}

/// How a subdivision meets an octahedron face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceSplit {
    Trivial,
    /// Two pyramids whose apexes are the antipodal pair `k` (as in
    /// [`OctahedronFace::vertices`]).
    TwoPyramid(usize),
    Other,
}

fn classify(face: &OctahedronFace, sub: &Subdivision) -> FaceSplit {
    let verts = face.vertices();
    let pieces: BTreeSet<u8> = sub
        .cells
        .iter()
        .map(|c| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &b)| c.matroid.is_basis(b))
                .fold(0u8, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let maximal: Vec<u8> = pieces
        .iter()
        .copied()
        .filter(|&p| !pieces.iter().any(|&q| q != p && q & p == p))
        .collect();
    if maximal.contains(&0b111111) {
        return FaceSplit::Trivial;
    }
    for k in 0..3 {
        let (a, b) = (1u8 << (2 * k), 1u8 << (2 * k + 1));
        let expect: BTreeSet<u8> = [0b111111 & !a, 0b111111 & !b].into_iter().collect();
        if maximal.iter().copied().collect::<BTreeSet<u8>>() == expect {
            return FaceSplit::TwoPyramid(k);
        }
    }
    FaceSplit::Other
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceReport {
    pub face: OctahedronFace,
    pub terms: [Sign; 3],
    /// The term whose sign differs from the other two; its antipodal pair is
    /// the apex pair of the forbidden split.
    pub forbidden: usize,
    pub split: FaceSplit,
}

impl FaceReport {
    pub fn is_forbidden(&self) -> bool {
        self.split == FaceSplit::TwoPyramid(self.forbidden)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenReport {
    pub holds: bool,
    /// First face whose induced split is the forbidden one.
    pub witness: Option<FaceReport>,
    /// Index of the first cell on which the restriction of χ is not a chirotope.
    pub failing_cell: Option<usize>,
    pub faces: Vec<FaceReport>,
}

/// Checks every octahedron face of the ambient matroid against the split
/// forbidden by the signs of χ; also restricts χ to every cell.
pub fn forbidden_check(chi: &SignMap, sub: &Subdivision) -> Result<ForbiddenReport> {
    if !is_chirotope(chi) {
        return Err(Error::NotChirotope);
    }
    let mut faces = Vec::new();
    for face in octahedron_faces(&sub.ambient) {
        let terms = three_terms(chi, face.quad, &face.rest);
        let odd: Vec<usize> = (0..3)
            .filter(|&i| terms.iter().filter(|&&t| t == terms[i]).count() == 1)
            .collect();
        if odd.len() != 1 || terms.iter().any(|t| t.is_zero()) {
            return Err(Error::OctahedronTie {
                quad: face.quad,
                rest: face.rest,
            });
        }
        let split = classify(&face, sub);
        faces.push(FaceReport {
            face,
            terms,
            forbidden: odd[0],
            split,
        });
    }
    let witness = faces.iter().find(|f| f.is_forbidden()).cloned();
    let failing_cell = sub.cells.iter().position(|c| {
        let keep: Vec<Mask> = c.matroid.bases().iter().copied().collect();
        !is_chirotope(&chi.restricted_to(&keep))
    });
    Ok(ForbiddenReport {
        holds: witness.is_none(),
        witness,
        failing_cell,
        faces,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingReport {
    pub cells: Vec<bool>,
    pub glued: SignMap,
    pub glued_3term: GpReport,
    pub glued_full: GpReport,
}

impl GluingReport {
    pub fn holds(&self) -> bool {
        self.cells.iter().all(|&c| c) && self.glued_full.holds
    }
}

/// Checks each local sign map, glues them and checks the glued map.
pub fn local_to_global_verify(cells: &[SignMap]) -> Result<GluingReport> {
    let first = cells.first().ok_or_else(|| Error::Config("no cells to glue".into()))?;
    let (n, d) = (first.n(), first.d());
    let mut glued = SignMap::zeros(n, d);
    for c in cells {
        if c.n() != n || c.d() != d {
            return Err(Error::Config("cells on different ground sets".into()));
        }
        for b in c.support() {
            let v = c.get(b);
            let prev = glued.get(b);
            if !prev.is_zero() && prev != v {
                return Err(Error::InconsistentGluing { basis: elements(b) });
            }
            glued.set(b, v);
        }
    }
    Ok(GluingReport {
        cells: cells.iter().map(is_chirotope).collect(),
        glued_3term: check_3term_gp(&glued),
        glued_full: check_full_gp(&glued),
        glued,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::core::subset::combinations;
    use crate::subdivision::{build_subdivision, SubdivisionKind};

    fn chi24(signs: [i64; 6]) -> SignMap {
        let pairs: Vec<(Vec<usize>, Sign)> = combinations(4, 2)
            .zip(signs)
            .map(|(s, v)| (s, Sign::from_i64(v)))
            .collect();
        let refs: Vec<(&[usize], Sign)> = pairs.iter().map(|(s, v)| (s.as_slice(), *v)).collect();
        SignMap::from_pairs(4, 2, &refs)
    }

    #[test]
    fn face_counts() {
        assert_eq!(
            octahedron_faces(&Matroid::uniform(2, 4)),
            vec![OctahedronFace {
                quad: [0, 1, 2, 3],
                rest: vec![]
            }]
        );
        let pyramid = Matroid::new(4, [0b0011, 0b0101, 0b1001, 0b0110, 0b1010]).unwrap();
        assert!(octahedron_faces(&pyramid).is_empty());
        assert_eq!(octahedron_faces(&Matroid::uniform(3, 5)).len(), 5);
        assert_eq!(octahedron_faces(&Matroid::uniform(3, 6)).len(), 6 * 5);
    }

    #[test]
    fn two_by_four_is_split_at_the_first_pair() {
        let sub = build_subdivision(&catalog::two_by_four_triangulation(), SubdivisionKind::Inner).unwrap();
        let face = &octahedron_faces(&sub.ambient)[0];
        assert_eq!(classify(face, &sub), FaceSplit::TwoPyramid(0));
    }

    #[test]
    fn allowed_and_forbidden_signs() {
        let sub = build_subdivision(&catalog::two_by_four_triangulation(), SubdivisionKind::Inner).unwrap();
        let good = chi24([-1, -1, 1, 1, -1, 1]);
        let r = forbidden_check(&good, &sub).unwrap();
        assert!(r.holds && r.failing_cell.is_none());
        assert_eq!(r.faces[0].forbidden, 2);

        let bad = chi24([1, 1, 1, 1, -1, -1]);
        let r = forbidden_check(&bad, &sub).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.forbidden, 0);
        assert_eq!(w.terms, [Sign::Minus, Sign::Plus, Sign::Plus]);
        assert!(r.failing_cell.is_some());
        let upper = sub.cells.iter().find(|c| c.matroid.is_basis(0b0011)).unwrap();
        let keep: Vec<Mask> = upper.matroid.bases().iter().copied().collect();
        assert!(!is_chirotope(&bad.restricted_to(&keep)));

        let trivial = Subdivision::trivial(Matroid::uniform(2, 4));
        assert!(forbidden_check(&bad, &trivial).unwrap().holds);
        assert_eq!(
            forbidden_check(&chi24([1, -1, 1, 1, 1, 1]), &sub),
            Err(Error::NotChirotope)
        );
    }

    #[test]
    fn gluing() {
        let sub = build_subdivision(&catalog::two_by_four_triangulation(), SubdivisionKind::Inner).unwrap();
        let chi = chi24([-1, -1, 1, 1, -1, 1]);
        let parts: Vec<SignMap> = sub
            .cells
            .iter()
            .map(|c| chi.restricted_to(&c.matroid.bases().iter().copied().collect::<Vec<_>>()))
            .collect();
        let r = local_to_global_verify(&parts).unwrap();
        assert!(r.holds() && r.glued_3term.holds);
        assert_eq!(r.glued, chi);

        let single = local_to_global_verify(std::slice::from_ref(&chi)).unwrap();
        assert_eq!(single.cells, vec![is_chirotope(&chi)]);

        // Two triangulations of Δ₁×Δ₁ use different matchings on {0,1}; with
        // an all-plus matrix their chirotopes disagree there.
        let plus = SignMap::from_pairs(2, 2, &[(&[0, 1], Sign::Plus)]);
        assert_eq!(
            local_to_global_verify(&[plus.clone(), plus.negated()]),
            Err(Error::InconsistentGluing { basis: vec![0, 1] })
        );
    }

    #[test]
    fn random_pairs_hit_both_outcomes() {
        use crate::core::GroundConfig;
        use crate::oriented::{chirotope, SignMatrix};
        use crate::triangulation::{extract_matching_field, placing_triangulation};
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let (mut pass, mut fail) = (0, 0);
        for _ in 0..60 {
            let (d, n) = (2, 5);
            let mut pts: Vec<(usize, usize)> = (0..d).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
            pts.shuffle(&mut rng);
            let ts = placing_triangulation(GroundConfig::new(d, n).unwrap(), &pts).unwrap();
            pts.shuffle(&mut rng);
            let other = placing_triangulation(GroundConfig::new(d, n).unwrap(), &pts).unwrap();
            let a = SignMatrix::from_fn(d, n, |_, _| if rng.gen() { Sign::Minus } else { Sign::Plus });
            let sub = build_subdivision(&ts, SubdivisionKind::Inner).unwrap();
            let chi = chirotope(&extract_matching_field(&other).unwrap(), &a).unwrap();
            let r = forbidden_check(&chi, &sub).unwrap();
            assert_eq!(r.holds, r.failing_cell.is_none());
            if r.holds {
                pass += 1;
            } else {
                fail += 1;
            }
        }
        assert!(pass > 0 && fail > 0, "{pass} {fail}");
    }

    mod props {
        use super::*;
        use crate::core::GroundConfig;
        use crate::oriented::{chirotope, SignMatrix};
        use crate::triangulation::{extract_matching_field, placing_triangulation, TreeSet};
        use proptest::prelude::*;

        fn triangulation(d: usize, n: usize) -> impl Strategy<Value = TreeSet> {
            let pts: Vec<(usize, usize)> = (0..d).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
            Just(pts)
                .prop_shuffle()
                .prop_map(move |o| placing_triangulation(GroundConfig::new(d, n).unwrap(), &o).unwrap())
        }

        fn pair() -> impl Strategy<Value = (TreeSet, TreeSet, SignMatrix)> {
            (2usize..=3, 2usize..=4)
                .prop_flat_map(|(d, extra)| {
                    let n = d + extra;
                    (
                        triangulation(d, n),
                        triangulation(d, n),
                        proptest::collection::vec(any::<bool>(), d * n),
                    )
                })
                .prop_map(|(s, t, bits)| {
                    let GroundConfig { d, n } = s.config();
                    let a = SignMatrix::from_fn(d, n, |r, c| if bits[r * n + c] { Sign::Minus } else { Sign::Plus });
                    (s, t, a)
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn cells_glue_to_a_chirotope((ts, _other, a) in pair()) {
                let sub = build_subdivision(&ts, SubdivisionKind::Inner).unwrap();
                let chi = chirotope(&extract_matching_field(&ts).unwrap(), &a).unwrap();
                let mut parts = Vec::new();
                for c in &sub.cells {
                    let bases: Vec<Mask> = c.matroid.bases().iter().copied().collect();
                    prop_assert!(crate::core::is_matroid(&bases).unwrap());
                    parts.push(chi.restricted_to(&bases));
                }
                let r = local_to_global_verify(&parts).unwrap();
                prop_assert!(r.holds());
                prop_assert!(check_full_gp(&chi).holds);
                prop_assert!(sub.covers_ambient());
            }

            #[test]
            fn forbidden_faces_match_failing_cells((ts, other, a) in pair()) {
                let sub = build_subdivision(&ts, SubdivisionKind::Inner).unwrap();
                let chi = chirotope(&extract_matching_field(&other).unwrap(), &a).unwrap();
                let r = forbidden_check(&chi, &sub).unwrap();
                prop_assert_eq!(r.holds, r.failing_cell.is_none());
                for f in &r.faces {
                    prop_assert!(f.split != FaceSplit::Other);
                }
            }
        }
    }
}
