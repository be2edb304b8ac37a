use crate::core::gp::relations;
use crate::core::subset::{binomial, colex_rank, combinations, mask_of};
use crate::core::{is_matroid, parity, GroundConfig, Mask, Sign, SignMap};
use crate::triangulation::MatchingField;
use crate::{Error, Result};

use super::hyperfield::{HElem, Hyperfield};

/// A `d × n` array of hyperfield elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HMatrix {
    d: usize,
    n: usize,
    entries: Vec<HElem>,
}

impl HMatrix {
    pub fn new(rows: Vec<Vec<HElem>>) -> Result<HMatrix> {
        let d = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if d == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Config("ragged or empty matrix".into()));
        }
        Ok(HMatrix {
            d,
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(d: usize, n: usize, mut f: impl FnMut(usize, usize) -> HElem) -> HMatrix {
        HMatrix {
            d,
            n,
            entries: (0..d)
                .flat_map(|r| (0..n).map(move |c| (r, c)))
                .map(|(r, c)| f(r, c))
                .collect(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> HElem {
        self.entries[row * self.n + col]
    }
}

/// A map from sorted d-subsets of `0..n` to hyperfield elements, evaluated
/// alternatingly on ordered tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HSignMap {
    n: usize,
    d: usize,
    values: Vec<HElem>,
}

impl HSignMap {
    pub fn zeros(n: usize, d: usize) -> HSignMap {
        HSignMap {
            n,
            d,
            values: vec![HElem::Zero; binomial(n, d) as usize],
        }
    }

    pub fn from_fn(n: usize, d: usize, mut f: impl FnMut(&[usize]) -> HElem) -> HSignMap {
        let mut out = HSignMap::zeros(n, d);
        for sigma in combinations(n, d) {
            out.set(mask_of(&sigma), f(&sigma));
        }
        out
    }

    /// A sign map as a map into the sign hyperfield.
    pub fn from_sign_map(chi: &SignMap) -> HSignMap {
        HSignMap::from_fn(chi.n(), chi.d(), |s| sign_element(chi.get(mask_of(s))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, mask: Mask) -> HElem {
        self.values[colex_rank(mask)]
    }

    pub fn set(&mut self, mask: Mask, value: HElem) {
        assert_eq!(mask.count_ones() as usize, self.d, "subset size");
        assert!(mask >> self.n == 0, "subset outside ground set");
        self.values[colex_rank(mask)] = value;
    }

    /// Alternating evaluation on an ordered tuple, negating in `h`.
    pub fn eval(&self, tuple: &[usize], h: &Hyperfield) -> HElem {
        match parity(tuple) {
            Sign::Zero => HElem::Zero,
            Sign::Plus => self.get(mask_of(tuple)),
            Sign::Minus => h.neg(&self.get(mask_of(tuple))),
        }
    }

    /// `(sorted subset, value)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, HElem)> + '_ {
        combinations(self.n, self.d).map(move |s| {
            let v = self.get(mask_of(&s));
            (s, v)
        })
    }

    pub fn support(&self) -> Vec<Mask> {
        self.entries()
            .filter(|(_, v)| !v.is_zero())
            .map(|(s, _)| mask_of(&s))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(HElem::is_zero)
    }

    pub fn map(&self, mut f: impl FnMut(&HElem) -> HElem) -> HSignMap {
        HSignMap {
            n: self.n,
            d: self.d,
            values: self.values.iter().map(&mut f).collect(),
        }
    }

    /// `(12,i),(13,1),…` with the labels of `h`.
    pub fn display(&self, h: &Hyperfield) -> String {
        let parts: Vec<String> = self
            .entries()
            .map(|(s, v)| format!("({},{})", crate::core::subset_label(&s, self.n), h.label(&v)))
            .collect();
        parts.join(",")
    }

    pub fn check_domain(&self, h: &Hyperfield) -> Result<()> {
        self.values.iter().try_for_each(|v| h.check_element(v))
    }
}

/// The sign hyperfield's element for a sign.
pub fn sign_element(s: Sign) -> HElem {
    match s {
        Sign::Zero => HElem::Zero,
        Sign::Plus => HElem::Finite(1),
        Sign::Minus => HElem::Finite(2),
    }
}

/// `σ ↦ sign(M_σ) ⊗ ⊗_{e ∈ M_σ} A_e`.
pub fn h_chirotope(mf: &MatchingField, a: &HMatrix, h: &Hyperfield) -> Result<HSignMap> {
    let GroundConfig { d, n } = mf.config();
    if a.d() != d || a.n() != n {
        return Err(Error::Config(format!(
            "matrix is {}x{}, field is {d}x{n}",
            a.d(),
            a.n()
        )));
    }
    for r in 0..d {
        for c in 0..n {
            let v = a.get(r, c);
            h.check_element(&v)?;
            if v.is_zero() {
                return Err(Error::ZeroEntry { row: r, col: c });
            }
        }
    }
    let one = h.one();
    Ok(HSignMap::from_fn(n, d, |sigma| {
        let m = mf.get(mask_of(sigma)).expect("complete field");
        let start = if m.sign() == Sign::Minus { h.neg(&one) } else { one };
        m.edges().iter().fold(start, |acc, &(r, c)| h.mul(&acc, &a.get(r, c)))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HWitness {
    ZeroMap,
    SupportNotMatroid,
    /// `0 ∉ t_1 ⊞ t_2 ⊞ t_3` for `(x1, x2, y1, y2)` and the rest `X`.
    ThreeTerm {
        quad: [usize; 4],
        rest: Vec<usize>,
        terms: [HElem; 3],
    },
    /// `0 ∉ ⊞_k (−1)^k χ(X, y_k) χ(Y ∖ y_k)`.
    Full {
        x: Vec<usize>,
        y: Vec<usize>,
        terms: Vec<HElem>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HMatroidReport {
    pub holds: bool,
    pub witness: Option<HWitness>,
}

impl HMatroidReport {
    fn pass() -> HMatroidReport {
        HMatroidReport {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: HWitness) -> HMatroidReport {
        HMatroidReport {
            holds: false,
            witness: Some(w),
        }
    }
}

/// Weak matroid over `h`: non-zero, matroid support, and `0` in every
/// three-term sum.
pub fn weak_matroid_check(chi: &HSignMap, h: &Hyperfield) -> Result<HMatroidReport> {
    chi.check_domain(h)?;
    let support = chi.support();
    if support.is_empty() {
        return Ok(HMatroidReport::fail(HWitness::ZeroMap));
    }
    if !is_matroid(&support)? {
        return Ok(HMatroidReport::fail(HWitness::SupportNotMatroid));
    }
    for (rest, quad) in relations(chi.n(), chi.d()) {
        let [x1, x2, y1, y2] = quad;
        let ev = |a: usize, b: usize| {
            let mut t = vec![a, b];
            t.extend_from_slice(&rest);
            chi.eval(&t, h)
        };
        let terms = [
            h.mul(&ev(x1, x2), &ev(y1, y2)),
            h.mul(&ev(x1, y1), &ev(y2, x2)),
            h.mul(&ev(x1, y2), &ev(x2, y1)),
        ];
        if !h.sum_contains_zero(&terms) {
            return Ok(HMatroidReport::fail(HWitness::ThreeTerm { quad, rest, terms }));
        }
    }
    Ok(HMatroidReport::pass())
}

/// Strong matroid over `h`: non-zero and `0` in every (d+1)-term sum.
pub fn strong_matroid_check(chi: &HSignMap, h: &Hyperfield) -> Result<HMatroidReport> {
    chi.check_domain(h)?;
    if chi.is_zero() {
        return Ok(HMatroidReport::fail(HWitness::ZeroMap));
    }
    let (n, d) = (chi.n(), chi.d());
    let ys: Vec<Vec<usize>> = combinations(n, d + 1).collect();
    for x in combinations(n, d - 1) {
        for y in &ys {
            let terms: Vec<HElem> = (0..=d)
                .map(|k| {
                    let mut left = x.clone();
                    left.push(y[k]);
                    let right: Vec<usize> = y.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &e)| e).collect();
                    let t = h.mul(&chi.eval(&left, h), &chi.eval(&right, h));
                    if k % 2 == 0 {
                        h.neg(&t)
                    } else {
                        t
                    }
                })
                .collect();
            if !h.sum_contains_zero(&terms) {
                return Ok(HMatroidReport::fail(HWitness::Full { x, y: y.clone(), terms }));
            }
        }
    }
    Ok(HMatroidReport::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{check_full_gp, is_chirotope};
    use crate::hyperfields::builtin;
    use crate::oriented::{chirotope, SignMatrix};
    use crate::triangulation::MatchingField;

    fn diagonal(d: usize, n: usize) -> MatchingField {
        crate::coherent::diagonal_field(d, n).unwrap()
    }

    fn phi_example(h: &Hyperfield) -> HSignMap {
        let (one, i) = (HElem::phase(0, 1), HElem::phase(1, 2));
        let a = HMatrix::new(vec![vec![one; 4], vec![one, i, one, one]]).unwrap();
        h_chirotope(&diagonal(2, 4), &a, h).unwrap()
    }

    #[test]
    fn phi_example_values() {
        let phi = builtin("tropical_phase").unwrap();
        let chi = phi_example(&phi);
        assert_eq!(chi.display(&phi), "(12,i),(13,1),(14,1),(23,1),(24,1),(34,1)");
    }

    #[test]
    fn phi_example_is_weak_over_phi_but_not_over_phase() {
        let phi = builtin("tropical_phase").unwrap();
        let p = builtin("phase").unwrap();
        let chi = phi_example(&phi);
        assert!(weak_matroid_check(&chi, &phi).unwrap().holds);
        let r = weak_matroid_check(&chi, &p).unwrap();
        assert!(!r.holds);
        assert_eq!(
            r.witness,
            Some(HWitness::ThreeTerm {
                quad: [0, 1, 2, 3],
                rest: vec![],
                terms: [HElem::phase(1, 2), HElem::phase(1, 1), HElem::phase(0, 1)],
            })
        );
    }

    #[test]
    fn phi_example_strong_status() {
        let phi = builtin("tropical_phase").unwrap();
        let chi = phi_example(&phi);
        let r = strong_matroid_check(&chi, &phi).unwrap();
        assert!(r.holds);
        assert!(!strong_matroid_check(&chi, &builtin("phase").unwrap()).unwrap().holds);
    }

    #[test]
    fn sign_chirotope_matches_oriented_construction() {
        let mf = diagonal(2, 4);
        let a = SignMatrix::parse(&["+-+-", "+--+"]).unwrap();
        let s = builtin("sign").unwrap();
        let ha = HMatrix::from_fn(2, 4, |r, c| sign_element(a.get(r, c)));
        let chi = h_chirotope(&mf, &ha, &s).unwrap();
        assert_eq!(chi, HSignMap::from_sign_map(&chirotope(&mf, &a).unwrap()));
        assert_eq!(chi.display(&s), "(12,-1),(13,-1),(14,1),(23,1),(24,-1),(34,1)");
        assert!(weak_matroid_check(&chi, &s).unwrap().holds);
    }

    #[test]
    fn krasner_all_ones_is_uniform() {
        let k = builtin("krasner").unwrap();
        let a = HMatrix::from_fn(2, 4, |_, _| k.one());
        let chi = h_chirotope(&diagonal(2, 4), &a, &k).unwrap();
        assert!(chi.entries().all(|(_, v)| v == k.one()));
        assert!(weak_matroid_check(&chi, &k).unwrap().holds);
        assert!(strong_matroid_check(&chi, &k).unwrap().holds);
    }

    #[test]
    fn zero_entries_and_foreign_elements_are_rejected() {
        let s = builtin("sign").unwrap();
        let mut rows = vec![vec![HElem::Finite(1); 4]; 2];
        rows[1][2] = HElem::Zero;
        let a = HMatrix::new(rows).unwrap();
        assert_eq!(
            h_chirotope(&diagonal(2, 4), &a, &s),
            Err(Error::ZeroEntry { row: 1, col: 2 })
        );
        let b = HMatrix::from_fn(2, 4, |_, _| HElem::phase(0, 1));
        assert!(matches!(
            h_chirotope(&diagonal(2, 4), &b, &s),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn zero_map_and_non_matroid_support_fail() {
        let s = builtin("sign").unwrap();
        let r = weak_matroid_check(&HSignMap::zeros(4, 2), &s).unwrap();
        assert_eq!(r.witness, Some(HWitness::ZeroMap));
        let mut chi = HSignMap::zeros(4, 2);
        chi.set(mask_of(&[0, 1]), s.one());
        chi.set(mask_of(&[2, 3]), s.one());
        let r = weak_matroid_check(&chi, &s).unwrap();
        assert_eq!(r.witness, Some(HWitness::SupportNotMatroid));
    }

    /// Min-plus tropical determinant of `−W` with `W_{ij} = i·j`: the
    /// diagonal is the unique maximiser of `W`.
    #[test]
    fn tropical_diagonal_is_a_valuated_matroid() {
        let t = builtin("tropical").unwrap();
        let weights = |r: usize, c: usize| -((r * c) as i64);
        for (d, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
            let a = HMatrix::from_fn(d, n, |r, c| HElem::real(weights(r, c)));
            let chi = h_chirotope(&diagonal(d, n), &a, &t).unwrap();
            for (sigma, v) in chi.entries() {
                let best = crate::core::subset::permutations(d)
                    .map(|p| (0..d).map(|r| weights(r, sigma[p[r]])).sum::<i64>())
                    .min()
                    .unwrap();
                assert_eq!(v, HElem::real(best));
            }
            assert!(weak_matroid_check(&chi, &t).unwrap().holds);
            // Oracle: the minimum of each three-term sum is attained twice.
            for (rest, [x1, x2, y1, y2]) in relations(n, d) {
                let val = |a: usize, b: usize| {
                    let mut s = vec![a, b];
                    s.extend_from_slice(&rest);
                    s.sort();
                    match chi.get(mask_of(&s)) {
                        HElem::Real(v) => *v.numer(),
                        _ => unreachable!(),
                    }
                };
                let mut terms = [
                    val(x1, x2) + val(y1, y2),
                    val(x1, y1) + val(x2, y2),
                    val(x1, y2) + val(x2, y1),
                ];
                terms.sort();
                assert_eq!(terms[0], terms[1]);
            }
        }
    }

    #[test]
    fn tropical_non_valuated_map_fails() {
        let t = builtin("tropical").unwrap();
        let chi = HSignMap::from_fn(4, 2, |s| HElem::real(if s == [0, 1] { -1 } else { 0 }));
        assert!(!weak_matroid_check(&chi, &t).unwrap().holds);
    }

    #[test]
    fn sign_weak_and_strong_agree_with_chirotope_checks() {
        let s = builtin("sign").unwrap();
        for bits in 0u32..729 {
            let mut code = bits;
            let chi = SignMap::from_fn(4, 2, |_| {
                let v = [Sign::Zero, Sign::Plus, Sign::Minus][(code % 3) as usize];
                code /= 3;
                v
            });
            let h = HSignMap::from_sign_map(&chi);
            let weak = weak_matroid_check(&h, &s).unwrap().holds;
            let strong = strong_matroid_check(&h, &s).unwrap().holds;
            assert_eq!(weak, is_chirotope(&chi), "{chi}");
            assert_eq!(strong, !chi.is_zero() && check_full_gp(&chi).holds, "{chi}");
            assert_eq!(weak, strong, "{chi}");
        }
    }
}
