use super::matroid::is_matroid;
use super::sign::Sign;
use super::signmap::SignMap;
use super::subset::combinations;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GpWitness {
    /// `(x1, x2, y1, y2)` with the rest `X` and the three products.
    ThreeTerm {
        quad: [usize; 4],
        rest: Vec<usize>,
        terms: [Sign; 3],
    },
    /// `X` of size d−1, `Y` of size d+1 and the d+1 signed terms.
    Full {
        x: Vec<usize>,
        y: Vec<usize>,
        terms: Vec<Sign>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpReport {
    pub holds: bool,
    pub witness: Option<GpWitness>,
}

impl GpReport {
    fn pass() -> GpReport {
        GpReport {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: GpWitness) -> GpReport {
        GpReport {
            holds: false,
            witness: Some(w),
        }
    }
}

/// Both signs occur, or everything is zero.
pub(crate) fn balanced(terms: &[Sign]) -> bool {
    let pos = terms.contains(&Sign::Plus);
    let neg = terms.contains(&Sign::Minus);
    (pos && neg) || terms.iter().all(|t| t.is_zero())
}

/// The products `χ(x1,x2,X)χ(y1,y2,X)`, `χ(x1,y1,X)χ(y2,x2,X)`,
/// `χ(x1,y2,X)χ(x2,y1,X)`.
pub fn three_terms(chi: &SignMap, q: [usize; 4], rest: &[usize]) -> [Sign; 3] {
    let [x1, x2, y1, y2] = q;
    let ev = |a: usize, b: usize| {
        let mut t = vec![a, b];
        t.extend_from_slice(rest);
        chi.eval(&t)
    };
    [
        ev(x1, x2) * ev(y1, y2),
        ev(x1, y1) * ev(y2, x2),
        ev(x1, y2) * ev(x2, y1),
    ]
}

/// Enumerates `(X, Q)` with `X` a sorted (d−2)-subset and `Q` a sorted
/// 4-subset disjoint from it, in lexicographic order of `(X, Q)`.
pub(crate) fn relations(n: usize, d: usize) -> impl Iterator<Item = (Vec<usize>, [usize; 4])> {
    combinations(n, d.saturating_sub(2))
        .filter(move |_| d >= 2)
        .flat_map(move |x| {
            let free: Vec<usize> = (0..n).filter(|e| !x.contains(e)).collect();
            let quads: Vec<[usize; 4]> = combinations(free.len(), 4)
                .map(|q| [free[q[0]], free[q[1]], free[q[2]], free[q[3]]])
                .collect();
            quads.into_iter().map(move |q| (x.clone(), q))
        })
}

/// 3-term Grassmann–Plücker relations. Sorted 4-sets disjoint from `X`
/// suffice: reordering negates or permutes all three terms together, and
/// overlaps force all terms to vanish or cancel.
pub fn check_3term_gp(chi: &SignMap) -> GpReport {
    for (rest, quad) in relations(chi.n(), chi.d()) {
        let terms = three_terms(chi, quad, &rest);
        if !balanced(&terms) {
            return GpReport::fail(GpWitness::ThreeTerm { quad, rest, terms });
        }
    }
    GpReport::pass()
}

/// All (d+1)-term Grassmann–Plücker relations
/// `Σ_k (−1)^k χ(x_1..x_{d−1}, y_k) χ(y_1..ŷ_k..y_{d+1})`.
pub fn check_full_gp(chi: &SignMap) -> GpReport {
    let (n, d) = (chi.n(), chi.d());
    let xs: Vec<Vec<usize>> = combinations(n, d - 1).collect();
    let ys: Vec<Vec<usize>> = combinations(n, d + 1).collect();
    for x in &xs {
        for y in &ys {
            let terms: Vec<Sign> = (0..=d)
                .map(|k| {
                    let mut left = x.clone();
                    left.push(y[k]);
                    let right: Vec<usize> = y.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &e)| e).collect();
                    let s = chi.eval(&left) * chi.eval(&right);
                    if k % 2 == 0 {
                        -s
                    } else {
                        s
                    }
                })
                .collect();
            if !balanced(&terms) {
                return GpReport::fail(GpWitness::Full {
                    x: x.clone(),
                    y: y.clone(),
                    terms,
                });
            }
        }
    }
    GpReport::pass()
}

/// Non-zero, matroid support, and the 3-term relations.
pub fn is_chirotope(chi: &SignMap) -> bool {
    let support = chi.support();
    if support.is_empty() {
        return false;
    }
    is_matroid(&support).unwrap_or(false) && check_3term_gp(chi).holds
}
