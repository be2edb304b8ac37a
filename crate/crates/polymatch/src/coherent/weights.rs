use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::core::linalg::det_sign;
use crate::core::subset::{binomial, combinations, mask_of};
use crate::core::{GroundConfig, Matching, SignMap};
use crate::oriented::SignMatrix;
use crate::triangulation::{MatchingField, Tree, TreeSet};
use crate::{Error, Result};

use super::assignment::max_assignment;

/// A `d × n` matrix of exact rational weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightMatrix {
    rows: Vec<Vec<Rational64>>,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<Rational64>>) -> Result<WeightMatrix> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Config("ragged or empty weight matrix".into()));
        }
        GroundConfig::new(rows.len(), n)?;
        Ok(WeightMatrix { rows })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<WeightMatrix> {
        WeightMatrix::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| Rational64::from_integer(v)).collect())
                .collect(),
        )
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational64 {
        self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<Rational64>] {
        &self.rows
    }

    pub fn negated(&self) -> WeightMatrix {
        WeightMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(|v| -v).collect()).collect(),
        }
    }

    /// Integer weights with the same order of matching totals: scaled by the
    /// common denominator and shifted to a minimum of zero.
    fn integral(&self) -> Vec<Vec<i64>> {
        let lcm = self.rows.iter().flatten().fold(1i64, |acc, v| acc.lcm(v.denom()));
        let scaled: Vec<Vec<i64>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| (v * lcm).to_integer()).collect())
            .collect();
        let min = scaled.iter().flatten().copied().min().unwrap_or(0);
        scaled
            .into_iter()
            .map(|r| r.into_iter().map(|v| v - min).collect())
            .collect()
    }
}

/// The weight-maximal matching on every d-subset; fails if some optimum is
/// not unique.
pub fn coherent_field(w: &WeightMatrix) -> Result<MatchingField> {
    let config = GroundConfig::new(w.d(), w.n())?;
    let mut ms = Vec::with_capacity(binomial(config.n, config.d) as usize);
    for sigma in combinations(config.n, config.d) {
        let opt = max_assignment(w.rows(), &sigma);
        if let Some(second) = opt.tie {
            return Err(Error::NonGeneric {
                sigma,
                first: opt.best,
                second,
            });
        }
        ms.push(Matching::new(opt.best)?);
    }
    MatchingField::new(config, ms)
}

/// Largest number of edge subsets searched by [`regular_triangulation`].
const TREE_SEARCH_LIMIT: u64 = 5_000_000;

/// The regular triangulation of `Δ_{d−1} × Δ_{n−1}` induced by `w` (max
/// convention): the spanning trees `T` with potentials `u_r + v_c = w_rc` on
/// `T` and `u_r + v_c > w_rc` off `T`.
pub fn regular_triangulation(w: &WeightMatrix) -> Result<TreeSet> {
    let (d, n) = (w.d(), w.n());
    let config = GroundConfig::new(d, n)?;
    let edges: Vec<(usize, usize)> = (0..d).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
    let size = d + n - 1;
    if binomial(edges.len(), size) > TREE_SEARCH_LIMIT {
        return Err(Error::DeskScaleLimit(format!("tree search over {d}x{n}")));
    }
    let mut trees = Vec::new();
    for pick in combinations(edges.len(), size) {
        let chosen: Vec<(usize, usize)> = pick.iter().map(|&i| edges[i]).collect();
        let Some((u, v)) = potentials(&chosen, w, d, n) else {
            continue;
        };
        let mut tight_elsewhere = false;
        let mut valid = true;
        for &(r, c) in &edges {
            if chosen.contains(&(r, c)) {
                continue;
            }
            let slack = u[r] + v[c] - w.get(r, c);
            if slack < Rational64::zero() {
                valid = false;
                break;
            }
            tight_elsewhere |= slack.is_zero();
        }
        if !valid {
            continue;
        }
        if tight_elsewhere {
            return Err(Error::Config(format!(
                "weights are not generic: the cell of tree {chosen:?} is not a simplex"
            )));
        }
        trees.push(Tree::new(chosen));
    }
    TreeSet::new(config, trees)
}

/// Potentials of a spanning tree, `u_0 = 0`; `None` if `edges` is not a
/// spanning tree.
fn potentials(
    edges: &[(usize, usize)],
    w: &WeightMatrix,
    d: usize,
    n: usize,
) -> Option<(Vec<Rational64>, Vec<Rational64>)> {
    let mut u: Vec<Option<Rational64>> = vec![None; d];
    let mut v: Vec<Option<Rational64>> = vec![None; n];
    u[0] = Some(Rational64::zero());
    let mut progress = true;
    while progress {
        progress = false;
        for &(r, c) in edges {
            match (u[r], v[c]) {
                (Some(a), None) => {
                    v[c] = Some(w.get(r, c) - a);
                    progress = true;
                }
                (None, Some(b)) => {
                    u[r] = Some(w.get(r, c) - b);
                    progress = true;
                }
                _ => {}
            }
        }
    }
    let u: Vec<Rational64> = u.into_iter().collect::<Option<_>>()?;
    let v: Vec<Rational64> = v.into_iter().collect::<Option<_>>()?;
    // d + n − 1 edges reaching every node form a spanning tree.
    Some((u, v))
}

/// The parameter `t = 1 + d!·2^s` for the determinant oracle, where `s`
/// bounds the spread between the heaviest and lightest matching totals on
/// the integral weights.
pub fn oracle_parameter(w: &WeightMatrix) -> BigInt {
    let ints = w.integral();
    let d = w.d();
    let spread: i64 = ints
        .iter()
        .map(|r| r.iter().max().unwrap() - r.iter().min().unwrap())
        .sum();
    let spread = spread as u64;
    let factorial: BigInt = (1..=d).map(BigInt::from).product();
    BigInt::one() + factorial * Pow::pow(BigInt::from(2), spread)
}

/// Signs of the maximal minors of `(A_rc · t^{w_rc})` for a given `t`.
pub fn determinant_signs(w: &WeightMatrix, a: &SignMatrix, t: &BigInt) -> Result<SignMap> {
    if a.d() != w.d() || a.n() != w.n() {
        return Err(Error::Config(format!(
            "sign matrix is {}x{}, weights are {}x{}",
            a.d(),
            a.n(),
            w.d(),
            w.n()
        )));
    }
    let ints = w.integral();
    let entries: Vec<Vec<BigInt>> = (0..w.d())
        .map(|r| {
            (0..w.n())
                .map(|c| {
                    let e = ints[r][c].to_u32().expect("non-negative exponent");
                    BigInt::from(a.get(r, c).to_i8()) * Pow::pow(t, e)
                })
                .collect()
        })
        .collect();
    Ok(SignMap::from_fn(w.n(), w.d(), |sigma| {
        let sub: Vec<Vec<BigInt>> = entries
            .iter()
            .map(|row| sigma.iter().map(|&c| row[c].clone()).collect())
            .collect();
        det_sign(&sub)
    }))
}

/// Determinant signs at the oracle parameter, certified by agreement with
/// the signs at twice that parameter.
pub fn coherent_oracle(w: &WeightMatrix, a: &SignMatrix) -> Result<SignMap> {
    let t = oracle_parameter(w);
    let first = determinant_signs(w, a, &t)?;
    let doubled = determinant_signs(w, a, &(&t * 2))?;
    if first != doubled {
        return Err(Error::Config(
            "determinant signs are not stable under doubling t".into(),
        ));
    }
    Ok(first)
}

/// Column sets whose square submatrix has a unique minimizing matching
/// (min-plus tropical determinant attained once).
pub fn tropically_nonsingular_minors(m: &WeightMatrix) -> Vec<Vec<usize>> {
    let neg = m.negated();
    combinations(m.n(), m.d())
        .filter(|sigma| max_assignment(neg.rows(), sigma).tie.is_none())
        .collect()
}

/// Masks of [`tropically_nonsingular_minors`].
pub fn nonsingular_masks(m: &WeightMatrix) -> Vec<u64> {
    tropically_nonsingular_minors(m).iter().map(|s| mask_of(s)).collect()
}
