use num_bigint::BigInt;

use crate::core::linalg::{det_sign, submatrix};
use crate::core::subset::{combinations, mask_of};
use crate::core::{GroundConfig, SignMap};
use crate::triangulation::{perfect_matching, MatchingField, Tree};
use crate::{Error, Result};

use super::matrix::SignMatrix;

fn check_shape(config: GroundConfig, a: &SignMatrix) -> Result<()> {
    if a.d() != config.d || a.n() != config.n {
        return Err(Error::Config(format!(
            "sign matrix is {}x{}, field is {}x{}",
            a.d(),
            a.n(),
            config.d,
            config.n
        )));
    }
    Ok(())
}

/// `σ ↦ sign(M_σ) · ∏_{e ∈ M_σ} A_e`, without the support check.
pub fn sign_map_unchecked(mf: &MatchingField, a: &SignMatrix) -> SignMap {
    let GroundConfig { d, n } = mf.config();
    SignMap::from_fn(n, d, |sigma| {
        let m = mf.get(mask_of(sigma)).expect("complete field");
        m.edges().iter().fold(m.sign(), |acc, &(r, c)| acc * a.get(r, c))
    })
}

/// The sign map of a matching field and a sign matrix that is non-zero on
/// every matching edge.
pub fn chirotope(mf: &MatchingField, a: &SignMatrix) -> Result<SignMap> {
    check_shape(mf.config(), a)?;
    if let Some(&(row, col)) = mf.support().iter().find(|&&(r, c)| a.get(r, c).is_zero()) {
        return Err(Error::SupportViolation { row, col });
    }
    Ok(sign_map_unchecked(mf, a))
}

/// The chirotope of one tree by its matchings: the matching-field formula on
/// the bases of the transversal matroid, zero elsewhere.
pub fn tree_chirotope_by_matchings(tree: &Tree, config: GroundConfig, a: &SignMatrix) -> Result<SignMap> {
    check_shape(config, a)?;
    let rows = (1u64 << config.d) - 1;
    let mut out = SignMap::zeros(config.n, config.d);
    for sigma in combinations(config.n, config.d) {
        let Some(edges) = perfect_matching(tree.edges(), rows, mask_of(&sigma)) else {
            continue;
        };
        let m = crate::core::Matching::from_edges(config.d, &edges)?;
        let mut s = m.sign();
        for (r, c) in edges {
            let v = a.get(r, c);
            if v.is_zero() {
                return Err(Error::ZeroEntry { row: r, col: c });
            }
            s = s * v;
        }
        out.set(mask_of(&sigma), s);
    }
    Ok(out)
}

/// Signs of the maximal minors of the realization `A(T)`: entry
/// `A_{rc} · magnitude_{rc}` on tree edges, `0` off the tree. Magnitudes
/// default to 1.
pub fn tree_chirotope(
    tree: &Tree,
    config: GroundConfig,
    a: &SignMatrix,
    magnitudes: Option<&[Vec<i64>]>,
) -> Result<SignMap> {
    check_shape(config, a)?;
    let GroundConfig { d, n } = config;
    let mut real = vec![vec![BigInt::from(0); n]; d];
    for &(r, c) in tree.edges() {
        let s = a.get(r, c);
        if s.is_zero() {
            return Err(Error::ZeroEntry { row: r, col: c });
        }
        let mag = magnitudes.map_or(1, |m| m[r][c]);
        if mag <= 0 {
            return Err(Error::Config(format!("magnitude at ({r},{c}) must be positive")));
        }
        real[r][c] = BigInt::from(s.to_i8() as i64 * mag);
    }
    Ok(SignMap::from_fn(n, d, |sigma| det_sign(&submatrix(&real, sigma))))
}
