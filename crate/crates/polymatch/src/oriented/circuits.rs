use std::collections::BTreeSet;

use crate::core::subset::{combinations, mask_of};
use crate::core::{GroundConfig, Sign, SignMap, SignedVector};
use crate::triangulation::{extract_matching_field, linkage_pd_graph, MatchingField, Tree, TreeSet};
use crate::{Error, Result};

use super::matrix::SignMatrix;

fn sorted_set(items: &[usize], size: usize, n: usize, what: &str) -> Result<Vec<usize>> {
    let mut v = items.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.len() != size {
        return Err(Error::Config(format!("{what} must have {size} distinct elements")));
    }
    if let Some(&e) = v.iter().find(|&&e| e >= n) {
        return Err(Error::OutOfRange {
            what: "element",
            value: e,
            bound: n,
        });
    }
    Ok(v)
}

/// The two signed circuits supported on a (d+1)-set `τ`, from the linkage
/// tree: row `r` joining `u` and `v` in `T_τ` forces `C(v) = −A_{ru} A_{rv} C(u)`.
/// The first vector is positive on `min τ`.
pub fn signed_circuits(mf: &MatchingField, a: &SignMatrix, tau: &[usize]) -> Result<[SignedVector; 2]> {
    let GroundConfig { d, n } = mf.config();
    let tau = sorted_set(tau, d + 1, n, "tau")?;
    let t = linkage_pd_graph(mf, &tau)?;
    let mut signs = vec![Sign::Zero; n];
    signs[tau[0]] = Sign::Plus;
    let links: Vec<(usize, usize, Sign)> = (0..d)
        .map(|r| {
            let ends: Vec<usize> = t.edges().iter().filter(|e| e.0 == r).map(|e| e.1).collect();
            let (u, v) = (ends[0], ends[1]);
            (u, v, -(a.get(r, u) * a.get(r, v)))
        })
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v, label) in &links {
            if signs[u].is_zero() != signs[v].is_zero() {
                if signs[u].is_zero() {
                    signs[u] = signs[v] * label;
                } else {
                    signs[v] = signs[u] * label;
                }
                changed = true;
            }
        }
    }
    let c = SignedVector::new(signs);
    Ok([c.clone(), c.negated()])
}

/// `C(τ_k) = (−1)^k χ(τ ∖ τ_k)` for a sorted (d+1)-set `τ`.
pub fn circuit_from_chirotope(chi: &SignMap, tau: &[usize]) -> Result<SignedVector> {
    let tau = sorted_set(tau, chi.d() + 1, chi.n(), "tau")?;
    let mut signs = vec![Sign::Zero; chi.n()];
    for (k, &e) in tau.iter().enumerate() {
        let rest: Vec<usize> = tau.iter().copied().filter(|&x| x != e).collect();
        let v = chi.get(mask_of(&rest));
        signs[e] = if k % 2 == 0 { v } else { -v };
    }
    Ok(SignedVector::new(signs))
}

/// `D(e) = χ(Y, e)` for a (d−1)-set `Y` (sorted), with `D` zero on `Y`.
pub fn cocircuit_from_chirotope(chi: &SignMap, y: &[usize]) -> Result<SignedVector> {
    let y = sorted_set(y, chi.d() - 1, chi.n(), "hyperplane basis")?;
    let signs = (0..chi.n())
        .map(|e| {
            let mut t = y.clone();
            t.push(e);
            chi.eval(&t)
        })
        .collect();
    Ok(SignedVector::new(signs))
}

/// All signed circuits of a chirotope (both signs), sorted.
pub fn circuits_of(chi: &SignMap) -> Vec<SignedVector> {
    let mut out = BTreeSet::new();
    for tau in combinations(chi.n(), chi.d() + 1) {
        let c = circuit_from_chirotope(chi, &tau).expect("valid subset");
        if !c.is_zero() {
            out.insert(c.negated());
            out.insert(c);
        }
    }
    out.into_iter().collect()
}

/// All signed cocircuits of a chirotope (both signs), sorted.
pub fn cocircuits_of(chi: &SignMap) -> Vec<SignedVector> {
    let mut out = BTreeSet::new();
    for y in combinations(chi.n(), chi.d() - 1) {
        let c = cocircuit_from_chirotope(chi, &y).expect("valid subset");
        if !c.is_zero() {
            out.insert(c.negated());
            out.insert(c);
        }
    }
    out.into_iter().collect()
}

/// The unique tree with every node of `ρ` a leaf and every other column of
/// degree 2, for an (n−d+1)-set `ρ`.
pub fn chow_tree(ts: &TreeSet, rho: &[usize]) -> Result<Tree> {
    let GroundConfig { d, n } = ts.config();
    let rho = sorted_set(rho, n - d + 1, n, "rho")?;
    let found: Vec<&Tree> = ts
        .trees()
        .iter()
        .filter(|t| (0..n).all(|c| t.col_degree(c) == if rho.contains(&c) { 1 } else { 2 }))
        .collect();
    match found.as_slice() {
        [t] => Ok((*t).clone()),
        _ => Err(Error::TriangulationCorrupt(format!(
            "{} trees with the degree pattern of rho {:?}",
            found.len(),
            rho
        ))),
    }
}

/// The two signed cocircuits supported on `ρ`. A row flip `S` makes each
/// column outside `ρ` see opposite signs `S_r A_{re}`; the cocircuit reads
/// `S_r A_{re}` at the leaves `e ∈ ρ`. The first vector uses `S_0 = +`.
pub fn cocircuits(ts: &TreeSet, a: &SignMatrix, rho: &[usize]) -> Result<[SignedVector; 2]> {
    let GroundConfig { d, n } = ts.config();
    let t = chow_tree(ts, rho)?;
    let rho = sorted_set(rho, n - d + 1, n, "rho")?;
    let mut flip = vec![Sign::Zero; d];
    flip[0] = Sign::Plus;
    let links: Vec<(usize, usize, Sign)> = (0..n)
        .filter(|c| !rho.contains(c))
        .map(|e| {
            let rows: Vec<usize> = t.edges().iter().filter(|x| x.1 == e).map(|x| x.0).collect();
            (rows[0], rows[1], -(a.get(rows[0], e) * a.get(rows[1], e)))
        })
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(r1, r2, label) in &links {
            if flip[r1].is_zero() != flip[r2].is_zero() {
                if flip[r1].is_zero() {
                    flip[r1] = flip[r2] * label;
                } else {
                    flip[r2] = flip[r1] * label;
                }
                changed = true;
            }
        }
    }
    let mut signs = vec![Sign::Zero; n];
    for &e in &rho {
        let &(r, _) = t.edges().iter().find(|x| x.1 == e).expect("leaf");
        signs[e] = flip[r] * a.get(r, e);
    }
    let c = SignedVector::new(signs);
    Ok([c.clone(), c.negated()])
}

/// Edges of the Chow tree incident to `ρ`.
pub fn chow_pd_graph(ts: &TreeSet, rho: &[usize]) -> Result<Vec<(usize, usize)>> {
    let t = chow_tree(ts, rho)?;
    let mut rho = rho.to_vec();
    rho.sort_unstable();
    Ok(t.edges().iter().copied().filter(|e| rho.contains(&e.1)).collect())
}

/// The edge set meets every matching of the field, and no proper subset does.
pub fn is_minimal_transversal(mf: &MatchingField, edges: &[(usize, usize)]) -> bool {
    let hits = |set: &[(usize, usize)]| mf.iter().all(|(_, m)| m.edges().iter().any(|e| set.contains(e)));
    hits(edges)
        && (0..edges.len()).all(|skip| {
            let smaller: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &e)| e)
                .collect();
            !hits(&smaller)
        })
}

/// Number of `ρ`-leaf edges of `T_ρ` lying in `T_τ`; at least 2.
pub fn orthogonality_witness(ts: &TreeSet, tau: &[usize], rho: &[usize]) -> Result<usize> {
    let mf = extract_matching_field(ts)?;
    let t_tau = linkage_pd_graph(&mf, tau)?;
    let leaves = chow_pd_graph(ts, rho)?;
    let count = leaves.iter().filter(|&&e| t_tau.contains(e)).count();
    if count < 2 {
        let mut tau = tau.to_vec();
        tau.sort_unstable();
        let mut rho = rho.to_vec();
        rho.sort_unstable();
        return Err(Error::Orthogonality { tau, rho, count });
    }
    Ok(count)
}
