use std::collections::BTreeMap;

use crate::core::{is_chirotope, GroundConfig, Sign, SignMap};
use crate::oriented::{sign_map_unchecked, SignMatrix};
use crate::triangulation::{is_linkage, MatchingField};
use crate::{Error, Result};

/// Largest number of free matrix entries enumerated by [`omm`].
pub const FREE_ENTRY_LIMIT: usize = 24;

/// The distinct sign maps induced by a matching field over all sign
/// matrices, each with the first matrix (in enumeration order) inducing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmmSet {
    config: GroundConfig,
    maps: Vec<SignMap>,
    representatives: Vec<SignMatrix>,
}

impl OmmSet {
    pub fn config(&self) -> GroundConfig {
        self.config
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Sign maps sorted by their values in lexicographic subset order.
    pub fn maps(&self) -> &[SignMap] {
        &self.maps
    }

    pub fn representative(&self, i: usize) -> &SignMatrix {
        &self.representatives[i]
    }

    pub fn contains(&self, chi: &SignMap) -> bool {
        self.maps.contains(chi)
    }
}

/// `2^{d(n−d)+1}`.
pub fn expected_count(config: GroundConfig) -> usize {
    1usize << (config.d * (config.n - config.d) + 1)
}

/// All sign maps `χ((M_σ), A)` with `A` ranging over the sign matrices on
/// the support of `mf` (entries off the support fixed to `+`). Checks the
/// count `2^{d(n−d)+1}` when `mf` is linkage.
pub fn omm(mf: &MatchingField) -> Result<OmmSet> {
    let config = mf.config();
    let support: Vec<(usize, usize)> = mf.support().into_iter().collect();
    if support.len() > FREE_ENTRY_LIMIT {
        return Err(Error::DeskScaleLimit(format!(
            "{} free entries (limit {FREE_ENTRY_LIMIT})",
            support.len()
        )));
    }
    let mut found: BTreeMap<Vec<i8>, (SignMap, SignMatrix)> = BTreeMap::new();
    for bits in 0u64..(1 << support.len()) {
        let mut a = SignMatrix::filled(config.d, config.n, Sign::Plus);
        for (i, &(r, c)) in support.iter().enumerate() {
            if bits >> i & 1 == 1 {
                a.set(r, c, Sign::Minus);
            }
        }
        let chi = sign_map_unchecked(mf, &a);
        let key: Vec<i8> = chi.values_lex().iter().map(|s| s.to_i8()).collect();
        found.entry(key).or_insert((chi, a));
    }
    let (maps, representatives) = found.into_values().unzip();
    let out = OmmSet {
        config,
        maps,
        representatives,
    };
    if is_linkage(mf).holds && out.len() != expected_count(config) {
        return Err(Error::CountLaw {
            expected: expected_count(config),
            found: out.len(),
        });
    }
    Ok(out)
}

/// How many maps of an [`OmmSet`] are chirotopes. Polyhedral fields give
/// chirotopes throughout; whether only they do is open, so this is evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChirotopeEvidence {
    pub maps: usize,
    pub chirotopes: usize,
    pub first_failure: Option<usize>,
}

pub fn chirotope_evidence(set: &OmmSet) -> ChirotopeEvidence {
    let flags: Vec<bool> = set.maps().iter().map(is_chirotope).collect();
    ChirotopeEvidence {
        maps: flags.len(),
        chirotopes: flags.iter().filter(|&&f| f).count(),
        first_failure: flags.iter().position(|&f| !f),
    }
}
