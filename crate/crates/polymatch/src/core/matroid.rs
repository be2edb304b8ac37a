use std::collections::BTreeSet;

use super::subset::{combinations, elements, mask_of, Mask};
use crate::{Error, Result};

/// Matroid on `0..n` given by its bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: BTreeSet<Mask>,
}

impl Matroid {
    /// Checks the basis-exchange axiom.
    pub fn new(n: usize, bases: impl IntoIterator<Item = Mask>) -> Result<Matroid> {
        let bases: BTreeSet<Mask> = bases.into_iter().collect();
        let list: Vec<Mask> = bases.iter().copied().collect();
        if !is_matroid(&list)? {
            return Err(Error::Config("bases violate the exchange axiom".into()));
        }
        if let Some(&b) = list.iter().find(|&&b| b >> n != 0) {
            return Err(Error::OutOfRange {
                what: "element",
                value: 63 - b.leading_zeros() as usize,
                bound: n,
            });
        }
        let rank = list[0].count_ones() as usize;
        Ok(Matroid { n, rank, bases })
    }

    pub fn uniform(d: usize, n: usize) -> Matroid {
        Matroid {
            n,
            rank: d,
            bases: combinations(n, d).map(|s| mask_of(&s)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &BTreeSet<Mask> {
        &self.bases
    }

    pub fn is_basis(&self, b: Mask) -> bool {
        self.bases.contains(&b)
    }
}

/// Basis exchange: for bases `B1`, `B2` and `x ∈ B1 \ B2` some `y ∈ B2 \ B1`
/// makes `B1 - x + y` a basis.
pub fn is_matroid(bases: &[Mask]) -> Result<bool> {
    let Some(&first) = bases.first() else {
        return Err(Error::EmptyBasisSet);
    };
    let rank = first.count_ones();
    if bases.iter().any(|b| b.count_ones() != rank) {
        return Err(Error::MixedRank);
    }
    let set: BTreeSet<Mask> = bases.iter().copied().collect();
    for &b1 in &set {
        for &b2 in &set {
            for x in elements(b1 & !b2) {
                let ok = elements(b2 & !b1)
                    .into_iter()
                    .any(|y| set.contains(&((b1 & !(1 << x)) | (1 << y))));
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
