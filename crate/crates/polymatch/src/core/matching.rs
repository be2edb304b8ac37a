use super::sign::{parity, Sign};
use super::subset::{mask_of, Mask};
use crate::{Error, Result};

/// Perfect matching between the rows `0..d` and a d-subset of `E`:
/// row `r` is matched to `cols[r]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    cols: Vec<usize>,
}

impl Matching {
    pub fn new(cols: Vec<usize>) -> Result<Matching> {
        if parity(&cols).is_zero() {
            return Err(Error::InvalidMatching(format!("column repeated in {cols:?}")));
        }
        Ok(Matching { cols })
    }

    /// Matching from `(row, col)` edges; every row must appear once.
    pub fn from_edges(d: usize, edges: &[(usize, usize)]) -> Result<Matching> {
        let mut cols = vec![usize::MAX; d];
        for &(r, c) in edges {
            if r >= d {
                return Err(Error::OutOfRange {
                    what: "row",
                    value: r,
                    bound: d,
                });
            }
            if cols[r] != usize::MAX {
                return Err(Error::InvalidMatching(format!("row {r} matched twice")));
            }
            cols[r] = c;
        }
        if cols.contains(&usize::MAX) {
            return Err(Error::InvalidMatching("unmatched row".into()));
        }
        Matching::new(cols)
    }

    pub fn d(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, row: usize) -> usize {
        self.cols[row]
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.cols.iter().copied().enumerate().collect()
    }

    pub fn support(&self) -> Mask {
        mask_of(&self.cols)
    }

    pub fn sorted_support(&self) -> Vec<usize> {
        let mut s = self.cols.clone();
        s.sort_unstable();
        s
    }

    pub fn sign(&self) -> Sign {
        sign_of_matching(self)
    }
}

/// Parity of `[d] → R → σ → [d]`, with σ ordered as a subset of `E`.
pub fn sign_of_matching(m: &Matching) -> Sign {
    let sorted = m.sorted_support();
    let positions: Vec<usize> = m
        .cols
        .iter()
        .map(|c| sorted.binary_search(c).expect("column in support"))
        .collect();
    parity(&positions)
}
