//! Ground-set conventions, matchings, matroids, sign maps and the
//! Grassmann–Plücker checkers.

pub(crate) mod gp;
pub mod linalg;
mod matching;
mod matroid;
mod sign;
mod signmap;
pub mod subset;
mod vector;

pub use gp::{check_3term_gp, check_full_gp, is_chirotope, three_terms, GpReport, GpWitness};
pub use matching::{sign_of_matching, Matching};
pub use matroid::{is_matroid, Matroid};
pub use sign::{parity, Sign};
pub use signmap::{subset_label, SignMap};
pub use subset::Mask;
pub use vector::SignedVector;

use crate::{Error, Result};

/// Sizes of the row set `R` and the ground set `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundConfig {
    pub d: usize,
    pub n: usize,
}

impl GroundConfig {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d == 0 || d > n {
            return Err(Error::Config(format!("need 1 <= d <= n, got d={d}, n={n}")));
        }
        if n > 63 {
            return Err(Error::Config(format!("n={n} exceeds the bitmask width")));
        }
        Ok(GroundConfig { d, n })
    }
}
