use std::fmt;

use super::sign::Sign;

/// Element of `{+,−,0}^E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedVector {
    signs: Vec<Sign>,
}

impl SignedVector {
    pub fn new(signs: Vec<Sign>) -> SignedVector {
        SignedVector { signs }
    }

    pub fn zero(n: usize) -> SignedVector {
        SignedVector {
            signs: vec![Sign::Zero; n],
        }
    }

    pub fn parse(s: &str) -> Option<SignedVector> {
        let signs: Option<Vec<Sign>> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(Sign::parse)
            .collect();
        signs.map(SignedVector::new)
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn get(&self, e: usize) -> Sign {
        self.signs[e]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| !self.signs[e].is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.signs.iter().all(|s| s.is_zero())
    }

    /// `(X∘Y)_e = X_e` if `X_e ≠ 0`, else `Y_e`.
    pub fn compose(&self, other: &SignedVector) -> SignedVector {
        SignedVector::new(
            self.signs
                .iter()
                .zip(&other.signs)
                .map(|(&x, &y)| if x.is_zero() { y } else { x })
                .collect(),
        )
    }

    pub fn negated(&self) -> SignedVector {
        SignedVector::new(self.signs.iter().map(|&s| -s).collect())
    }

    /// `X ≥ Y` in the conformal order: `Y_e ≠ 0` implies `X_e = Y_e`.
    pub fn dominates(&self, other: &SignedVector) -> bool {
        self.signs
            .iter()
            .zip(&other.signs)
            .all(|(&x, &y)| y.is_zero() || x == y)
    }

    /// Oriented-matroid orthogonality: the products `X_e Y_e` are all zero or
    /// take both signs.
    pub fn is_orthogonal(&self, other: &SignedVector) -> bool {
        let prods: Vec<Sign> = self.signs.iter().zip(&other.signs).map(|(&x, &y)| x * y).collect();
        super::gp::balanced(&prods)
    }
}

impl fmt::Display for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.signs.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
