use std::fmt;

use super::sign::{parity, Sign};
use super::subset::{binomial, colex_rank, combinations, mask_of, Mask};

/// Alternating map on d-subsets of `0..n`, stored on sorted subsets as a
/// total table (zeros explicit).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMap {
    n: usize,
    d: usize,
    values: Vec<Sign>,
}

impl SignMap {
    pub fn zeros(n: usize, d: usize) -> SignMap {
        SignMap {
            n,
            d,
            values: vec![Sign::Zero; binomial(n, d) as usize],
        }
    }

    pub fn from_fn(n: usize, d: usize, mut f: impl FnMut(&[usize]) -> Sign) -> SignMap {
        let mut map = SignMap::zeros(n, d);
        for sigma in combinations(n, d) {
            let v = f(&sigma);
            map.set(mask_of(&sigma), v);
        }
        map
    }

    /// Builds a map from `(sorted subset, sign)` pairs; unlisted subsets are zero.
    pub fn from_pairs(n: usize, d: usize, pairs: &[(&[usize], Sign)]) -> SignMap {
        let mut map = SignMap::zeros(n, d);
        for (sigma, s) in pairs {
            assert_eq!(sigma.len(), d);
            map.set_tuple(sigma, *s);
        }
        map
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, mask: Mask) -> Sign {
        debug_assert_eq!(mask.count_ones() as usize, self.d);
        self.values[colex_rank(mask)]
    }

    pub fn set(&mut self, mask: Mask, value: Sign) {
        assert_eq!(mask.count_ones() as usize, self.d, "subset size");
        assert!(mask >> self.n == 0, "subset outside ground set");
        let r = colex_rank(mask);
        self.values[r] = value;
    }

    /// Sets the value on an ordered tuple, storing the sorted value.
    pub fn set_tuple(&mut self, tuple: &[usize], value: Sign) {
        let p = parity(tuple);
        assert!(!p.is_zero(), "repeated element");
        self.set(mask_of(tuple), p * value);
    }

    /// Alternating evaluation on an ordered tuple.
    pub fn eval(&self, tuple: &[usize]) -> Sign {
        debug_assert_eq!(tuple.len(), self.d);
        let p = parity(tuple);
        if p.is_zero() {
            return Sign::Zero;
        }
        p * self.get(mask_of(tuple))
    }

    /// `(sorted subset, value)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, Sign)> + '_ {
        combinations(self.n, self.d).map(move |s| {
            let v = self.get(mask_of(&s));
            (s, v)
        })
    }

    /// Values in lexicographic order of subsets.
    pub fn values_lex(&self) -> Vec<Sign> {
        self.entries().map(|(_, v)| v).collect()
    }

    pub fn support(&self) -> Vec<Mask> {
        self.entries()
            .filter(|(_, v)| !v.is_zero())
            .map(|(s, _)| mask_of(&s))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn negated(&self) -> SignMap {
        SignMap {
            n: self.n,
            d: self.d,
            values: self.values.iter().map(|&v| -v).collect(),
        }
    }

    /// Copy with every subset outside `keep` set to zero.
    pub fn restricted_to(&self, keep: &[Mask]) -> SignMap {
        let mut out = SignMap::zeros(self.n, self.d);
        for &m in keep {
            out.set(m, self.get(m));
        }
        out
    }

    /// Reorientation by `flip` (true = negate the element).
    pub fn reoriented(&self, flip: &[bool]) -> SignMap {
        SignMap::from_fn(self.n, self.d, |s| {
            let neg = s.iter().filter(|&&e| flip[e]).count() % 2 == 1;
            let v = self.get(mask_of(s));
            if neg {
                -v
            } else {
                v
            }
        })
    }

    /// Relabeling: element `e` becomes `perm[e]`.
    pub fn relabeled(&self, perm: &[usize]) -> SignMap {
        let mut out = SignMap::zeros(self.n, self.d);
        for (s, v) in self.entries() {
            let image: Vec<usize> = s.iter().map(|&e| perm[e]).collect();
            out.set_tuple(&image, v);
        }
        out
    }
}

impl fmt::Display for SignMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .map(|(s, v)| format!("({},{})", subset_label(&s, self.n), v))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// 1-based label of a subset: digits concatenated when `n < 10`, otherwise
/// comma separated.
pub fn subset_label(s: &[usize], n: usize) -> String {
    let parts: Vec<String> = s.iter().map(|e| (e + 1).to_string()).collect();
    if n < 10 {
        parts.concat()
    } else {
        parts.join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_extension() {
        let chi = SignMap::from_fn(4, 2, |_| Sign::Plus);
        assert_eq!(chi.eval(&[0, 1]), Sign::Plus);
        assert_eq!(chi.eval(&[1, 0]), Sign::Minus);
        assert_eq!(chi.eval(&[2, 2]), Sign::Zero);
    }

    #[test]
    fn set_tuple_stores_sorted_value() {
        let mut chi = SignMap::zeros(3, 2);
        chi.set_tuple(&[2, 0], Sign::Plus);
        assert_eq!(chi.get(mask_of(&[0, 2])), Sign::Minus);
    }

    #[test]
    fn display_uses_one_based_labels() {
        let chi = SignMap::from_fn(3, 2, |s| if s == [0, 1] { Sign::Minus } else { Sign::Plus });
        assert_eq!(chi.to_string(), "(12,-),(13,+),(23,+)");
    }

    #[test]
    fn relabel_then_inverse_is_identity() {
        let chi = SignMap::from_fn(5, 3, |s| {
            if (s[0] + s[1] * s[2]) % 3 == 0 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        });
        let perm = [3, 0, 4, 1, 2];
        let mut inv = [0; 5];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        assert_eq!(chi.relabeled(&perm).relabeled(&inv), chi);
    }
}
