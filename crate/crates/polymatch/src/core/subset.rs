//! Subsets of the ground set as bitmasks, with lexicographic enumeration.

pub type Mask = u64;

pub fn mask_of(elems: &[usize]) -> Mask {
    elems.iter().fold(0, |m, &e| m | (1 << e))
}

pub fn elements(mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let e = m.trailing_zeros() as usize;
        out.push(e);
        m &= m - 1;
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Position of a k-subset in colexicographic order.
pub fn colex_rank(mask: Mask) -> usize {
    let mut rank = 0u64;
    for (i, e) in elements(mask).into_iter().enumerate() {
        rank += binomial(e, i + 1);
    }
    rank as usize
}

/// All k-subsets of `0..n` as sorted vectors, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub fn combinations_of(items: &[usize], k: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    combinations(items.len(), k).map(move |idx| idx.iter().map(|&i| items[i]).collect())
}

pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        current: Some((0..n).collect()),
    }
}

pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut p = out.clone();
        let n = p.len();
        if n > 1 {
            let mut i = n - 1;
            while i > 0 && p[i - 1] >= p[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while p[j] <= p[i - 1] {
                    j -= 1;
                }
                p.swap(i - 1, j);
                p[i..].reverse();
                self.current = Some(p);
            }
        }
        Some(out)
    }
}
