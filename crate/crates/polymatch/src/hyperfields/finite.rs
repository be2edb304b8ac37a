use crate::{Error, Result};

/// Bitset of element indices; index 0 is the additive identity, 1 the unit.
pub(crate) type ElemSet = u64;

pub(crate) const MAX_ELEMENTS: usize = 64;

/// Operation tables of a finite hyperfield.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FiniteTable {
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub sum: Vec<Vec<ElemSet>>,
}

fn bit(i: usize) -> ElemSet {
    1u64 << i
}

fn members(s: ElemSet) -> impl Iterator<Item = usize> {
    (0..MAX_ELEMENTS).filter(move |&i| s >> i & 1 == 1)
}

impl FiniteTable {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn all(&self) -> ElemSet {
        if self.len() == MAX_ELEMENTS {
            u64::MAX
        } else {
            bit(self.len()) - 1
        }
    }

    pub fn set_sum(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = 0;
        for x in members(a) {
            for y in members(b) {
                out |= self.sum[x][y];
            }
        }
        out
    }

    /// Left-to-right fold of the hypersum, starting from `{0}`.
    pub fn fold(&self, terms: &[usize]) -> ElemSet {
        terms.iter().fold(bit(0), |acc, &t| self.set_sum(acc, bit(t)))
    }

    pub fn prime_field(p: usize) -> Result<FiniteTable> {
        if !is_prime(p) || p > MAX_ELEMENTS {
            return Err(Error::UnknownHyperfield(format!(
                "field({p}): need a prime at most {MAX_ELEMENTS}"
            )));
        }
        Ok(FiniteTable {
            labels: (0..p).map(|i| i.to_string()).collect(),
            mul: (0..p).map(|x| (0..p).map(|y| x * y % p).collect()).collect(),
            neg: (0..p).map(|x| (p - x) % p).collect(),
            sum: (0..p).map(|x| (0..p).map(|y| bit((x + y) % p)).collect()).collect(),
        })
    }

    /// `F_p / μ_k`: cosets of the order-`k` subgroup of the unit group.
    pub fn quotient(p: usize, k: usize) -> Result<FiniteTable> {
        if !is_prime(p) || k == 0 || (p - 1) % k != 0 || p > 4096 {
            return Err(Error::UnknownHyperfield(format!(
                "quotient({p},{k}): need a prime p and k dividing p-1"
            )));
        }
        let m = (p - 1) / k;
        if m + 1 > MAX_ELEMENTS {
            return Err(Error::UnknownHyperfield(format!(
                "quotient({p},{k}) has too many cosets"
            )));
        }
        let g = primitive_root(p);
        let mut log = vec![0usize; p];
        let mut x = 1;
        for e in 0..p - 1 {
            log[x] = e;
            x = x * g % p;
        }
        let coset = |r: usize| if r == 0 { 0 } else { 1 + log[r] % m };
        let mut reps: Vec<Vec<usize>> = vec![vec![0]; m + 1];
        for r in 1..p {
            let c = coset(r);
            if reps[c] == [0] {
                reps[c].clear();
            }
            reps[c].push(r);
        }
        let size = m + 1;
        let mut sum = vec![vec![0; size]; size];
        for a in 0..size {
            for b in 0..size {
                for &x in &reps[a] {
                    for &y in &reps[b] {
                        sum[a][b] |= bit(coset((x + y) % p));
                    }
                }
            }
        }
        Ok(FiniteTable {
            labels: reps
                .iter()
                .enumerate()
                .map(|(i, r)| if i == 0 { "0".into() } else { format!("[{}]", r[0]) })
                .collect(),
            mul: (0..size)
                .map(|a| (0..size).map(|b| coset(reps[a][0] * reps[b][0] % p)).collect())
                .collect(),
            neg: (0..size).map(|a| coset((p - reps[a][0]) % p)).collect(),
            sum,
        })
    }

    /// Zero adjoined to the cyclic group of order `m`, with a caller-supplied
    /// sum of two distinct units.
    fn over_cyclic(m: usize, distinct: impl Fn(usize, usize) -> ElemSet) -> Result<FiniteTable> {
        if m == 0 || m + 1 >= MAX_ELEMENTS {
            return Err(Error::UnknownHyperfield(format!("group order {m} out of range")));
        }
        let size = m + 1;
        let all = if size == MAX_ELEMENTS { u64::MAX } else { bit(size) - 1 };
        let mut sum = vec![vec![0; size]; size];
        for a in 0..size {
            for b in 0..size {
                sum[a][b] = match (a, b) {
                    (0, _) => bit(b),
                    (_, 0) => bit(a),
                    _ if a == b => all,
                    _ => distinct(a, b),
                };
            }
        }
        let labels = (0..size)
            .map(|i| match i {
                0 => "0".to_string(),
                1 => "1".to_string(),
                2 => "g".to_string(),
                _ => format!("g^{}", i - 1),
            })
            .collect();
        Ok(FiniteTable {
            labels,
            mul: (0..size)
                .map(|a| {
                    (0..size)
                        .map(|b| if a == 0 || b == 0 { 0 } else { 1 + (a - 1 + b - 1) % m })
                        .collect()
                })
                .collect(),
            neg: (0..size).collect(),
            sum,
        })
    }

    /// `a ⊞ b = {a, b}` for distinct units.
    pub fn massouros(m: usize) -> Result<FiniteTable> {
        FiniteTable::over_cyclic(m, |a, b| bit(a) | bit(b))
    }

    /// `a ⊞ b = G` for distinct units.
    pub fn weak_group(m: usize) -> Result<FiniteTable> {
        FiniteTable::over_cyclic(m, |_, _| (bit(m + 1) - 1) & !1)
    }

    pub fn krasner() -> FiniteTable {
        FiniteTable {
            labels: vec!["0".into(), "1".into()],
            mul: vec![vec![0, 0], vec![0, 1]],
            neg: vec![0, 1],
            sum: vec![vec![0b01, 0b10], vec![0b10, 0b11]],
        }
    }

    /// Indices: 0, 1 and `2 = −1`.
    pub fn sign() -> FiniteTable {
        FiniteTable {
            labels: vec!["0".into(), "1".into(), "-1".into()],
            mul: vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]],
            neg: vec![0, 2, 1],
            sum: vec![
                vec![0b001, 0b010, 0b100],
                vec![0b010, 0b010, 0b111],
                vec![0b100, 0b111, 0b100],
            ],
        }
    }

    /// `a ⊞̃ b = (a ⊞ b) ∪ {a, b}` for units `a ≠ −b`, and `a ⊞̃ (−a)` everything.
    pub fn inflated(&self) -> FiniteTable {
        let mut out = self.clone();
        let all = self.all();
        for a in 1..self.len() {
            for b in 1..self.len() {
                out.sum[a][b] = if self.neg[a] == b {
                    all
                } else {
                    self.sum[a][b] | bit(a) | bit(b)
                };
            }
        }
        out
    }

    /// Every hyperfield axiom, exhaustively.
    pub fn check_axioms(&self) -> Result<()> {
        let k = self.len();
        let fail = |msg: String| Err(Error::Axiom(msg));
        let l = |i: usize| self.labels[i].as_str();
        if k < 2 {
            return fail("0 = 1".into());
        }
        for x in 0..k {
            if self.sum[0][x] != bit(x) {
                return fail(format!("0 ⊞ {} is not {{{}}}", l(x), l(x)));
            }
            for y in 0..k {
                if self.sum[x][y] == 0 || self.sum[x][y] & !self.all() != 0 {
                    return fail(format!("{} ⊞ {} is empty or out of range", l(x), l(y)));
                }
                if self.sum[x][y] != self.sum[y][x] {
                    return fail(format!("{} ⊞ {} is not commutative", l(x), l(y)));
                }
            }
        }
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    let left = self.set_sum(self.sum[x][y], bit(z));
                    let right = self.set_sum(bit(x), self.sum[y][z]);
                    if left != right {
                        return fail(format!("({} ⊞ {}) ⊞ {} is not associative", l(x), l(y), l(z)));
                    }
                }
            }
        }
        for x in 0..k {
            let inverses: Vec<usize> = (0..k).filter(|&y| self.sum[x][y] & 1 == 1).collect();
            if inverses != [self.neg[x]] {
                return fail(format!("{} has additive inverses {inverses:?}", l(x)));
            }
        }
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    let lhs = self.sum[y][z] >> x & 1 == 1;
                    let rhs = self.sum[x][self.neg[y]] >> z & 1 == 1;
                    if lhs != rhs {
                        return fail(format!("reversibility fails at {}, {}, {}", l(x), l(y), l(z)));
                    }
                }
            }
        }
        for x in 0..k {
            if self.mul[0][x] != 0 || self.mul[x][0] != 0 {
                return fail(format!("0 does not absorb {}", l(x)));
            }
            if self.mul[1][x] != x {
                return fail(format!("1 ⊗ {} ≠ {}", l(x), l(x)));
            }
        }
        for x in 1..k {
            if !(1..k).any(|y| self.mul[x][y] == 1) {
                return fail(format!("{} has no multiplicative inverse", l(x)));
            }
            for y in 1..k {
                if self.mul[x][y] == 0 || self.mul[x][y] != self.mul[y][x] {
                    return fail(format!("{} ⊗ {} breaks the unit group", l(x), l(y)));
                }
                for z in 1..k {
                    if self.mul[self.mul[x][y]][z] != self.mul[x][self.mul[y][z]] {
                        return fail(format!("⊗ is not associative at {}, {}, {}", l(x), l(y), l(z)));
                    }
                }
            }
        }
        for a in 0..k {
            for x in 0..k {
                for y in 0..k {
                    let scaled = members(self.sum[x][y]).fold(0, |acc, s| acc | bit(self.mul[a][s]));
                    if scaled != self.sum[self.mul[a][x]][self.mul[a][y]] {
                        return fail(format!("distributivity fails at {}, {}, {}", l(a), l(x), l(y)));
                    }
                }
            }
        }
        Ok(())
    }

    /// The four equivalent forms of the inflation property, each evaluated
    /// separately; the last one for sums of up to three terms.
    pub fn ip_conditions(&self) -> [bool; 4] {
        let k = self.len();
        let all = self.all();
        let first = self.sum[1][self.neg[1]] == all;
        let second = (1..k).all(|a| self.sum[a][self.neg[a]] == all);
        let third = (1..k).all(|a| (0..k).all(|b| self.sum[a][b] >> a & 1 == 1));
        let mut fourth = true;
        'outer: for len in 1..=3 {
            for terms in tuples(k, len) {
                if terms.iter().all(|&t| t == 0) || self.fold(&terms) & 1 == 0 {
                    continue;
                }
                for extra in 0..k {
                    let mut longer = terms.clone();
                    longer.push(extra);
                    if self.fold(&longer) & 1 == 0 {
                        fourth = false;
                        break 'outer;
                    }
                }
            }
        }
        [first, second, third, fourth]
    }
}

fn tuples(k: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.pow(len as u32);
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let d = code % k;
                code /= k;
                d
            })
            .collect()
    })
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0)
}

fn primitive_root(p: usize) -> usize {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| {
            let mut x = 1;
            for e in 1..p - 1 {
                x = x * g % p;
                if x == 1 && e < p - 1 {
                    return false;
                }
            }
            true
        })
        .expect("prime fields have primitive roots")
}
