use std::collections::BTreeMap;

use crate::core::subset::{colex_rank, combinations, mask_of};
use crate::core::{check_3term_gp, Sign, SignMap};
use crate::{Error, Result};

/// Largest ground set handled by [`canonical_form`].
pub const ISO_ELEMENT_LIMIT: usize = 9;

/// The least relabeled, reoriented and possibly negated copy of a sign map,
/// in colex order with `− < 0 < +`, and the moves that produce it:
/// `map == chi.relabeled(&relabel).reoriented(&flip)`, negated if `negate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub map: SignMap,
    pub relabel: Vec<usize>,
    pub flip: Vec<bool>,
    pub negate: bool,
}

/// Linear system over GF(2) in the reorientation bits `x_0 … x_{n−1}` and the
/// negation bit `x_n`, kept in echelon form by lowest set bit.
#[derive(Clone)]
struct Parity {
    rows: Vec<Option<(u32, bool)>>,
}

impl Parity {
    fn new(vars: usize) -> Parity {
        Parity { rows: vec![None; vars] }
    }

    /// Reduces `v · x = rhs`. Returns the forced value of `v · x`, or records
    /// the equation and returns `None`.
    fn constrain(&mut self, mut v: u32, mut rhs: bool) -> Option<bool> {
        let mut acc = false;
        while v != 0 {
            let p = v.trailing_zeros() as usize;
            match self.rows[p] {
                Some((row, r)) => {
                    v ^= row;
                    acc ^= r;
                    rhs ^= r;
                }
                None => {
                    self.rows[p] = Some((v, rhs));
                    return None;
                }
            }
        }
        Some(acc)
    }

    fn solve(&self) -> Vec<bool> {
        let mut x = vec![false; self.rows.len()];
        for p in (0..self.rows.len()).rev() {
            if let Some((row, r)) = self.rows[p] {
                let mut val = r;
                let mut rest = row & !(1 << p);
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    val ^= x[j];
                    rest &= rest - 1;
                }
                x[p] = val;
            }
        }
        x
    }
}

/// For each element, how many non-zero bases containing it can be negated
/// with the result still satisfying the 3-term relations.
fn mutation_counts(chi: &SignMap) -> Vec<usize> {
    let mut counts = vec![0; chi.n()];
    let mut work = chi.clone();
    for m in chi.support() {
        work.set(m, -chi.get(m));
        if check_3term_gp(&work).holds {
            for e in crate::core::subset::elements(m) {
                counts[e] += 1;
            }
        }
        work.set(m, chi.get(m));
    }
    counts
}

struct Search<'a> {
    chi: &'a SignMap,
    n: usize,
    /// `(d−1)`-subsets of `0..k` in colex order, for each `k`.
    lower: Vec<Vec<Vec<usize>>>,
    /// Invariant required of the element receiving each new label.
    slots: Vec<usize>,
    invariant: Vec<usize>,
    best: Option<(Vec<i8>, Vec<usize>, Parity)>,
}

impl Search<'_> {
    fn run(&mut self, perm: &mut Vec<usize>, used: u64, prefix: &mut Vec<i8>, parity: Parity) {
        let k = perm.len();
        if k == self.n {
            self.best = Some((prefix.clone(), perm.clone(), parity));
            return;
        }
        for e in 0..self.n {
            if used >> e & 1 == 1 || self.invariant[e] != self.slots[k] {
                continue;
            }
            let mut par = parity.clone();
            let start = prefix.len();
            perm.push(e);
            for s in &self.lower[k] {
                let tuple: Vec<usize> = s.iter().map(|&i| perm[i]).chain([e]).collect();
                let value = self.chi.eval(&tuple);
                let entry = if value.is_zero() {
                    0
                } else {
                    let v = mask_of(s) as u32 | 1 << k | 1 << self.n;
                    let base = value == Sign::Minus;
                    match par.constrain(v, !base) {
                        None => -1,
                        Some(odd) if odd != base => -1,
                        Some(_) => 1,
                    }
                };
                prefix.push(entry);
            }
            let keep = match &self.best {
                None => true,
                Some((b, _, _)) => prefix[..] <= b[..prefix.len()],
            };
            if keep {
                self.run(perm, used | 1 << e, prefix, par);
            }
            prefix.truncate(start);
            perm.pop();
        }
    }
}

pub fn canonical_form(chi: &SignMap) -> Result<Canonical> {
    let (n, d) = (chi.n(), chi.d());
    if n > ISO_ELEMENT_LIMIT {
        return Err(Error::DeskScaleLimit(format!("n = {n} (limit {ISO_ELEMENT_LIMIT})")));
    }
    let invariant = mutation_counts(chi);
    let mut slots = invariant.clone();
    slots.sort_unstable();
    let lower = (0..n)
        .map(|k| {
            if d == 0 || k + 1 < d {
                return Vec::new();
            }
            let mut subs: Vec<Vec<usize>> = combinations(k, d - 1).collect();
            subs.sort_by_key(|s| colex_rank(mask_of(s)));
            subs
        })
        .collect();
    let mut search = Search {
        chi,
        n,
        lower,
        slots,
        invariant,
        best: None,
    };
    search.run(&mut Vec::with_capacity(n), 0, &mut Vec::new(), Parity::new(n + 1));
    let (_, perm, parity) = search.best.expect("some labeling");
    let x = parity.solve();
    let mut relabel = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        relabel[old] = new;
    }
    let flip = x[..n].to_vec();
    let negate = x[n];
    let mut map = chi.relabeled(&relabel).reoriented(&flip);
    if negate {
        map = map.negated();
    }
    Ok(Canonical {
        map,
        relabel,
        flip,
        negate,
    })
}

/// Equal up to relabeling, reorientation and global sign.
pub fn are_isomorphic(a: &SignMap, b: &SignMap) -> Result<bool> {
    if (a.n(), a.d()) != (b.n(), b.d()) {
        return Ok(false);
    }
    Ok(canonical_form(a)?.map == canonical_form(b)?.map)
}

/// Indices of `maps` grouped by isomorphism class, classes ordered by their
/// first member.
pub fn isomorphism_classes(maps: &[SignMap]) -> Result<Vec<Vec<usize>>> {
    let mut by_form: BTreeMap<(usize, usize, Vec<i8>), usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, chi) in maps.iter().enumerate() {
        let form = canonical_form(chi)?.map;
        let key = (chi.n(), chi.d(), form.values_lex().iter().map(|s| s.to_i8()).collect());
        let slot = *by_form.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(i);
    }
    Ok(classes)
}
