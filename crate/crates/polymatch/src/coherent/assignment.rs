use num_rational::Rational64;

use crate::core::subset::permutations;

/// Largest size solved by permutation search.
pub(crate) const EXHAUSTIVE_LIMIT: usize = 6;

/// A maximum-weight assignment of rows `0..d` to the columns `cols`, and a
/// second optimal assignment when the optimum is not unique. Assignments
/// list the column of each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Optimum {
    pub value: Rational64,
    pub best: Vec<usize>,
    pub tie: Option<Vec<usize>>,
}

pub(crate) fn max_assignment(w: &[Vec<Rational64>], cols: &[usize]) -> Optimum {
    if cols.len() <= EXHAUSTIVE_LIMIT {
        by_permutations(w, cols)
    } else {
        by_subsets(w, cols)
    }
}

pub(crate) fn by_permutations(w: &[Vec<Rational64>], cols: &[usize]) -> Optimum {
    let d = cols.len();
    let mut out: Option<Optimum> = None;
    for p in permutations(d) {
        let assign: Vec<usize> = p.iter().map(|&k| cols[k]).collect();
        let value: Rational64 = assign.iter().enumerate().map(|(r, &c)| w[r][c]).sum();
        match &mut out {
            None => {
                out = Some(Optimum {
                    value,
                    best: assign,
                    tie: None,
                })
            }
            Some(o) if value > o.value => {
                *o = Optimum {
                    value,
                    best: assign,
                    tie: None,
                }
            }
            Some(o) if value == o.value && o.tie.is_none() => o.tie = Some(assign),
            Some(_) => {}
        }
    }
    out.expect("at least one permutation")
}

/// Dynamic program over the sets of columns used by the first rows, keeping
/// up to two optimal partial assignments per set.
pub(crate) fn by_subsets(w: &[Vec<Rational64>], cols: &[usize]) -> Optimum {
    let d = cols.len();
    let size = 1usize << d;
    let mut table: Vec<Option<(Rational64, Vec<Vec<usize>>)>> = vec![None; size];
    table[0] = Some((Rational64::from_integer(0), vec![Vec::new()]));
    for mask in 1..size {
        let row = mask.count_ones() as usize - 1;
        let mut best: Option<(Rational64, Vec<Vec<usize>>)> = None;
        for k in (0..d).filter(|k| mask >> k & 1 == 1) {
            let Some((v, partials)) = &table[mask & !(1 << k)] else {
                continue;
            };
            let value = *v + w[row][cols[k]];
            let extended = partials.iter().map(|p| {
                let mut q = p.clone();
                q.push(cols[k]);
                q
            });
            match &mut best {
                Some((bv, list)) if value == *bv => {
                    list.extend(extended);
                    list.truncate(2);
                }
                Some((bv, _)) if value < *bv => {}
                _ => best = Some((value, extended.take(2).collect())),
            }
        }
        table[mask] = best;
    }
    let (value, mut list) = table[size - 1].take().expect("full assignment");
    let best = list.remove(0);
    Optimum {
        value,
        best,
        tie: list.pop(),
    }
}
