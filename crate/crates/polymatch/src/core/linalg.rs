//! Exact determinants.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::sign::Sign;

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det_bigint(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn det_sign(matrix: &[Vec<BigInt>]) -> Sign {
    let d = det_bigint(matrix);
    if d.is_zero() {
        Sign::Zero
    } else if d.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn det_sign_i64(matrix: &[Vec<i64>]) -> Sign {
    let m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    det_sign(&m)
}

/// Columns `cols` of a `d × n` matrix as a square matrix.
pub fn submatrix<T: Clone>(matrix: &[Vec<T>], cols: &[usize]) -> Vec<Vec<T>> {
    matrix
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect()
}

/// Maximum of `c·x` subject to `A x = b`, `x ≥ 0`, with `b ≥ 0`; `None`
/// when infeasible or unbounded. Dense two-phase simplex with Bland's rule.
#[cfg(test)]
pub(crate) fn simplex_max(
    a: &[Vec<num_rational::BigRational>],
    b: &[num_rational::BigRational],
    c: &[num_rational::BigRational],
) -> Option<num_rational::BigRational> {
    use num_rational::BigRational as Q;
    use num_traits::One;

    let m = a.len();
    let nv = c.len();
    let cols = nv + m;
    let mut t: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (nv..cols).collect();

    fn pivot(t: &mut [Vec<Q>], basis: &mut [usize], r: usize, col: usize) {
        let p = t[r][col].clone();
        for v in t[r].iter_mut() {
            *v = &*v / &p;
        }
        for i in 0..t.len() {
            if i != r && !t[i][col].is_zero() {
                let f = t[i][col].clone();
                let row_r = t[r].clone();
                for (v, w) in t[i].iter_mut().zip(row_r.iter()) {
                    *v = &*v - &f * w;
                }
            }
        }
        basis[r] = col;
    }

    fn run(t: &mut [Vec<Q>], basis: &mut [usize], cost: &[Q], allowed: usize) -> bool {
        let rhs = t.first().map(|r| r.len() - 1).unwrap_or(0);
        loop {
            let entering = (0..allowed).find(|&j| {
                let mut r = cost[j].clone();
                for (i, &bi) in basis.iter().enumerate() {
                    r -= &cost[bi] * &t[i][j];
                }
                r.is_positive()
            });
            let Some(j) = entering else { return true };
            let mut best: Option<(usize, Q)> = None;
            for i in 0..t.len() {
                if t[i][j].is_positive() {
                    let ratio = &t[i][rhs] / &t[i][j];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else { return false };
            pivot(t, basis, r, j);
        }
    }

    let mut phase1 = vec![Q::zero(); cols];
    for v in phase1.iter_mut().skip(nv) {
        *v = -Q::one();
    }
    run(&mut t, &mut basis, &phase1, cols);
    if (0..m).any(|i| basis[i] >= nv && !t[i][cols].is_zero()) {
        return None;
    }
    let mut i = 0;
    while i < t.len() {
        if basis[i] >= nv {
            if let Some(j) = (0..nv).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut basis, i, j);
            } else {
                t.remove(i);
                basis.remove(i);
                continue;
            }
        }
        i += 1;
    }
    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| Q::zero()));
    if !run(&mut t, &mut basis, &cost, nv) {
        return None;
    }
    let mut value = Q::zero();
    for (i, &bi) in basis.iter().enumerate() {
        value += &cost[bi] * &t[i][cols];
    }
    Some(value)
}
