use std::fmt;

use crate::core::Sign;
use crate::{Error, Result};

/// A `d × n` matrix over `{+, −, 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    d: usize,
    n: usize,
    entries: Vec<Sign>,
}

impl SignMatrix {
    pub fn new(d: usize, n: usize, entries: Vec<Sign>) -> Result<SignMatrix> {
        if entries.len() != d * n {
            return Err(Error::Config(format!("{} entries for a {d}x{n} matrix", entries.len())));
        }
        Ok(SignMatrix { d, n, entries })
    }

    pub fn filled(d: usize, n: usize, s: Sign) -> SignMatrix {
        SignMatrix {
            d,
            n,
            entries: vec![s; d * n],
        }
    }

    pub fn from_fn(d: usize, n: usize, mut f: impl FnMut(usize, usize) -> Sign) -> SignMatrix {
        let entries = (0..d)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c))
            .collect();
        SignMatrix { d, n, entries }
    }

    /// Rows of `-1/0/1` values.
    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<SignMatrix> {
        let d = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(d * n);
        for r in rows {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::Config("ragged sign matrix".into()));
            }
            entries.extend(r.iter().map(|&v| Sign::from_i64(v as i64)));
        }
        Ok(SignMatrix { d, n, entries })
    }

    /// Rows written as strings over `+ - 0`.
    pub fn parse(rows: &[&str]) -> Result<SignMatrix> {
        let parsed: Vec<Vec<i8>> = rows
            .iter()
            .map(|r| {
                r.chars()
                    .filter(|c| !c.is_whitespace() && *c != ',')
                    .map(|c| {
                        Sign::parse(c)
                            .map(Sign::to_i8)
                            .ok_or_else(|| Error::Config(format!("bad sign {c:?}")))
                    })
                    .collect::<Result<Vec<i8>>>()
            })
            .collect::<Result<_>>()?;
        SignMatrix::from_rows(&parsed)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Sign {
        self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Sign) {
        self.entries[r * self.n + c] = s;
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        (0..self.d)
            .map(|r| (0..self.n).map(|c| self.get(r, c).to_i8()).collect())
            .collect()
    }

    pub fn has_zero(&self) -> bool {
        self.entries.iter().any(|s| s.is_zero())
    }

    /// `(I_d | A)` on `R̃ ∪ E`.
    pub fn pointed(&self) -> SignMatrix {
        let d = self.d;
        SignMatrix::from_fn(d, d + self.n, |r, c| {
            if c < d {
                if r == c {
                    Sign::Plus
                } else {
                    Sign::Zero
                }
            } else {
                self.get(r, c - d)
            }
        })
    }

    /// `(−Aᵀ | I_n)`: rows `Ē`, columns `R̄ ∪ E`.
    pub fn dual_block(&self) -> SignMatrix {
        let (d, n) = (self.d, self.n);
        SignMatrix::from_fn(n, d + n, |j, c| {
            if c < d {
                -self.get(c, j)
            } else if c - d == j {
                Sign::Plus
            } else {
                Sign::Zero
            }
        })
    }

    /// Row `i` multiplied by `s[i]`.
    pub fn row_scaled(&self, s: &[Sign]) -> SignMatrix {
        SignMatrix::from_fn(self.d, self.n, |r, c| s[r] * self.get(r, c))
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.d {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.n {
                write!(f, "{}", self.get(r, c).symbol())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks() {
        let a = SignMatrix::parse(&["+-", "0+"]).unwrap();
        assert_eq!(a.pointed().to_string(), "+0+-\n0+0+");
        assert_eq!(a.dual_block().to_string(), "-0+0\n+-0+");
        assert_eq!(a.row_scaled(&[Sign::Minus, Sign::Plus]).to_string(), "-+\n0+");
        assert!(SignMatrix::parse(&["+-", "+"]).is_err());
        assert!(SignMatrix::parse(&["+x"]).is_err());
    }
}
