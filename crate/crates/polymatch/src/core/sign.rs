use std::fmt;
use std::ops::{Mul, Neg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Sign {
        match v.signum() {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => Sign::Zero,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn parse(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i64((self.to_i8() * rhs.to_i8()) as i64)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign::from_i64(-(self.to_i8() as i64))
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Sign of the permutation that sorts `seq`; zero on a repeated entry.
pub fn parity(seq: &[usize]) -> Sign {
    let mut s = Sign::Plus;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return Sign::Zero;
            }
            if seq[i] > seq[j] {
                s = -s;
            }
        }
    }
    s
}
