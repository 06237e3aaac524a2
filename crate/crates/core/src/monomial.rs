//! Dense exponent vectors and the monomial orders used throughout the crate.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

/// Monomial orders. `Block(k)` compares the first `k` variables by grevlex and
/// breaks ties with grevlex on the remaining ones, so it eliminates the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

/// Compare two exponent vectors under `order`.
pub fn monomial_compare(m1: &Monomial, m2: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if m1.nvars() != m2.nvars() {
        return Err(Error::LengthMismatch(m1.nvars(), m2.nvars()));
    }
    Ok(order.cmp(m1, m2))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<MonomialOrder> {
        let s = s.trim();
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            _ => {
                let inner = s
                    .strip_prefix("block(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::InvalidOrder(s.to_string()))?;
                let k = inner.trim().parse().map_err(|_| Error::InvalidOrder(s.to_string()))?;
                Ok(MonomialOrder::Block(k))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    /// Textbook grevlex: sort by degree, then reverse-lex on the reversed variables.
    fn grevlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
        let key = |e: &[u32]| {
            let d: u32 = e.iter().sum();
            let rev: Vec<i64> = e.iter().rev().map(|&x| -(x as i64)).collect();
            (d, rev)
        };
        key(a).cmp(&key(b))
    }

    #[test]
    fn grevlex_degree_two() {
        // x z vs y^2 on (x, y, z)
        let xz = m(&[1, 0, 1]);
        let y2 = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&y2, &xz), Ordering::Greater);

        let mut all = Vec::new();
        for a in 0..=2u32 {
            for b in 0..=2 - a {
                all.push(m(&[a, b, 2 - a - b]));
            }
        }
        for p in &all {
            for q in &all {
                assert_eq!(MonomialOrder::GrevLex.cmp(p, q), grevlex_oracle(p.exponents(), q.exponents()));
            }
        }
    }

    #[test]
    fn lex_and_identity() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(monomial_compare(&m(&[2, 1]), &m(&[2, 1]), MonomialOrder::GrevLex), Ok(Ordering::Equal));
        assert_eq!(
            monomial_compare(&m(&[2, 1]), &m(&[2]), MonomialOrder::GrevLex),
            Err(Error::LengthMismatch(2, 1))
        );
    }

    #[test]
    fn block_eliminates_first_block() {
        let o = MonomialOrder::Block(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn parse_orders() {
        assert_eq!("block(2)".parse::<MonomialOrder>(), Ok(MonomialOrder::Block(2)));
        assert!("revlex".parse::<MonomialOrder>().is_err());
    }
}
