use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factor::{factorize_with_budget, FactorBudget};
use super::prime::{Place, Prime};
use super::symbols::{is_square_at, legendre};
use crate::error::{Error, Result};

/// A nonzero rational modulo nonzero rational squares, stored as the signed
/// squarefree integer `sign * prod(primes)`.
///
/// `primes` is sorted and duplicate free, so derived equality is equality of classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareClass {
    negative: bool,
    primes: Vec<Prime>,
}

impl SquareClass {
    pub fn one() -> Self {
        SquareClass {
            negative: false,
            primes: Vec::new(),
        }
    }

    /// Class of `(-1)^negative * prod(primes)`; repeated primes cancel in pairs.
    pub fn from_primes(negative: bool, primes: impl IntoIterator<Item = Prime>) -> Self {
        let mut primes: Vec<Prime> = primes.into_iter().collect();
        primes.sort();
        let mut kept: Vec<Prime> = Vec::with_capacity(primes.len());
        for p in primes {
            if kept.last() == Some(&p) {
                kept.pop();
            } else {
                kept.push(p);
            }
        }
        SquareClass {
            negative,
            primes: kept,
        }
    }

    pub fn from_integer(n: &BigInt) -> Result<Self> {
        Self::from_integer_with_budget(n, &FactorBudget::default())
    }

    pub fn from_integer_with_budget(n: &BigInt, budget: &FactorBudget) -> Result<Self> {
        let f = factorize_with_budget(n, budget)?;
        Ok(SquareClass {
            negative: f.sign < 0,
            primes: f
                .factors
                .into_iter()
                .filter(|(_, e)| e % 2 == 1)
                .map(|(p, _)| p)
                .collect(),
        })
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.primes.is_empty()
    }

    /// Primes dividing the squarefree representative, including 2 when present.
    pub fn primes(&self) -> &[Prime] {
        &self.primes
    }

    pub fn contains_two(&self) -> bool {
        self.primes.first().is_some_and(Prime::is_two)
    }

    /// The signed squarefree representative.
    pub fn to_integer(&self) -> BigInt {
        let magnitude = self
            .primes
            .iter()
            .fold(BigUint::one(), |acc, p| acc * p.value());
        let n = BigInt::from(magnitude);
        if self.negative {
            -n
        } else {
            n
        }
    }

    /// Group law modulo squares: signs multiply, shared primes cancel.
    pub fn multiply(&self, other: &SquareClass) -> SquareClass {
        let mut primes = Vec::with_capacity(self.primes.len() + other.primes.len());
        let (mut i, mut j) = (0, 0);
        while i < self.primes.len() && j < other.primes.len() {
            match self.primes[i].cmp(&other.primes[j]) {
                std::cmp::Ordering::Less => {
                    primes.push(self.primes[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    primes.push(other.primes[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        primes.extend_from_slice(&self.primes[i..]);
        primes.extend_from_slice(&other.primes[j..]);
        SquareClass {
            negative: self.negative != other.negative,
            primes,
        }
    }
}

impl Default for SquareClass {
    fn default() -> Self {
        SquareClass::one()
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_integer().fmt(f)
    }
}

/// Canonical square class of a nonzero rational.
pub fn squarefree_class(x: &BigRational) -> Result<SquareClass> {
    if x.is_zero() {
        return Err(Error::Zero);
    }
    SquareClass::from_integer(&(x.numer() * x.denom()))
}

pub fn multiply_classes(d1: &SquareClass, d2: &SquareClass) -> SquareClass {
    d1.multiply(d2)
}

/// Whether `d` is a square in the completion of Q at `v`.
pub fn is_local_square(d: &SquareClass, v: &Place) -> bool {
    match v {
        Place::Real => !d.negative,
        Place::Finite(p) => {
            if d.primes.binary_search(p).is_ok() {
                return false;
            }
            let n = d.to_integer();
            if p.is_two() {
                is_square_at(&n, v)
            } else {
                legendre(&n, p) == Ok(1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(n: i64) -> SquareClass {
        SquareClass::from_integer(&BigInt::from(n)).unwrap()
    }

    fn fp(p: u64) -> Place {
        Place::finite(p).unwrap()
    }

    #[test]
    fn squarefree_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(squarefree_class(&r(-56, 1)).unwrap(), class(-14));
        assert_eq!(squarefree_class(&r(9, 4)).unwrap(), SquareClass::one());
        assert_eq!(squarefree_class(&r(98, 1)).unwrap(), class(2));
        assert_eq!(squarefree_class(&r(1, 3)).unwrap(), class(3));
        assert_eq!(squarefree_class(&r(0, 1)), Err(Error::Zero));
        assert_eq!(class(-56).to_integer(), BigInt::from(-14));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(multiply_classes(&class(-7), &class(-14)), class(2));
        for n in [-30i64, -1, 2, 15, 210] {
            assert!(multiply_classes(&class(n), &class(n)).is_one());
            assert_eq!(multiply_classes(&class(n), &SquareClass::one()), class(n));
        }
    }

    #[test]
    fn from_primes_cancels_pairs() {
        let p = |n: u64| Prime::new(n).unwrap();
        let c = SquareClass::from_primes(true, [p(7), p(2), p(7), p(3)]);
        assert_eq!(c, class(-6));
        assert!(c.contains_two());
        assert!(!class(-7).contains_two());
    }

    #[test]
    fn local_square_examples() {
        assert!(is_local_square(&class(-7), &fp(2)));
        assert!(!is_local_square(&class(-7), &Place::Real));
        assert!(!is_local_square(&class(-7), &fp(7)));
        assert!(is_local_square(&class(2), &fp(7)));
        assert!(!is_local_square(&class(3), &fp(7)));
        assert!(is_local_square(&class(17), &fp(2)));
        assert!(!is_local_square(&class(5), &fp(2)));
    }

    #[test]
    fn minus_seven_has_two_adic_square_root() {
        // Lift z^2 = -7 mod 2^k bit by bit.
        let mut z: i128 = 1;
        for k in 4..=60u32 {
            let m = 1i128 << k;
            if (z * z + 7).rem_euclid(m) != 0 {
                z += 1i128 << (k - 2);
            }
            assert_eq!((z * z + 7).rem_euclid(m), 0, "no root mod 2^{k}");
        }
    }
}
