use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Extra bases used above 3.3e24, where the first twelve prime bases stop being
/// a proof of primality.
const MR_EXTRA_BASES: [u64; 12] = [41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89];

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin for arbitrary size. Deterministic below 3.3e24; above that the
/// answer is a strong probable prime to 24 fixed bases.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &p in MR_BASES.iter().chain(MR_EXTRA_BASES.iter()) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in MR_BASES.iter().chain(MR_EXTRA_BASES.iter()) {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A positive rational prime, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(BigUint);

impl Prime {
    pub fn new(n: impl Into<BigInt>) -> Result<Self> {
        let n: BigInt = n.into();
        match n.to_biguint() {
            Some(u) if is_prime(&u) => Ok(Prime(u)),
            _ => Err(Error::NotPrime(n)),
        }
    }

    /// Wraps a value already known to be prime (factorization output).
    pub(crate) fn new_unchecked(n: BigUint) -> Self {
        debug_assert!(is_prime(&n));
        Prime(n)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_two(&self) -> bool {
        self.0 == BigUint::from(2u8)
    }
}

impl TryFrom<BigUint> for Prime {
    type Error = Error;

    fn try_from(n: BigUint) -> Result<Self> {
        Prime::new(BigInt::from(n))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A place of Q: the real place or a finite prime.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(Prime),
}

impl Place {
    pub fn finite(p: impl Into<BigInt>) -> Result<Self> {
        Prime::new(p).map(Place::Finite)
    }

    pub fn prime(&self) -> Option<&Prime> {
        match self {
            Place::Real => None,
            Place::Finite(p) => Some(p),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("inf"),
            Place::Finite(p) => p.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_match_sieve() {
        let limit = 10_000usize;
        let mut composite = vec![false; limit];
        for i in 2..limit {
            if !composite[i] {
                let mut j = i * i;
                while j < limit {
                    composite[j] = true;
                    j += i;
                }
            }
            assert_eq!(is_prime_u64(i as u64), !composite[i], "{i}");
        }
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
    }

    #[test]
    fn large_primality() {
        // 2^61 - 1 and 2^89 - 1 are Mersenne primes.
        assert!(is_prime_u64((1u64 << 61) - 1));
        let m89 = (BigUint::one() << 89u32) - BigUint::one();
        assert!(is_prime(&m89));
        assert!(!is_prime(&(&m89 * BigUint::from(3u8))));
        // strong pseudoprime to bases 2, 3, 5 and 7
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn place_construction() {
        assert!(Place::finite(7).is_ok());
        assert_eq!(Place::finite(9), Err(Error::NotPrime(BigInt::from(9))));
        assert_eq!(Place::finite(-7), Err(Error::NotPrime(BigInt::from(-7))));
        assert_eq!(Place::finite(7).unwrap().to_string(), "7");
        assert_eq!(Place::Real.to_string(), "inf");
        assert!(Place::Real < Place::finite(2).unwrap());
    }
}
