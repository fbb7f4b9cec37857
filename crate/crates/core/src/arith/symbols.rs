//! Valuations, residue symbols and local Hilbert symbols over Q.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::prime::{Place, Prime};
use crate::error::{Error, Result};

/// Splits a nonzero integer as `p^v * unit`.
pub(crate) fn split_prime_power(n: &BigInt, p: &BigUint) -> (u64, BigInt) {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p.clone());
    let mut unit = n.clone();
    let mut v = 0;
    loop {
        let (quot, rem) = unit.div_rem(&p);
        if !rem.is_zero() {
            return (v, unit);
        }
        unit = quot;
        v += 1;
    }
}

/// Exponent of `p` in the nonzero rational `x`.
pub fn valuation(x: &BigRational, p: &Prime) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::Zero);
    }
    let (num, _) = split_prime_power(x.numer(), p.value());
    let (den, _) = split_prime_power(x.denom(), p.value());
    Ok(num as i64 - den as i64)
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
pub(crate) fn jacobi(a: &BigInt, n: &BigUint) -> i8 {
    debug_assert!(n.is_odd());
    let mut n = n.clone();
    let mut a = a.mod_floor(&BigInt::from(n.clone())).to_biguint().unwrap();
    let mut result = 1i8;
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        a >>= twos;
        let n_mod_8 = (&n % 8u8).to_u8().unwrap();
        if twos % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
            result = -result;
        }
        if (&a % 4u8).to_u8() == Some(3) && n_mod_8 % 4 == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Legendre symbol `(a / p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: &Prime) -> Result<i8> {
    if p.is_two() {
        return Err(Error::EvenPrime);
    }
    Ok(jacobi(a, p.value()))
}

/// `(u - 1) / 2 mod 2` for odd `u`.
fn eps2(u: &BigInt) -> u32 {
    u32::from(u.mod_floor(&BigInt::from(4)) == BigInt::from(3))
}

/// `(u^2 - 1) / 8 mod 2` for odd `u`.
fn omega2(u: &BigInt) -> u32 {
    let r = u.mod_floor(&BigInt::from(8)).to_u8().unwrap();
    u32::from(r == 3 || r == 5)
}

/// Hilbert symbol `(a, b)_v` of two nonzero integers.
pub fn hilbert_symbol_int(a: &BigInt, b: &BigInt, v: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero);
    }
    let p = match v {
        Place::Real => {
            return Ok(if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            });
        }
        Place::Finite(p) => p,
    };
    let (alpha, u) = split_prime_power(a, p.value());
    let (beta, w) = split_prime_power(b, p.value());
    if p.is_two() {
        let exponent =
            eps2(&u) * eps2(&w) + (alpha % 2) as u32 * omega2(&w) + (beta % 2) as u32 * omega2(&u);
        return Ok(if exponent.is_multiple_of(2) { 1 } else { -1 });
    }
    let mut sign = 1i8;
    let p_is_3_mod_4 = (p.value() % 4u8).to_u8() == Some(3);
    if alpha % 2 == 1 && beta % 2 == 1 && p_is_3_mod_4 {
        sign = -sign;
    }
    if beta % 2 == 1 {
        sign *= jacobi(&u, p.value());
    }
    if alpha % 2 == 1 {
        sign *= jacobi(&w, p.value());
    }
    Ok(sign)
}

/// Hilbert symbol `(a, b)_v` of two nonzero rationals.
///
/// Each rational is replaced by `numer * denom`, which lies in the same square class.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, v: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero);
    }
    let a = a.numer() * a.denom();
    let b = b.numer() * b.denom();
    hilbert_symbol_int(&a, &b, v)
}

/// Whether the nonzero integer `n` is a square in the completion of Q at `v`.
pub(crate) fn is_square_at(n: &BigInt, v: &Place) -> bool {
    debug_assert!(!n.is_zero());
    let p = match v {
        Place::Real => return n.is_positive(),
        Place::Finite(p) => p,
    };
    let (val, unit) = split_prime_power(n, p.value());
    if val % 2 == 1 {
        return false;
    }
    if p.is_two() {
        unit.mod_floor(&BigInt::from(8)).is_one()
    } else {
        jacobi(&unit, p.value()) == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(int(n), int(d))
    }

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn fp(p: u64) -> Place {
        Place::Finite(prime(p))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&rat(98, 1), &prime(7)), Ok(2));
        assert_eq!(valuation(&rat(1, 1), &prime(5)), Ok(0));
        assert_eq!(valuation(&rat(1, 8), &prime(2)), Ok(-3));
        assert_eq!(valuation(&rat(-50, 27), &prime(3)), Ok(-3));
        assert_eq!(valuation(&rat(0, 1), &prime(3)), Err(Error::Zero));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(&int(3), &prime(7)), Ok(-1));
        assert_eq!(legendre(&int(0), &prime(7)), Ok(0));
        assert_eq!(legendre(&int(2), &prime(7)), Ok(1));
        assert_eq!(legendre(&int(-7), &prime(7)), Ok(0));
        assert_eq!(legendre(&int(3), &prime(2)), Err(Error::EvenPrime));
    }

    #[test]
    fn legendre_matches_table_of_squares() {
        for p in [3u64, 5, 7, 11, 13, 31, 47, 97] {
            let squares: Vec<u64> = (1..p).map(|z| z * z % p).collect();
            for a in -200i64..200 {
                let r = a.rem_euclid(p as i64) as u64;
                let expected = if r == 0 {
                    0
                } else if squares.contains(&r) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(&int(a), &prime(p)), Ok(expected), "({a}/{p})");
            }
        }
    }

    #[test]
    fn jacobi_composite_modulus() {
        // (2/15) = (2/3)(2/5) = (-1)(-1)
        assert_eq!(jacobi(&int(2), &BigUint::from(15u8)), 1);
        assert_eq!(jacobi(&int(5), &BigUint::from(15u8)), 0);
        assert_eq!(jacobi(&int(7), &BigUint::from(1u8)), 1);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_symbol_int(&int(3), &int(42), &fp(7)), Ok(-1));
        assert_eq!(hilbert_symbol_int(&int(3), &int(42), &fp(2)), Ok(-1));
        assert_eq!(hilbert_symbol_int(&int(3), &int(42), &Place::Real), Ok(1));
        assert_eq!(hilbert_symbol_int(&int(-1), &int(-1), &Place::Real), Ok(-1));
        assert_eq!(hilbert_symbol_int(&int(-1), &int(-1), &fp(2)), Ok(-1));
        assert_eq!(hilbert_symbol_int(&int(2), &int(5), &fp(5)), Ok(-1));
        assert_eq!(
            hilbert_symbol_int(&int(0), &int(5), &fp(5)),
            Err(Error::Zero)
        );
    }

    #[test]
    fn hilbert_of_rationals_ignores_denominator_squares() {
        assert_eq!(
            hilbert_symbol(&rat(3, 4), &rat(42, 25), &fp(7)),
            hilbert_symbol_int(&int(3), &int(42), &fp(7))
        );
        assert_eq!(
            hilbert_symbol(&rat(1, 3), &rat(42, 1), &fp(7)),
            hilbert_symbol_int(&int(3), &int(42), &fp(7))
        );
    }

    #[test]
    fn a_minus_a_splits() {
        for a in (-30i64..30).filter(|&a| a != 0) {
            for v in [Place::Real, fp(2), fp(3), fp(5), fp(7), fp(29)] {
                assert_eq!(
                    hilbert_symbol_int(&int(a), &int(-a), &v),
                    Ok(1),
                    "{a} at {v}"
                );
            }
        }
    }

    #[test]
    fn local_squares() {
        assert!(is_square_at(&int(-7), &fp(2)));
        assert!(!is_square_at(&int(-7), &Place::Real));
        assert!(!is_square_at(&int(-7), &fp(7)));
        assert!(is_square_at(&int(98 * 4), &fp(7)));
        assert!(!is_square_at(&int(2), &fp(2)));
        assert!(is_square_at(&int(-31), &fp(47)));
    }
}
