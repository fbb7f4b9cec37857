//! Integer factorization: trial division, then Brent's variant of Pollard rho.
//!
//! Rho iterations are charged against a [`FactorBudget`]; running out yields
//! [`Error::FactorBudgetExceeded`] instead of a partial answer.

use std::cell::Cell;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::prime::{is_prime, is_prime_u64, mul_mod, Prime};
use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1 << 12;

/// Work allowance for the rho stage of factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub max_rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            max_rho_iterations: 1 << 24,
        }
    }
}

/// Signed prime factorization `sign * prod(p^e)`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(Prime, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn value(&self) -> BigInt {
        let magnitude = self
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.value().pow(*e));
        BigInt::from(magnitude) * self.sign
    }

    pub fn primes(&self) -> impl Iterator<Item = &Prime> {
        self.factors.iter().map(|(p, _)| p)
    }
}

pub fn factorize(n: &BigInt) -> Result<Factorization> {
    factorize_with_budget(n, &FactorBudget::default())
}

pub fn factorize_with_budget(n: &BigInt, budget: &FactorBudget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    let sign = if n.sign() == BigSign::Minus { -1 } else { 1 };
    let remaining = Cell::new(budget.max_rho_iterations);
    let mut primes = Vec::new();
    split_big(n.magnitude().clone(), &remaining, &mut primes)
        .ok_or_else(|| Error::FactorBudgetExceeded(n.clone()))?;
    primes.sort();
    let mut factors: Vec<(Prime, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((last, e)) if *last.value() == p => *e += 1,
            _ => factors.push((Prime::new_unchecked(p), 1)),
        }
    }
    Ok(Factorization { sign, factors })
}

/// Pushes the prime factors of `n` (with multiplicity) onto `out`.
fn split_big(mut n: BigUint, budget: &Cell<u64>, out: &mut Vec<BigUint>) -> Option<()> {
    if let Some(small) = n.to_u64() {
        let mut small_out = Vec::new();
        split_u64(small, budget, &mut small_out)?;
        out.extend(small_out.into_iter().map(BigUint::from));
        return Some(());
    }
    let mut d = 2u64;
    while d < TRIAL_LIMIT {
        while (&n % d).is_zero() {
            out.push(BigUint::from(d));
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Some(());
    }
    if n.to_u64().is_some() {
        return split_big(n, budget, out);
    }
    if is_prime(&n) {
        out.push(n);
        return Some(());
    }
    let divisor = rho_big(&n, budget)?;
    let cofactor = &n / &divisor;
    split_big(divisor, budget, out)?;
    split_big(cofactor, budget, out)
}

fn split_u64(mut n: u64, budget: &Cell<u64>, out: &mut Vec<u64>) -> Option<()> {
    for d in [2u64, 3, 5] {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
    }
    let mut d = 7u64;
    let mut step = [4u64, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d < TRIAL_LIMIT && d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += step.next().unwrap();
    }
    split_u64_large(n, budget, out)
}

fn split_u64_large(n: u64, budget: &Cell<u64>, out: &mut Vec<u64>) -> Option<()> {
    if n == 1 {
        return Some(());
    }
    if is_prime_u64(n) {
        out.push(n);
        return Some(());
    }
    let divisor = rho_u64(n, budget)?;
    split_u64_large(divisor, budget, out)?;
    split_u64_large(n / divisor, budget, out)
}

fn charge(budget: &Cell<u64>, amount: u64) -> Option<()> {
    let left = budget.get().checked_sub(amount)?;
    budget.set(left);
    Some(())
}

/// Brent's cycle-finding rho; returns a nontrivial divisor of composite odd `n`.
fn rho_u64(n: u64, budget: &Cell<u64>) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    const BATCH: u64 = 128;
    for c in 1u64.. {
        let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let steps = BATCH.min(r - k);
                charge(budget, steps)?;
                for _ in 0..steps {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += steps;
            }
            r *= 2;
        }
        if g == n {
            loop {
                charge(budget, 1)?;
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

fn rho_big(n: &BigUint, budget: &Cell<u64>) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let abs_diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u8);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = BATCH.min(r - k);
                charge(budget, steps)?;
                for _ in 0..steps {
                    y = f(&y);
                    q = (q * abs_diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += steps;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                charge(budget, 1)?;
                ys = f(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

/// Integer square root test for nonnegative integers.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}
