//! Invariants of tame stacky curves with coarse space `P^1` (or general coarse
//! genus, for the genus formula): genus, the degree denominators `d_P` and
//! `d_X`, the group `Pic^0`, and the simply-connectedness test.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

pub use snf::{smith_normal_form, SmithNormalForm};

use crate::error::{Error, Result};

/// `(g_coarse; e_1, ..., e_r)` with every `e_i >= 2`, orders sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    g_coarse: u64,
    orders: Vec<u64>,
}

impl Signature {
    /// Builds a signature; orders equal to 1 are dropped, 0 is rejected.
    pub fn new(g_coarse: u64, orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut kept = Vec::new();
        for e in orders {
            match e {
                0 => return Err(Error::InvalidSignature("stabilizer order 0".into())),
                1 => {}
                e => kept.push(e),
            }
        }
        kept.sort_unstable();
        Ok(Signature {
            g_coarse,
            orders: kept,
        })
    }

    pub fn g_coarse(&self) -> u64 {
        self.g_coarse
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// The geometric stacky points: one rational point per order.
    pub fn degree_one_points(&self) -> Vec<StackyLocusPoint> {
        self.orders
            .iter()
            .map(|&e| StackyLocusPoint {
                residue_degree: 1,
                stabilizer_order: e,
            })
            .collect()
    }

    /// Signature with one more stacky point of order `e`.
    pub fn with_point(&self, e: u64) -> Result<Self> {
        Signature::new(self.g_coarse, self.orders.iter().copied().chain([e]))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.g_coarse)?;
        for (i, e) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, " {e}")?;
        }
        f.write_str(")")
    }
}

/// A closed point of the stacky locus: residue degree `[k(P):k]` and
/// stabilizer order `e_P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StackyLocusPoint {
    residue_degree: u64,
    stabilizer_order: u64,
}

impl StackyLocusPoint {
    pub fn new(residue_degree: u64, stabilizer_order: u64) -> Result<Self> {
        if residue_degree == 0 {
            return Err(Error::InvalidSignature("residue degree 0".into()));
        }
        if stabilizer_order < 2 {
            return Err(Error::InvalidSignature(format!(
                "stabilizer order {stabilizer_order} < 2"
            )));
        }
        Ok(StackyLocusPoint {
            residue_degree,
            stabilizer_order,
        })
    }

    pub fn residue_degree(&self) -> u64 {
        self.residue_degree
    }

    pub fn stabilizer_order(&self) -> u64 {
        self.stabilizer_order
    }
}

/// A finite abelian group `Z/d_1 x ... x Z/d_k` with `d_1 | ... | d_k`, all `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Group from invariant factors; factors equal to 1 are dropped.
    ///
    /// # Panics
    ///
    /// If the divisibility chain fails or a factor is nonpositive.
    pub fn from_invariant_factors(factors: impl IntoIterator<Item = BigInt>) -> Self {
        let invariant_factors: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
        assert!(invariant_factors.iter().all(|d| *d > BigInt::one()));
        assert!(invariant_factors
            .windows(2)
            .all(|w| w[1].is_multiple_of(&w[0])));
        FiniteAbelianGroup { invariant_factors }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        for (i, d) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

/// `g_coarse + 1/2 * sum (e_i - 1) / e_i`.
pub fn genus(sig: &Signature) -> BigRational {
    let half = BigRational::new(1.into(), 2.into());
    sig.orders
        .iter()
        .map(|&e| BigRational::new(BigInt::from(e - 1), BigInt::from(e)) * &half)
        .fold(BigRational::from_integer(sig.g_coarse.into()), |acc, t| {
            acc + t
        })
}

/// Denominator of `deg [P] = [k(P):k] / e_P` in lowest terms.
pub fn d_of_point(point: &StackyLocusPoint) -> u64 {
    point.stabilizer_order / point.residue_degree.gcd(&point.stabilizer_order)
}

/// `d_X`: lcm of `d_P` over the stacky locus (1 when empty).
pub fn d_of_curve(points: &[StackyLocusPoint]) -> BigInt {
    points.iter().fold(BigInt::one(), |acc, p| {
        acc.lcm(&BigInt::from(d_of_point(p)))
    })
}

/// `Pic^0` of a stacky curve with coarse space `P^1` and the given stacky locus,
/// as an abstract group.
///
/// The kernel of the degree map on `(+) Z/e_P` is dual to the cokernel of
/// the matrix `diag(e_P)` with the degree row `([k(P):k])_P` adjoined, so the
/// invariant factors are read off that matrix's Smith normal form.
pub fn pic0_group(points: &[StackyLocusPoint]) -> FiniteAbelianGroup {
    if points.is_empty() {
        return FiniteAbelianGroup::trivial();
    }
    let r = points.len();
    let mut relations: Vec<Vec<BigInt>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i == j {
                        BigInt::from(points[i].stabilizer_order)
                    } else {
                        BigInt::ZERO
                    }
                })
                .collect()
        })
        .collect();
    relations.push(
        points
            .iter()
            .map(|p| BigInt::from(p.residue_degree))
            .collect(),
    );
    let snf = smith_normal_form(&relations);
    debug_assert_eq!(snf.cokernel_free_rank(), 0);
    FiniteAbelianGroup::from_invariant_factors(snf.invariant_factors)
}

/// Simply connected over a separably closed field: `(0;)`, `(0; n)` or
/// `(0; n, m)` with `gcd(n, m) = 1`.
pub fn is_simply_connected(sig: &Signature) -> bool {
    if sig.g_coarse != 0 {
        return false;
    }
    match sig.orders.as_slice() {
        [] | [_] => true,
        [n, m] => n.gcd(m) == 1,
        _ => false,
    }
}
