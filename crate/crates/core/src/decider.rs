//! Brauer-Manin obstruction to integral points on `X = P^1[sqrt f]` over `Z[1/2q]`.
//!
//! `Beh(X)` is the group of classes `d` in `Z[1/2q]^* / {1, q} Z[1/2q]^*2` that
//! are locally in `{1, q}` times a square at every place dividing `2q` and at
//! infinity. At a place where `d` is a local square the local invariant is
//! trivial; where `d` lies in the `q`-class it equals `epsilon_v(f)`. An
//! integral point exists iff no `d` has `prod epsilon_v = -1` over the places
//! where `d` is not a square.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{exact_sqrt, is_local_square, is_square_at, FactorBudget, Place, SquareClass};
use crate::error::{Error, Result};
use crate::form::{places_of, BinaryQuadraticForm, Discriminant};

/// `Beh(X)`: one canonical representative per class modulo the `q`-class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BehGroup {
    pub q_class: SquareClass,
    /// Sorted by [`canonical_key`]; the identity comes first.
    pub representatives: Vec<SquareClass>,
}

impl BehGroup {
    pub fn order(&self) -> usize {
        self.representatives.len()
    }

    /// Canonical representative of the class of `d` modulo `q`.
    pub fn representative_of(&self, d: &SquareClass) -> SquareClass {
        canonical_representative(d, &self.q_class)
    }

    pub fn contains(&self, d: &SquareClass) -> bool {
        self.representatives.contains(&self.representative_of(d))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    IntegralPointExists,
    BrauerObstruction,
    DegenerateInput,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::IntegralPointExists => "exists",
            Outcome::BrauerObstruction => "obstruction",
            Outcome::DegenerateInput => "degenerate",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the witness class sits in `Q_v^*` at one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalMembership {
    /// `d` is a square: the local invariant is trivial.
    Square,
    /// `d` is in `q Q_v^*2` but not a square: the local invariant is `epsilon_v`.
    QSquare,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceEvidence {
    pub place: Place,
    pub epsilon: i8,
    pub membership: Option<LocalMembership>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub form: BinaryQuadraticForm,
    pub q: BigInt,
    pub outcome: Outcome,
    pub q_class: Option<SquareClass>,
    pub witness_class: Option<SquareClass>,
    /// Primitive `(x, y)`; a rational root of `f` or an integral point.
    pub witness_point: Option<(BigInt, BigInt)>,
    pub beh_order: Option<usize>,
    /// One entry per place dividing `2q` and infinity; empty when the
    /// epsilon-invariants were not needed.
    pub evidence: Vec<PlaceEvidence>,
}

/// Discriminant data and epsilon-invariants of a form with non-square `q`.
struct LocalData {
    disc: Discriminant,
    places: Vec<Place>,
    epsilons: Vec<i8>,
}

impl LocalData {
    fn new(f: &BinaryQuadraticForm, budget: &FactorBudget) -> Result<Self> {
        let disc = f.discriminant_with_budget(budget)?;
        if exact_sqrt(&disc.q).is_some() {
            return Err(Error::RationalRoot(disc.q));
        }
        let places = places_of(&disc);
        let epsilons = places
            .iter()
            .map(|v| f.epsilon_invariant(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(LocalData {
            disc,
            places,
            epsilons,
        })
    }

    fn is_member(&self, d: &SquareClass) -> bool {
        let supported = d
            .primes()
            .iter()
            .all(|p| self.disc.bad_primes.binary_search(p).is_ok());
        let dq = d.multiply(&self.disc.class);
        supported
            && self
                .places
                .iter()
                .all(|v| is_local_square(d, v) || is_local_square(&dq, v))
    }

    fn beh_value(&self, d: &SquareClass) -> i8 {
        self.places
            .iter()
            .zip(&self.epsilons)
            .filter(|(v, _)| !is_local_square(d, v))
            .map(|(_, &e)| e)
            .product()
    }

    fn beh_group(&self) -> BehGroup {
        let q_class = self.disc.class.clone();
        let primes = &self.disc.bad_primes;
        let mut representatives: Vec<SquareClass> = Vec::new();
        for mask in 0u64..(1u64 << primes.len()) {
            for negative in [false, true] {
                let d = SquareClass::from_primes(
                    negative,
                    primes
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, p)| p.clone()),
                );
                if self.is_member(&d) {
                    representatives.push(canonical_representative(&d, &q_class));
                }
            }
        }
        representatives.sort_by_cached_key(canonical_key);
        representatives.dedup();
        BehGroup {
            q_class,
            representatives,
        }
    }
}

/// Ordering used to pick representatives: odd classes first, then fewer
/// primes, then smaller absolute value, then positive before negative.
pub fn canonical_key(d: &SquareClass) -> (bool, usize, BigInt, bool) {
    (
        d.contains_two(),
        d.primes().len(),
        d.to_integer().abs(),
        d.is_negative(),
    )
}

fn canonical_representative(d: &SquareClass, q_class: &SquareClass) -> SquareClass {
    let partner = d.multiply(q_class);
    if canonical_key(&partner) < canonical_key(d) {
        partner
    } else {
        d.clone()
    }
}

pub fn beh_group(f: &BinaryQuadraticForm) -> Result<BehGroup> {
    beh_group_with_budget(f, &FactorBudget::default())
}

pub fn beh_group_with_budget(f: &BinaryQuadraticForm, budget: &FactorBudget) -> Result<BehGroup> {
    Ok(LocalData::new(f, budget)?.beh_group())
}

/// `beh(d)`: the product of `epsilon_v` over the places dividing `2q` and
/// infinity at which `d` is not a local square.
pub fn beh_value(f: &BinaryQuadraticForm, d: &SquareClass) -> Result<i8> {
    let data = LocalData::new(f, &FactorBudget::default())?;
    if !data.is_member(d) {
        return Err(Error::NotBehMember(d.to_integer()));
    }
    Ok(data.beh_value(d))
}

pub fn decide(f: &BinaryQuadraticForm) -> Result<Verdict> {
    decide_with_budget(f, &FactorBudget::default())
}

pub fn decide_with_budget(f: &BinaryQuadraticForm, budget: &FactorBudget) -> Result<Verdict> {
    let q = f.discriminant_value();
    let mut verdict = Verdict {
        form: f.clone(),
        q: q.clone(),
        outcome: Outcome::DegenerateInput,
        q_class: None,
        witness_class: None,
        witness_point: None,
        beh_order: None,
        evidence: Vec::new(),
    };
    if q.is_zero() {
        return Ok(verdict);
    }
    if exact_sqrt(&q).is_some() {
        // a rational stacky point is an integral point of the root stack
        verdict.outcome = Outcome::IntegralPointExists;
        verdict.witness_point = f.has_rational_root();
        return Ok(verdict);
    }

    let data = LocalData::new(f, budget)?;
    let group = data.beh_group();
    verdict.q_class = Some(group.q_class.clone());
    verdict.beh_order = Some(group.order());
    let witness = group
        .representatives
        .iter()
        .filter(|d| !d.is_one())
        .find(|d| data.beh_value(d) == -1);

    verdict.evidence = data
        .places
        .iter()
        .zip(&data.epsilons)
        .map(|(v, &epsilon)| PlaceEvidence {
            place: v.clone(),
            epsilon,
            membership: witness.map(|d| {
                if is_local_square(d, v) {
                    LocalMembership::Square
                } else {
                    LocalMembership::QSquare
                }
            }),
        })
        .collect();

    match witness {
        None => verdict.outcome = Outcome::IntegralPointExists,
        Some(d) => {
            let on_squares: i8 = verdict
                .evidence
                .iter()
                .filter(|e| e.membership == Some(LocalMembership::Square))
                .map(|e| e.epsilon)
                .product();
            if on_squares != -1 {
                return Err(Error::InconsistentEpsilon(d.to_integer()));
            }
            verdict.outcome = Outcome::BrauerObstruction;
            verdict.witness_class = Some(d.clone());
        }
    }
    Ok(verdict)
}

/// Re-checks an obstruction witness against the two conditions directly on
/// integers: at every place dividing `2q` and infinity `d` or `d q` is a
/// square, and the epsilon products over non-square and over square places are
/// both `-1`.
pub fn verify_witness(f: &BinaryQuadraticForm, d: &BigInt) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::Zero);
    }
    let disc = f.discriminant()?;
    let dq = d * &disc.q;
    let mut over_squares = 1i8;
    let mut over_non_squares = 1i8;
    for v in places_of(&disc) {
        let square = is_square_at(d, &v);
        if !square && !is_square_at(&dq, &v) {
            return Ok(false);
        }
        let epsilon = f.epsilon_invariant(&v)?;
        if square {
            over_squares *= epsilon;
        } else {
            over_non_squares *= epsilon;
        }
    }
    Ok(over_squares == -1 && over_non_squares == -1)
}
