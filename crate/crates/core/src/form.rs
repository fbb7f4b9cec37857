//! Binary quadratic forms `f = a x^2 + b x y + c y^2` with arbitrary-precision
//! coefficients, their discriminants, bad places and local epsilon-invariants.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    exact_sqrt, factorize_with_budget, hilbert_symbol_int, FactorBudget, Place, Prime, SquareClass,
};
use crate::error::{Error, Result};

/// A 2x2 integer matrix `[[p, q], [r, s]]` acting by `(x, y) -> (p x + q y, r x + s y)`.
pub type Matrix2 = [[BigInt; 2]; 2];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryQuadraticForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

/// Discriminant `q = b^2 - 4ac` with its square class and the primes of `2q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discriminant {
    pub q: BigInt,
    pub class: SquareClass,
    pub bad_primes: Vec<Prime>,
}

impl BinaryQuadraticForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        BinaryQuadraticForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// `b^2 - 4ac`, possibly zero.
    pub fn discriminant_value(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    pub fn is_degenerate(&self) -> bool {
        self.discriminant_value().is_zero()
    }

    pub fn discriminant(&self) -> Result<Discriminant> {
        self.discriminant_with_budget(&FactorBudget::default())
    }

    pub fn discriminant_with_budget(&self, budget: &FactorBudget) -> Result<Discriminant> {
        let q = self.discriminant_value();
        if q.is_zero() {
            return Err(Error::DegenerateForm);
        }
        let factors = factorize_with_budget(&(BigInt::from(2) * &q), budget)?;
        let class = SquareClass::from_primes(
            q.is_negative(),
            factors
                .factors
                .iter()
                .filter(|(p, e)| {
                    // 2q carries one extra factor of 2
                    let e = if p.is_two() { e - 1 } else { *e };
                    e % 2 == 1
                })
                .map(|(p, _)| p.clone()),
        );
        Ok(Discriminant {
            q,
            class,
            bad_primes: factors.primes().cloned().collect(),
        })
    }

    /// The real place followed by the primes dividing `2q`, ascending.
    pub fn bad_places(&self) -> Result<Vec<Place>> {
        Ok(places_of(&self.discriminant()?))
    }

    /// `f(p x + q y, r x + s y)` for a matrix of determinant `±1`.
    pub fn transform(&self, gamma: &Matrix2) -> Result<Self> {
        let [[p, q], [r, s]] = gamma;
        let det = p * s - q * r;
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(det));
        }
        let two = BigInt::from(2);
        Ok(BinaryQuadraticForm {
            a: self.evaluate(p, r),
            b: &two * &self.a * p * q + &self.b * (p * s + q * r) + &two * &self.c * r * s,
            c: self.evaluate(q, s),
        })
    }

    /// A primitive zero `(x0, y0)` of `f`, present exactly when `q` is a square.
    pub fn has_rational_root(&self) -> Option<(BigInt, BigInt)> {
        if self.a.is_zero() {
            return Some((BigInt::one(), BigInt::zero()));
        }
        let root = exact_sqrt(&self.discriminant_value())?;
        // x / y = (-b + sqrt q) / 2a
        let x = -&self.b + root;
        let y = BigInt::from(2) * &self.a;
        Some(normalize_pair(x, y))
    }

    /// `epsilon_v = (a, -a q)_v`, the Hilbert invariant of the diagonal form
    /// `<a, -q / 4a>` obtained by completing the square.
    pub fn epsilon_invariant(&self, v: &Place) -> Result<i8> {
        let q = self.discriminant_value();
        if q.is_zero() {
            return Err(Error::DegenerateForm);
        }
        if exact_sqrt(&q).is_some() {
            return Err(Error::RationalRoot(q));
        }
        let lead = self.nonzero_leading_coefficient();
        hilbert_symbol_int(&lead, &(-&lead * &q), v)
    }

    /// Leading coefficient after moving `[1:0]` off the zero locus.
    ///
    /// A zero `a` means `[1:0]` is a rational root, so callers holding a
    /// non-square discriminant never reach the shear. The shear
    /// `(x, y) -> (x, t x + y)` with the least `t >= 1` giving `f(1, t) != 0` keeps
    /// the computation total.
    fn nonzero_leading_coefficient(&self) -> BigInt {
        if !self.a.is_zero() {
            return self.a.clone();
        }
        let mut t = BigInt::one();
        loop {
            let lead = self.evaluate(&BigInt::one(), &t);
            if !lead.is_zero() {
                return lead;
            }
            t += 1;
        }
    }
}

pub(crate) fn places_of(disc: &Discriminant) -> Vec<Place> {
    std::iter::once(Place::Real)
        .chain(disc.bad_primes.iter().cloned().map(Place::Finite))
        .collect()
}

/// Divides out the gcd and fixes the sign so that `y > 0`, or `y = 0` and `x = 1`.
pub(crate) fn normalize_pair(x: BigInt, y: BigInt) -> (BigInt, BigInt) {
    let g = x.gcd(&y);
    let (mut x, mut y) = (x / &g, y / &g);
    if y.is_negative() || (y.is_zero() && x.is_negative()) {
        x = -x;
        y = -y;
    }
    (x, y)
}

impl fmt::Display for BinaryQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a form \"a,b,c\" of three integers, got {0:?}")]
pub struct ParseFormError(pub String);

impl FromStr for BinaryQuadraticForm {
    type Err = ParseFormError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseFormError(s.to_string());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(err());
        };
        let parse = |t: &str| t.parse::<BigInt>().map_err(|_| err());
        Ok(BinaryQuadraticForm::new(parse(a)?, parse(b)?, parse(c)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> BinaryQuadraticForm {
        BinaryQuadraticForm::new(a, b, c)
    }

    fn fp(p: u64) -> Place {
        Place::finite(p).unwrap()
    }

    fn mat(p: i64, q: i64, r: i64, s: i64) -> Matrix2 {
        [[p.into(), q.into()], [r.into(), s.into()]]
    }

    fn primes(d: &Discriminant) -> Vec<String> {
        d.bad_primes.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn discriminant_examples() {
        let d = form(3, 2, 5).discriminant().unwrap();
        assert_eq!(d.q, BigInt::from(-56));
        assert_eq!(d.class.to_integer(), BigInt::from(-14));
        assert_eq!(primes(&d), ["2", "7"]);

        let d = form(3, 1, 850).discriminant().unwrap();
        assert_eq!(d.q, BigInt::from(-10199));
        assert_eq!(d.class.to_integer(), BigInt::from(-10199));
        assert_eq!(primes(&d), ["2", "7", "31", "47"]);

        let d = form(1, 0, 1).discriminant().unwrap();
        assert_eq!(d.q, BigInt::from(-4));
        assert_eq!(d.class.to_integer(), BigInt::from(-1));
        assert_eq!(primes(&d), ["2"]);

        assert_eq!(form(2, 4, 2).discriminant(), Err(Error::DegenerateForm));
    }

    #[test]
    fn printed_example_form_has_positive_discriminant() {
        // 3x^2 + xy - 850y^2, as printed, is indefinite with q = 10201 = 101^2
        let printed = form(3, 1, -850);
        assert_eq!(printed.discriminant_value(), BigInt::from(10201));
        assert!(printed.has_rational_root().is_some());
    }

    #[test]
    fn bad_places_examples() {
        let names = |f: BinaryQuadraticForm| -> Vec<String> {
            f.bad_places()
                .unwrap()
                .iter()
                .map(|v| v.to_string())
                .collect()
        };
        assert_eq!(names(form(3, 2, 5)), ["inf", "2", "7"]);
        assert_eq!(names(form(1, 0, 1)), ["inf", "2"]);
        assert_eq!(names(form(3, 1, 850)), ["inf", "2", "7", "31", "47"]);
    }

    #[test]
    fn epsilon_examples() {
        let f = form(3, 2, 5);
        assert_eq!(f.epsilon_invariant(&Place::Real), Ok(1));
        assert_eq!(f.epsilon_invariant(&fp(2)), Ok(-1));
        assert_eq!(f.epsilon_invariant(&fp(7)), Ok(-1));
        assert_eq!(f.epsilon_invariant(&fp(3)), Ok(1));
        assert_eq!(f.epsilon_invariant(&fp(5)), Ok(1));

        let f = form(3, 1, 850);
        assert_eq!(f.epsilon_invariant(&Place::Real), Ok(1));
        assert_eq!(f.epsilon_invariant(&fp(2)), Ok(1));
        assert_eq!(f.epsilon_invariant(&fp(31)), Ok(-1));
    }

    #[test]
    fn epsilon_rejects_special_forms() {
        assert_eq!(
            form(2, 4, 2).epsilon_invariant(&Place::Real),
            Err(Error::DegenerateForm)
        );
        assert_eq!(
            form(1, 0, -1).epsilon_invariant(&Place::Real),
            Err(Error::RationalRoot(BigInt::from(4)))
        );
    }

    #[test]
    fn rational_roots() {
        let root = |f: BinaryQuadraticForm| {
            f.has_rational_root()
                .map(|(x, y)| (i64::try_from(x).unwrap(), i64::try_from(y).unwrap()))
        };
        assert_eq!(root(form(0, 1, 0)), Some((1, 0)));
        assert_eq!(root(form(1, 0, -1)), Some((1, 1)));
        assert_eq!(root(form(3, 2, 5)), None);
        assert_eq!(root(form(2, -5, 2)), Some((2, 1)));
        assert_eq!(root(form(-6, 1, 1)), Some((-1, 3)));
        for (a, b, c) in [(2, -5, 2), (-6, 1, 1), (4, 4, 1), (0, 0, 3), (5, 7, 0)] {
            let f = form(a, b, c);
            let (x, y) = f.has_rational_root().unwrap();
            assert!(f.evaluate(&x, &y).is_zero(), "{f}");
            assert!(x.gcd(&y).is_one());
        }
    }

    #[test]
    fn transform_examples() {
        assert_eq!(
            form(1, 0, 1).transform(&mat(1, 0, 0, 1)).unwrap(),
            form(1, 0, 1)
        );
        assert_eq!(
            form(0, 1, 0).transform(&mat(1, 0, 1, 1)).unwrap(),
            form(1, 1, 0)
        );
        assert_eq!(
            form(3, 2, 5).transform(&mat(2, 1, 1, 1)),
            Ok(form(3 * 4 + 2 * 2 + 5, 3 * 4 + 2 * 3 + 5 * 2, 3 + 2 + 5))
        );
        assert_eq!(
            form(1, 0, 1).transform(&mat(2, 0, 0, 1)),
            Err(Error::NotUnimodular(BigInt::from(2)))
        );
    }

    #[test]
    fn shear_keeps_epsilon_total() {
        // never reachable through the decider, but stays well defined
        let f = form(0, 3, 5);
        assert_eq!(f.nonzero_leading_coefficient(), BigInt::from(8));
        let f = form(0, 2, -2);
        assert_eq!(f.nonzero_leading_coefficient(), BigInt::from(-4));
    }

    #[test]
    fn parse_and_display() {
        let f: BinaryQuadraticForm = "3, 2,5".parse().unwrap();
        assert_eq!(f, form(3, 2, 5));
        assert_eq!(f.to_string(), "3,2,5");
        let big: BinaryQuadraticForm = "-123456789012345678901234567890,0,1".parse().unwrap();
        assert!(big.a.is_negative());
        assert!("3,2".parse::<BinaryQuadraticForm>().is_err());
        assert!("3,x,2".parse::<BinaryQuadraticForm>().is_err());
    }
}
