//! Brute-force ground truth for the decider.
//!
//! A point `[x:y]` with `f(x, y) != 0` is integral on the root stack over
//! `Z[1/2q]` iff `v_p(f(x, y))` is even for every prime `p` not dividing `2q`,
//! i.e. iff `|f(x, y)|` with all primes of `2q` removed is a perfect square.
//! [`search`] enumerates normalized coprime pairs shell by shell
//! (`max(|x|, |y|) = h`, then lexicographically in `(y, x)`, so `[1:0]`
//! comes first) and stops at the first hit.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{exact_sqrt, is_prime_u64, split_prime_power, FactorBudget, Prime};
use crate::decider::{decide_with_budget, Outcome, Verdict};
use crate::error::{Error, Result};
use crate::form::{normalize_pair, BinaryQuadraticForm};

/// `[x:y]` with `gcd(x, y) = 1`, normalized so that `y > 0`, or `y = 0` and `x = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    x: BigInt,
    y: BigInt,
}

impl ProjectivePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let (x, y) = normalize_pair(x, y);
        Ok(ProjectivePoint { x, y })
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn into_pair(self) -> (BigInt, BigInt) {
        (self.x, self.y)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub form: BinaryQuadraticForm,
    pub height_bound: u32,
    /// First integral point in search order.
    pub found: Option<ProjectivePoint>,
    /// First zero of `f` met before the search stopped.
    pub stacky_hit: Option<ProjectivePoint>,
    /// Normalized coprime pairs examined.
    pub candidates_tested: u64,
}

/// Whether `p` is an integral point of the root stack.
pub fn is_integral_point(f: &BinaryQuadraticForm, p: &ProjectivePoint) -> Result<bool> {
    let disc = f.discriminant()?;
    let value = f.evaluate(&p.x, &p.y);
    if value.is_zero() {
        return Err(Error::StackyPoint(p.x.clone(), p.y.clone()));
    }
    Ok(is_integral_value(&value, &disc.bad_primes))
}

fn is_integral_value(value: &BigInt, bad_primes: &[Prime]) -> bool {
    let mut rest = value.abs();
    for p in bad_primes {
        rest = split_prime_power(&rest, p.value()).1;
    }
    exact_sqrt(&rest).is_some()
}

/// Normalized coprime pairs of height exactly `h`, ordered by `(y, x)`.
fn shell_points(h: i64) -> impl Iterator<Item = (i64, i64)> {
    let infinity = (h == 1).then_some((1, 0));
    infinity
        .into_iter()
        .chain((1..h).flat_map(move |y| [(-h, y), (h, y)]))
        .chain((-h..=h).map(move |x| (x, h)))
        .filter(|&(x, y)| x.gcd(&y) == 1)
}

/// Sort key of the search order within a shell.
fn order_key(&(x, y): &(i64, i64)) -> (i64, i64) {
    (y, x)
}

fn euler_phi(mut n: u64) -> u64 {
    let mut phi = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            phi -= phi / d;
        }
        d += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Number of normalized coprime pairs of height exactly `h >= 1`.
fn shell_size(h: u64) -> u64 {
    4 * euler_phi(h)
}

/// Outcome of scanning one shell in order, stopping at its first integral point.
#[derive(Debug, Clone, Copy, Default)]
struct ShellScan {
    found: Option<(i64, i64)>,
    stacky: Option<(i64, i64)>,
}

impl ShellScan {
    /// Combines scans of disjoint pieces of a shell, each stopped at its own
    /// first integral point.
    fn merge(self, other: ShellScan) -> ShellScan {
        let earliest = |p: Option<(i64, i64)>, q: Option<(i64, i64)>| match (p, q) {
            (Some(p), Some(q)) => Some(if order_key(&p) <= order_key(&q) { p } else { q }),
            (p, q) => p.or(q),
        };
        let found = earliest(self.found, other.found);
        let stacky = earliest(self.stacky, other.stacky)
            .filter(|s| found.is_none_or(|f| order_key(s) < order_key(&f)));
        ShellScan { found, stacky }
    }
}

trait ShellScanner: Sync {
    fn scan(&self, h: i64) -> ShellScan;
}

/// Arbitrary-precision evaluation, one point at a time.
struct BigScanner<'a> {
    form: &'a BinaryQuadraticForm,
    bad_primes: &'a [Prime],
}

impl ShellScanner for BigScanner<'_> {
    fn scan(&self, h: i64) -> ShellScan {
        let mut out = ShellScan::default();
        for (x, y) in shell_points(h) {
            let value = self.form.evaluate(&BigInt::from(x), &BigInt::from(y));
            if value.is_zero() {
                out.stacky.get_or_insert((x, y));
            } else if is_integral_value(&value, self.bad_primes) {
                out.found = Some((x, y));
                break;
            }
        }
        out
    }
}

/// Removal of the odd primes of `q` from an odd machine word.
///
/// Divisibility by `p` is tested as `u * p^-1 mod 2^64 <= (2^64 - 1) / p`,
/// and the product is then the exact quotient.
trait OddStrip: Sync {
    fn strip(&self, u: u64) -> u64;
    /// Whether some prime divides `u`; cheaper than `strip` since the
    /// tests are independent.
    fn any_divides(&self, u: u64) -> bool;
}

#[inline(always)]
fn any_divides(u: u64, primes: &[(u64, u64)]) -> bool {
    primes.iter().fold(false, |hit, &(inv, limit)| {
        hit | (u.wrapping_mul(inv) <= limit)
    })
}

#[inline(always)]
fn strip_loop(mut u: u64, primes: &[(u64, u64)]) -> u64 {
    for &(inv, limit) in primes {
        loop {
            let quotient = u.wrapping_mul(inv);
            if quotient > limit {
                break;
            }
            u = quotient;
        }
    }
    u
}

impl<const N: usize> OddStrip for [(u64, u64); N] {
    #[inline(always)]
    fn strip(&self, u: u64) -> u64 {
        strip_loop(u, self)
    }
    #[inline(always)]
    fn any_divides(&self, u: u64) -> bool {
        any_divides(u, self)
    }
}

impl OddStrip for Vec<(u64, u64)> {
    fn strip(&self, u: u64) -> u64 {
        strip_loop(u, self)
    }
    fn any_divides(&self, u: u64) -> bool {
        any_divides(u, self)
    }
}

/// Machine-word scanner for forms whose values on the search box fit in `i64`.
///
/// Values are updated by finite differences along the straight pieces of
/// each shell; powers of 2 go with a shift.
struct FastScanner<S> {
    a: i64,
    b: i64,
    c: i64,
    odd_primes: S,
}

/// `(p^-1 mod 2^64, (2^64 - 1) / p)` for the odd bad primes, if all fit.
fn inverse_table(bad_primes: &[Prime]) -> Option<Vec<(u64, u64)>> {
    bad_primes
        .iter()
        .filter(|p| !p.is_two())
        .map(|p| {
            let p = p.to_u64()?;
            let mut inv = p;
            for _ in 0..6 {
                inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
            }
            debug_assert_eq!(p.wrapping_mul(inv), 1);
            Some((inv, u64::MAX / p))
        })
        .collect()
}

/// Coefficients as `i64` when `|f| <= (|a| + |b| + |c|) (H + 1)^2` and the
/// finite differences leave headroom in `i64`.
fn word_coefficients(f: &BinaryQuadraticForm, height: u32) -> Option<(i64, i64, i64)> {
    let (a, b, c) = (f.a.to_i64()?, f.b.to_i64()?, f.c.to_i64()?);
    let h = i128::from(height) + 1;
    let reach = (i128::from(a).abs() + i128::from(b).abs() + i128::from(c).abs()) * 4 * h * h;
    (reach <= i128::from(i64::MAX)).then_some((a, b, c))
}

impl<S: OddStrip> FastScanner<S> {
    #[inline(always)]
    fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    #[inline(always)]
    fn is_integral(&self, value: i64) -> bool {
        let u = value.unsigned_abs();
        let odd = u >> u.trailing_zeros();
        if self.odd_primes.any_divides(odd) {
            is_odd_square(self.odd_primes.strip(odd))
        } else {
            is_odd_square(odd)
        }
    }

    /// Scans `len` points from `(x, y)` stepping in x (`along_x`) or in y,
    /// up to the first integral point.
    #[inline(always)]
    fn scan_line(&self, (x, y): (i64, i64), along_x: bool, len: i64) -> ShellScan {
        let mut out = ShellScan::default();
        let mut value = self.eval(x, y);
        let (mut step, curvature) = if along_x {
            (self.a * (2 * x + 1) + self.b * y, 2 * self.a)
        } else {
            (self.b * x + self.c * (2 * y + 1), 2 * self.c)
        };
        for i in 0..len {
            if value == 0 || self.is_integral(value) {
                let p = if along_x { (x + i, y) } else { (x, y + i) };
                // a non-primitive hit implies a primitive one in an earlier shell
                if p.0.gcd(&p.1) == 1 {
                    if value != 0 {
                        out.found = Some(p);
                        return out;
                    }
                    out.stacky.get_or_insert(p);
                }
            }
            value += step;
            step += curvature;
        }
        out
    }
}

impl<S: OddStrip> ShellScanner for FastScanner<S> {
    fn scan(&self, h: i64) -> ShellScan {
        let top = self.scan_line((-h, h), true, 2 * h + 1);
        let sides = self
            .scan_line((-h, 1), false, h - 1)
            .merge(self.scan_line((h, 1), false, h - 1))
            .merge(top);
        if h == 1 {
            self.scan_line((1, 0), true, 1).merge(sides)
        } else {
            sides
        }
    }
}

/// `s` odd; quadratic-residue filters before the exact root.
#[inline(always)]
fn is_odd_square(s: u64) -> bool {
    if s & 7 != 1 {
        return false;
    }
    const fn residue_mask(m: u64) -> u128 {
        let mut mask = 0u128;
        let mut i = 0;
        while i < m {
            mask |= 1 << ((i * i) % m);
            i += 1;
        }
        mask
    }
    const MASK_63: u128 = residue_mask(63);
    const MASK_65: u128 = residue_mask(65);
    const MASK_11: u128 = residue_mask(11);
    if MASK_63 >> (s % 63) & 1 == 0 || MASK_65 >> (s % 65) & 1 == 0 || MASK_11 >> (s % 11) & 1 == 0
    {
        return false;
    }
    let mut r = (s as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > s) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= s) {
        r += 1;
    }
    r * r == s
}

const FIRST_BLOCK: i64 = 32;
const MAX_BLOCK: i64 = 1024;

fn run_search(f: &BinaryQuadraticForm, height: u32, scanner: &dyn ShellScanner) -> SearchReport {
    let height_i = i64::from(height);
    let mut report = SearchReport {
        form: f.clone(),
        height_bound: height,
        found: None,
        stacky_hit: None,
        candidates_tested: 0,
    };
    let mut start = 1i64;
    let mut block = FIRST_BLOCK;
    while start <= height_i {
        let end = (start + block - 1).min(height_i);
        let scans: Vec<ShellScan> = (start as u32..end as u32 + 1)
            .into_par_iter()
            .with_min_len(4)
            .map(|h| scanner.scan(i64::from(h)))
            .collect();
        for (h, scan) in (start..=end).zip(scans) {
            if report.stacky_hit.is_none() {
                report.stacky_hit = scan
                    .stacky
                    .map(|(x, y)| ProjectivePoint::new(x, y).expect("nonzero shell point"));
            }
            match scan.found {
                Some(point) => {
                    let position = shell_points(h).position(|p| p == point).unwrap();
                    report.candidates_tested += position as u64 + 1;
                    report.found = Some(ProjectivePoint::new(point.0, point.1).unwrap());
                    return report;
                }
                None => report.candidates_tested += shell_size(h as u64),
            }
        }
        start = end + 1;
        block = (block * 2).min(MAX_BLOCK);
    }
    report
}

/// Exhaustive search over normalized coprime pairs with `max(|x|, |y|) <= height`.
pub fn search(f: &BinaryQuadraticForm, height: u32) -> Result<SearchReport> {
    search_with_budget(f, height, &FactorBudget::default())
}

pub fn search_with_budget(
    f: &BinaryQuadraticForm,
    height: u32,
    budget: &FactorBudget,
) -> Result<SearchReport> {
    let disc = f.discriminant_with_budget(budget)?;
    let big = BigScanner {
        form: f,
        bad_primes: &disc.bad_primes,
    };
    let (Some((a, b, c)), Some(table)) = (
        word_coefficients(f, height),
        inverse_table(&disc.bad_primes),
    ) else {
        return Ok(run_search(f, height, &big));
    };
    fn fixed<const N: usize>(table: &[(u64, u64)]) -> [(u64, u64); N] {
        table.try_into().unwrap()
    }
    let report = match table.len() {
        0 => run_search(
            f,
            height,
            &FastScanner {
                a,
                b,
                c,
                odd_primes: fixed::<0>(&table),
            },
        ),
        1 => run_search(
            f,
            height,
            &FastScanner {
                a,
                b,
                c,
                odd_primes: fixed::<1>(&table),
            },
        ),
        2 => run_search(
            f,
            height,
            &FastScanner {
                a,
                b,
                c,
                odd_primes: fixed::<2>(&table),
            },
        ),
        3 => run_search(
            f,
            height,
            &FastScanner {
                a,
                b,
                c,
                odd_primes: fixed::<3>(&table),
            },
        ),
        4 => run_search(
            f,
            height,
            &FastScanner {
                a,
                b,
                c,
                odd_primes: fixed::<4>(&table),
            },
        ),
        _ => run_search(
            f,
            height,
            &FastScanner {
                a,
                b,
                c,
                odd_primes: table,
            },
        ),
    };
    Ok(report)
}

/// Shares exhausted searches between forms related by a symmetry of the
/// search box.
///
/// `(x, y) -> (-x, y)` and `(x, y) -> (y, x)` permute the normalized pairs of
/// each height and send `f` to `(a, -b, c)` and `(c, b, a)`; negating `f`
/// changes no valuation. All eight images have the same discriminant, so a
/// search that found nothing for one of them found nothing for all.
#[derive(Debug, Default)]
pub struct SearchMemo {
    exhausted: Mutex<HashMap<(BigInt, BigInt, BigInt, u32), u64>>,
}

impl SearchMemo {
    pub fn new() -> Self {
        Self::default()
    }

    fn key(f: &BinaryQuadraticForm, height: u32) -> (BigInt, BigInt, BigInt, u32) {
        let (a, b, c) = symmetry_class(f);
        (a, b, c, height)
    }

    pub fn len(&self) -> usize {
        self.exhausted.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The least of the eight images of `f` that share its search results, see
/// [`SearchMemo`].
pub fn symmetry_class(f: &BinaryQuadraticForm) -> (BigInt, BigInt, BigInt) {
    let (a, b, c) = (&f.a, &f.b, &f.c);
    let images = [
        (a.clone(), b.clone(), c.clone()),
        (a.clone(), -b, c.clone()),
        (c.clone(), b.clone(), a.clone()),
        (c.clone(), -b, a.clone()),
    ];
    images
        .into_iter()
        .flat_map(|(a, b, c)| [(-&a, -&b, -&c), (a, b, c)])
        .min()
        .unwrap()
}

/// [`search`], consulting and feeding `memo` for searches that find nothing.
pub fn search_memoized(
    f: &BinaryQuadraticForm,
    height: u32,
    memo: &SearchMemo,
) -> Result<SearchReport> {
    let key = SearchMemo::key(f, height);
    if let Some(&candidates_tested) = memo.exhausted.lock().unwrap().get(&key) {
        f.discriminant()?;
        return Ok(SearchReport {
            form: f.clone(),
            height_bound: height,
            found: None,
            stacky_hit: None,
            candidates_tested,
        });
    }
    let report = search(f, height)?;
    if report.found.is_none() && report.stacky_hit.is_none() {
        memo.exhausted
            .lock()
            .unwrap()
            .insert(key, report.candidates_tested);
    }
    Ok(report)
}

/// Checks that for every prime `p <= prime_bound` not dividing `2q` some
/// `[x:y]` over `F_p` has `f(x, y) != 0 mod p`.
pub fn verify_local(f: &BinaryQuadraticForm, prime_bound: u64) -> Result<bool> {
    let disc = f.discriminant()?;
    let q = &disc.q;
    for p in (3..=prime_bound).filter(|&p| is_prime_u64(p)) {
        let pb = BigInt::from(p);
        if q.is_multiple_of(&pb) {
            continue;
        }
        let a = f.a.mod_floor(&pb).to_u64().unwrap();
        let b = f.b.mod_floor(&pb).to_u64().unwrap();
        let c = f.c.mod_floor(&pb).to_u64().unwrap();
        let nonzero = a != 0 || (0..p).any(|t| (a * t % p * t + b * t + c) % p != 0);
        if !nonzero {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Consistency {
    Consistent,
    /// Obstruction verdict but an integral point was found.
    Contradiction,
    /// Existence verdict, no point up to the height bound.
    Unresolved,
    /// Zero discriminant; nothing to search.
    Degenerate,
}

impl Consistency {
    pub fn as_str(self) -> &'static str {
        match self {
            Consistency::Consistent => "consistent",
            Consistency::Contradiction => "CONTRADICTION",
            Consistency::Unresolved => "UNRESOLVED",
            Consistency::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for Consistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    /// Verdict with the witness point filled from the search when one was found.
    pub verdict: Verdict,
    pub search: Option<SearchReport>,
    pub status: Consistency,
}

pub fn cross_validate(f: &BinaryQuadraticForm, height: u32) -> Result<CrossValidation> {
    cross_validate_memoized(f, height, &SearchMemo::new())
}

pub fn cross_validate_memoized(
    f: &BinaryQuadraticForm,
    height: u32,
    memo: &SearchMemo,
) -> Result<CrossValidation> {
    let mut verdict = decide_with_budget(f, &FactorBudget::default())?;
    if verdict.outcome == Outcome::DegenerateInput {
        return Ok(CrossValidation {
            verdict,
            search: None,
            status: Consistency::Degenerate,
        });
    }
    let report = search_memoized(f, height, memo)?;
    let status = match (verdict.outcome, &report.found, &report.stacky_hit) {
        (Outcome::BrauerObstruction, Some(_), _) => Consistency::Contradiction,
        (Outcome::BrauerObstruction, None, _) => Consistency::Consistent,
        (_, None, None) => Consistency::Unresolved,
        _ => Consistency::Consistent,
    };
    if verdict.outcome == Outcome::IntegralPointExists && verdict.witness_point.is_none() {
        verdict.witness_point = report
            .found
            .as_ref()
            .or(report.stacky_hit.as_ref())
            .map(|p| (p.x.clone(), p.y.clone()));
    }
    Ok(CrossValidation {
        verdict,
        search: Some(report),
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn form(a: i64, b: i64, c: i64) -> BinaryQuadraticForm {
        BinaryQuadraticForm::new(a, b, c)
    }

    fn pt(x: i64, y: i64) -> ProjectivePoint {
        ProjectivePoint::new(x, y).unwrap()
    }

    #[test]
    fn point_normalization() {
        assert_eq!(pt(-2, -4), pt(1, 2));
        assert_eq!(pt(-3, 0), pt(1, 0));
        assert_eq!(pt(4, -6), pt(-2, 3));
        assert_eq!(ProjectivePoint::new(0, 0), Err(Error::ZeroPoint));
        assert_eq!(pt(-2, 3).to_string(), "[-2:3]");
    }

    #[test]
    fn integrality_examples() {
        assert_eq!(is_integral_point(&form(3, 2, 5), &pt(1, 1)), Ok(false));
        assert_eq!(is_integral_point(&form(1, 0, 1), &pt(1, 0)), Ok(true));
        assert_eq!(is_integral_point(&form(3, 2, 5), &pt(1, 0)), Ok(false));
        // 1 + 49 = 50 = 2 * 5^2
        assert_eq!(is_integral_point(&form(1, 0, 1), &pt(1, 7)), Ok(true));
        assert_eq!(is_integral_point(&form(1, 0, 1), &pt(1, 2)), Ok(false));
        assert_eq!(
            is_integral_point(&form(0, 1, 0), &pt(1, 0)),
            Err(Error::StackyPoint(1.into(), 0.into()))
        );
    }

    #[test]
    fn shell_enumeration() {
        let shell1: Vec<_> = shell_points(1).collect();
        assert_eq!(shell1, [(1, 0), (-1, 1), (0, 1), (1, 1)]);
        for h in 1..60 {
            let pts: Vec<_> = shell_points(h).collect();
            assert_eq!(pts.len() as u64, shell_size(h as u64), "h = {h}");
            assert!(pts.windows(2).all(|w| order_key(&w[0]) < order_key(&w[1])));
            let mut brute = Vec::new();
            for y in 0..=h {
                for x in -h..=h {
                    if x.abs().max(y) == h && x.gcd(&y) == 1 && (y > 0 || x == 1) {
                        brute.push((x, y));
                    }
                }
            }
            assert_eq!(pts, brute);
        }
    }

    #[test]
    fn odd_square_filter() {
        for s in (1u64..200_000).step_by(2) {
            let r = (s as f64).sqrt().round() as u64;
            assert_eq!(is_odd_square(s), r * r == s, "{s}");
        }
        let big = (1u64 << 31) - 1;
        assert!(is_odd_square(big * big));
        assert!(!is_odd_square(big * big + 2));
    }

    #[test]
    fn fast_and_big_scanners_agree() {
        for (a, b, c) in [
            (1, 0, 1),
            (3, 2, 5),
            (0, 1, 0),
            (2, -5, 2),
            (-7, 3, 11),
            (6, 6, -5),
        ] {
            let f = form(a, b, c);
            let bad = f.discriminant().unwrap().bad_primes;
            let (a, b, c) = word_coefficients(&f, 40).unwrap();
            let fast = FastScanner {
                a,
                b,
                c,
                odd_primes: inverse_table(&bad).unwrap(),
            };
            let big = BigScanner {
                form: &f,
                bad_primes: &bad,
            };
            for h in 1..=40 {
                let (s1, s2) = (fast.scan(h), big.scan(h));
                assert_eq!((s1.found, s1.stacky), (s2.found, s2.stacky), "{f} h={h}");
            }
        }
    }

    #[test]
    fn search_examples() {
        let r = search(&form(1, 0, 1), 1).unwrap();
        assert_eq!(r.found, Some(pt(1, 0)));
        assert_eq!(r.candidates_tested, 1);

        let r = search(&form(0, 1, 0), 1).unwrap();
        assert_eq!(r.stacky_hit, Some(pt(1, 0)));
        assert_eq!(r.found, Some(pt(-1, 1)));
        assert_eq!(r.candidates_tested, 2);

        // (x + y)(3x + 5y): 3 at [1:0], 0 at [-1:1], 5 at [0:1], 16 at [1:1]
        let r = search(&form(3, 8, 5), 1).unwrap();
        assert_eq!(r.stacky_hit, Some(pt(-1, 1)));
        assert_eq!(r.found, Some(pt(1, 1)));
        assert_eq!(r.candidates_tested, 4);

        let r = search(&form(3, 2, 5), 300).unwrap();
        assert_eq!(r.found, None);
        let expected: u64 = (1..=300).map(shell_size).sum();
        assert_eq!(r.candidates_tested, expected);
    }

    #[test]
    fn search_is_deterministic() {
        let f = form(5, -3, 7);
        assert_eq!(search(&f, 200).unwrap(), search(&f, 200).unwrap());
    }

    #[test]
    fn big_coefficients_use_the_exact_path() {
        let huge = BigInt::from(10).pow(30);
        let f = BinaryQuadraticForm::new(huge.clone(), 0, huge);
        let r = search(&f, 3).unwrap();
        // 10^30 at [1:0], all primes bad
        assert_eq!(r.found, Some(pt(1, 0)));
    }

    #[test]
    fn memo_shares_symmetric_searches() {
        let memo = SearchMemo::new();
        let r1 = search_memoized(&form(3, 2, 5), 100, &memo).unwrap();
        assert_eq!(memo.len(), 1);
        for f in [form(3, -2, 5), form(5, 2, 3), form(-5, 2, -3)] {
            let r = search_memoized(&f, 100, &memo).unwrap();
            assert_eq!(r, search(&f, 100).unwrap());
            assert_eq!(r.candidates_tested, r1.candidates_tested);
        }
        assert_eq!(memo.len(), 1);
    }

    #[test]
    fn local_solvability() {
        assert_eq!(verify_local(&form(3, 2, 5), 100), Ok(true));
        assert_eq!(verify_local(&form(1, 0, 1), 100), Ok(true));
        for (a, b, c) in [(3, 0, 3), (0, 3, 0), (3, 3, 3), (1, 1, 1)] {
            assert_eq!(verify_local(&form(a, b, c), 200), Ok(true), "{a},{b},{c}");
        }
        assert_eq!(verify_local(&form(2, 4, 2), 10), Err(Error::DegenerateForm));
    }

    #[test]
    fn cross_validation_examples() {
        let cv = cross_validate(&form(3, 2, 5), 300).unwrap();
        assert_eq!(cv.status, Consistency::Consistent);
        assert_eq!(cv.verdict.outcome, Outcome::BrauerObstruction);

        let cv = cross_validate(&form(1, 0, 1), 10).unwrap();
        assert_eq!(cv.status, Consistency::Consistent);
        assert_eq!(
            cv.verdict.witness_point,
            Some((BigInt::one(), BigInt::zero()))
        );

        // a rational root is its own witness
        let cv = cross_validate(&form(0, 1, 0), 10).unwrap();
        assert_eq!(cv.status, Consistency::Consistent);
        assert_eq!(
            cv.verdict.witness_point,
            Some((BigInt::one(), BigInt::zero()))
        );

        let cv = cross_validate(&form(2, 4, 2), 10).unwrap();
        assert_eq!(cv.status, Consistency::Degenerate);
        assert!(cv.search.is_none());
    }
}
