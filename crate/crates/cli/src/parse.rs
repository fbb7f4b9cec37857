//! Text syntax: forms `a,b,c`, signatures `(g; e1, ..., er)`, stacky loci
//! `(deg,e);(deg,e);...` and inclusive ranges `L:U`.

use std::ops::RangeInclusive;

use stacky_core::form::BinaryQuadraticForm;
use stacky_core::invariants::{Signature, StackyLocusPoint};

use crate::CliError;

pub fn parse_form(text: &str) -> Result<BinaryQuadraticForm, CliError> {
    Ok(text.parse()?)
}

fn number<T: std::str::FromStr>(token: &str, what: &str) -> Result<T, CliError> {
    token
        .trim()
        .parse()
        .map_err(|_| CliError::Parse(format!("bad {what} {:?}", token.trim())))
}

fn parenthesized<'a>(text: &'a str, what: &str) -> Result<&'a str, CliError> {
    text.trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| CliError::Parse(format!("expected {what} in parentheses, got {text:?}")))
}

pub fn parse_signature(text: &str) -> Result<Signature, CliError> {
    let inner = parenthesized(text, "a signature")?;
    let (g, orders) = inner
        .split_once(';')
        .ok_or_else(|| CliError::Parse(format!("signature {text:?} has no ';'")))?;
    let g = number(g, "coarse genus")?;
    let orders = orders
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| number(t, "stabilizer order"))
        .collect::<Result<Vec<u64>, _>>()?;
    Ok(Signature::new(g, orders)?)
}

pub fn parse_points(text: &str) -> Result<Vec<StackyLocusPoint>, CliError> {
    text.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let inner = parenthesized(t, "a point (deg,e)")?;
            let (deg, e) = inner
                .split_once(',')
                .ok_or_else(|| CliError::Parse(format!("point {t:?} is not (deg,e)")))?;
            Ok(StackyLocusPoint::new(
                number(deg, "residue degree")?,
                number(e, "stabilizer order")?,
            )?)
        })
        .collect()
}

/// Input of the `invariants` command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantsInput {
    Signature(Signature),
    Points(Vec<StackyLocusPoint>),
}

impl InvariantsInput {
    /// A single parenthesized group with a `;` is a signature; anything else
    /// a list of points.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        if text.matches('(').count() == 1 && text.contains(';') {
            parse_signature(text).map(InvariantsInput::Signature)
        } else {
            parse_points(text).map(InvariantsInput::Points)
        }
    }

    /// Stacky locus over `P^1`; a signature gives rational points.
    pub fn points(&self) -> Vec<StackyLocusPoint> {
        match self {
            InvariantsInput::Signature(sig) => sig.degree_one_points(),
            InvariantsInput::Points(points) => points.clone(),
        }
    }

    /// Geometric signature: a point of degree `k` splits into `k` points.
    pub fn signature(&self) -> Signature {
        match self {
            InvariantsInput::Signature(sig) => sig.clone(),
            InvariantsInput::Points(points) => Signature::new(
                0,
                points.iter().flat_map(|p| {
                    std::iter::repeat_n(p.stabilizer_order(), p.residue_degree() as usize)
                }),
            )
            .expect("orders are at least 2"),
        }
    }
}

/// `L:U`, inclusive; `L > U` is an empty range.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>, CliError> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| CliError::Parse(format!("expected a range L:U, got {text:?}")))?;
    Ok(number(lo, "range bound")?..=number(hi, "range bound")?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        let sig = parse_signature("(0; 2, 3, 5)").unwrap();
        assert_eq!(sig.orders(), [2, 3, 5]);
        assert_eq!(
            parse_signature("(0;)").unwrap(),
            Signature::new(0, []).unwrap()
        );
        assert_eq!(parse_signature(" (1;2,2) ").unwrap().g_coarse(), 1);
        assert!(parse_signature("0;2").is_err());
        assert!(parse_signature("(0;2,x)").is_err());
        assert!(parse_signature("(0;0)").is_err());
    }

    #[test]
    fn points() {
        let pts = parse_points("(1,2);(2,3)").unwrap();
        assert_eq!(
            pts,
            [
                StackyLocusPoint::new(1, 2).unwrap(),
                StackyLocusPoint::new(2, 3).unwrap()
            ]
        );
        assert!(parse_points("(1,1)").is_err());
        assert!(parse_points("(1;2)").is_err());
        assert_eq!(parse_points("").unwrap(), []);
    }

    #[test]
    fn invariants_input() {
        assert!(matches!(
            InvariantsInput::parse("(0;2,2)").unwrap(),
            InvariantsInput::Signature(_)
        ));
        let input = InvariantsInput::parse("(2,2);(1,3)").unwrap();
        assert!(matches!(input, InvariantsInput::Points(_)));
        assert_eq!(input.signature().orders(), [2, 2, 3]);
        assert!(matches!(
            InvariantsInput::parse("(1,2)").unwrap(),
            InvariantsInput::Points(_)
        ));
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-5:5").unwrap(), -5..=5);
        assert!(parse_range("3:1").unwrap().is_empty());
        assert!(parse_range("3").is_err());
    }

    #[test]
    fn forms() {
        assert_eq!(
            parse_form("3,-2,5").unwrap(),
            BinaryQuadraticForm::new(3, -2, 5)
        );
        assert!(parse_form("3,2").is_err());
    }
}
