//! CSV catalogs, one row per non-degenerate form of a scan.
//!
//! The epsilon column lists `place:sign` pairs separated by `;`, for example
//! `inf:+1;2:-1;7:-1`; missing optional values are empty cells.

use std::io::{Read, Write};

use num_bigint::BigInt;
use stacky_core::arith::Place;
use stacky_core::decider::Outcome;
use stacky_core::oracle::{Consistency, CrossValidation};

use crate::CliError;

pub const HEADER: [&str; 11] = [
    "a",
    "b",
    "c",
    "q",
    "outcome",
    "witness_class",
    "witness_x",
    "witness_y",
    "beh_order",
    "epsilon",
    "status",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub q: BigInt,
    pub outcome: Outcome,
    pub witness_class: Option<BigInt>,
    pub witness_point: Option<(BigInt, BigInt)>,
    pub beh_order: Option<usize>,
    pub epsilon: Vec<(Place, i8)>,
    pub status: Consistency,
}

impl CatalogRow {
    pub fn from_cross_validation(cv: &CrossValidation) -> Self {
        let v = &cv.verdict;
        CatalogRow {
            a: v.form.a.clone(),
            b: v.form.b.clone(),
            c: v.form.c.clone(),
            q: v.q.clone(),
            outcome: v.outcome,
            witness_class: v.witness_class.as_ref().map(|d| d.to_integer()),
            witness_point: v.witness_point.clone(),
            beh_order: v.beh_order,
            epsilon: v
                .evidence
                .iter()
                .map(|e| (e.place.clone(), e.epsilon))
                .collect(),
            status: cv.status,
        }
    }

    pub fn to_record(&self) -> Vec<String> {
        let opt = |x: Option<String>| x.unwrap_or_default();
        let epsilon = self
            .epsilon
            .iter()
            .map(|(v, e)| format!("{v}:{e:+}"))
            .collect::<Vec<_>>()
            .join(";");
        vec![
            self.a.to_string(),
            self.b.to_string(),
            self.c.to_string(),
            self.q.to_string(),
            self.outcome.as_str().to_string(),
            opt(self.witness_class.as_ref().map(BigInt::to_string)),
            opt(self.witness_point.as_ref().map(|p| p.0.to_string())),
            opt(self.witness_point.as_ref().map(|p| p.1.to_string())),
            opt(self.beh_order.map(|n| n.to_string())),
            epsilon,
            self.status.as_str().to_string(),
        ]
    }

    pub fn from_record(record: &csv::StringRecord) -> Result<Self, CliError> {
        if record.len() != HEADER.len() {
            return Err(bad(format!(
                "expected {} fields, got {}",
                HEADER.len(),
                record.len()
            )));
        }
        let int = |i: usize| -> Result<BigInt, CliError> {
            record[i]
                .parse()
                .map_err(|_| bad(format!("{}: not an integer: {:?}", HEADER[i], &record[i])))
        };
        let opt_int = |i: usize| -> Result<Option<BigInt>, CliError> {
            if record[i].is_empty() {
                Ok(None)
            } else {
                int(i).map(Some)
            }
        };
        let witness_point = match (opt_int(6)?, opt_int(7)?) {
            (Some(x), Some(y)) => Some((x, y)),
            (None, None) => None,
            _ => return Err(bad("witness point needs both coordinates".into())),
        };
        let beh_order = match &record[8] {
            "" => None,
            n => Some(n.parse().map_err(|_| bad(format!("beh_order: {n:?}")))?),
        };
        Ok(CatalogRow {
            a: int(0)?,
            b: int(1)?,
            c: int(2)?,
            q: int(3)?,
            outcome: parse_outcome(&record[4])?,
            witness_class: opt_int(5)?,
            witness_point,
            beh_order,
            epsilon: parse_epsilon(&record[9])?,
            status: parse_status(&record[10])?,
        })
    }
}

fn bad(message: String) -> CliError {
    CliError::Parse(format!("catalog row: {message}"))
}

fn parse_outcome(s: &str) -> Result<Outcome, CliError> {
    [
        Outcome::IntegralPointExists,
        Outcome::BrauerObstruction,
        Outcome::DegenerateInput,
    ]
    .into_iter()
    .find(|o| o.as_str() == s)
    .ok_or_else(|| bad(format!("unknown outcome {s:?}")))
}

fn parse_status(s: &str) -> Result<Consistency, CliError> {
    [
        Consistency::Consistent,
        Consistency::Contradiction,
        Consistency::Unresolved,
        Consistency::Degenerate,
    ]
    .into_iter()
    .find(|c| c.as_str() == s)
    .ok_or_else(|| bad(format!("unknown status {s:?}")))
}

fn parse_place(s: &str) -> Result<Place, CliError> {
    if s == "inf" {
        return Ok(Place::Real);
    }
    let p: BigInt = s.parse().map_err(|_| bad(format!("bad place {s:?}")))?;
    Ok(Place::finite(p)?)
}

fn parse_epsilon(s: &str) -> Result<Vec<(Place, i8)>, CliError> {
    s.split(';')
        .filter(|t| !t.is_empty())
        .map(|entry| {
            let (v, e) = entry
                .split_once(':')
                .ok_or_else(|| bad(format!("epsilon entry {entry:?}")))?;
            let e = match e {
                "+1" => 1,
                "-1" => -1,
                _ => return Err(bad(format!("epsilon sign {e:?}"))),
            };
            Ok((parse_place(v)?, e))
        })
        .collect()
}

pub fn write_catalog<W: Write>(out: W, rows: &[CatalogRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        w.write_record(row.to_record())?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_catalog<R: Read>(input: R) -> Result<Vec<CatalogRow>, CliError> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(HEADER) {
        return Err(bad(format!("unexpected header {header:?}")));
    }
    r.records()
        .map(|rec| CatalogRow::from_record(&rec?))
        .collect()
}
