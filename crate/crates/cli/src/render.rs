use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use stacky_core::decider::{LocalMembership, Outcome, Verdict};
use stacky_core::invariants::{d_of_curve, genus, is_simply_connected, pic0_group};
use stacky_core::oracle::{Consistency, CrossValidation, SearchReport};

use crate::parse::InvariantsInput;

fn sign(e: i8) -> &'static str {
    if e > 0 {
        "+1"
    } else {
        "-1"
    }
}

/// Human-checkable certificate: the verdict, its witness and the per-place
/// epsilon table, followed by the search result when there is one.
pub fn certificate(cv: &CrossValidation) -> String {
    let v = &cv.verdict;
    let mut out = String::new();
    let _ = writeln!(out, "form      {}", v.form);
    let _ = writeln!(out, "q         {}", v.q);
    let _ = writeln!(out, "verdict   {}", v.outcome);
    if let Some(q_class) = &v.q_class {
        let _ = writeln!(out, "q-class   {}", q_class);
    }
    if let Some(order) = v.beh_order {
        let _ = writeln!(out, "Beh order {order}");
    }
    if let Some(d) = &v.witness_class {
        let _ = writeln!(out, "witness   d = {d}");
    }
    if !v.evidence.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "{:<8}{:>5}  d", "place", "eps");
        for e in &v.evidence {
            let membership = match e.membership {
                Some(LocalMembership::Square) => "square",
                Some(LocalMembership::QSquare) => "q * square",
                None => "-",
            };
            let _ = writeln!(
                out,
                "{:<8}{:>5}  {membership}",
                e.place.to_string(),
                sign(e.epsilon)
            );
        }
        if v.outcome == Outcome::BrauerObstruction {
            let product = |m: LocalMembership| -> i8 {
                v.evidence
                    .iter()
                    .filter(|e| e.membership == Some(m))
                    .map(|e| e.epsilon)
                    .product()
            };
            let _ = writeln!(
                out,
                "eps product where d is not a square: {}",
                sign(product(LocalMembership::QSquare))
            );
            let _ = writeln!(
                out,
                "eps product where d is a square:     {}",
                sign(product(LocalMembership::Square))
            );
        }
    }
    if let Some(report) = &cv.search {
        let _ = writeln!(out);
        out.push_str(&search_text(report));
    }
    if cv.status == Consistency::Unresolved {
        let _ = writeln!(
            out,
            "UNRESOLVED: no integral point up to height {}; try a larger --height",
            cv.search.as_ref().map_or(0, |r| r.height_bound)
        );
    } else if cv.status == Consistency::Contradiction {
        let _ = writeln!(
            out,
            "CONTRADICTION: the search found a point despite the obstruction"
        );
    }
    out
}

pub fn search_text(report: &SearchReport) -> String {
    let mut out = String::new();
    if let Some(p) = &report.stacky_hit {
        let _ = writeln!(out, "stacky point {p}");
    }
    match &report.found {
        Some(p) => {
            let value = report.form.evaluate(p.x(), p.y());
            let _ = writeln!(out, "integral point {p}  f = {value}");
        }
        None => {
            let _ = writeln!(
                out,
                "no integral point with height <= {}",
                report.height_bound
            );
        }
    }
    let _ = writeln!(out, "candidates tested {}", report.candidates_tested);
    out
}

fn int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are JSON numbers"))
}

/// The structured record of a decision.
pub fn verdict_json(v: &Verdict, height_bound: Option<u32>, status: Option<Consistency>) -> Value {
    let mut epsilon = Map::new();
    for e in &v.evidence {
        epsilon.insert(e.place.to_string(), json!(e.epsilon));
    }
    let (x, y) = match &v.witness_point {
        Some((x, y)) => (int(x), int(y)),
        None => (Value::Null, Value::Null),
    };
    json!({
        "a": int(&v.form.a),
        "b": int(&v.form.b),
        "c": int(&v.form.c),
        "q": int(&v.q),
        "outcome": v.outcome.as_str(),
        "witness_class": v.witness_class.as_ref().map(|d| int(&d.to_integer())),
        "witness_x": x,
        "witness_y": y,
        "beh_order": v.beh_order,
        "epsilon": epsilon,
        "height_bound": height_bound,
        "status": status.map(Consistency::as_str),
    })
}

pub fn invariants_text(input: &InvariantsInput) -> String {
    let sig = input.signature();
    let points = input.points();
    let mut out = String::new();
    let _ = writeln!(out, "signature         {sig}");
    let _ = writeln!(out, "genus             {}", genus(&sig));
    let _ = writeln!(out, "d_X               {}", d_of_curve(&points));
    let _ = writeln!(out, "Pic^0             {}", pic0_group(&points));
    let _ = writeln!(out, "simply connected  {}", is_simply_connected(&sig));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use stacky_core::form::BinaryQuadraticForm;
    use stacky_core::oracle::cross_validate;

    #[test]
    fn json_fields() {
        let cv = cross_validate(&BinaryQuadraticForm::new(3, 2, 5), 50).unwrap();
        let value = verdict_json(&cv.verdict, Some(50), Some(cv.status));
        assert_eq!(
            value.to_string(),
            r#"{"a":3,"b":2,"c":5,"q":-56,"outcome":"obstruction","witness_class":-7,"witness_x":null,"witness_y":null,"beh_order":2,"epsilon":{"inf":1,"2":-1,"7":-1},"height_bound":50,"status":"consistent"}"#
        );
    }

    #[test]
    fn certificate_table() {
        let cv = cross_validate(&BinaryQuadraticForm::new(3, 2, 5), 50).unwrap();
        let text = certificate(&cv);
        assert!(text.contains("witness   d = -7"), "{text}");
        assert!(text.contains("inf        +1  q * square"), "{text}");
        assert!(text.contains("2          -1  square"), "{text}");
        assert!(text.contains("7          -1  q * square"), "{text}");
    }

    #[test]
    fn invariants() {
        let text = invariants_text(&InvariantsInput::parse("(0;2,2)").unwrap());
        assert!(text.contains("genus             1/2"));
        assert!(text.contains("Pic^0             Z/2"));
        assert!(text.contains("simply connected  false"));
    }
}
