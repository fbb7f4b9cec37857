//! Subcommands as functions of their arguments, returning the exit code.

use std::io::Write;

use stacky_core::decider::Outcome;
use stacky_core::oracle::{cross_validate, search, Consistency};

use crate::parse::{parse_form, InvariantsInput};
use crate::render::{certificate, invariants_text, search_text, verdict_json};
use crate::scan::{run_scan, write_output, ScanJob};
use crate::CliError;

pub const EXIT_EXISTS: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_OBSTRUCTION: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
/// A scan found an integral point on an obstructed form.
pub const EXIT_CONTRADICTION: i32 = 4;

pub fn exit_code(outcome: Outcome) -> i32 {
    match outcome {
        Outcome::IntegralPointExists => EXIT_EXISTS,
        Outcome::BrauerObstruction => EXIT_OBSTRUCTION,
        Outcome::DegenerateInput => EXIT_DEGENERATE,
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

/// Decides `text` and cross-checks it with a search up to `height`.
pub fn cmd_decide(
    text: &str,
    json: bool,
    height: u32,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let f = parse_form(text)?;
    let cv = cross_validate(&f, height)?;
    if json {
        let height_bound = cv.search.as_ref().map(|r| r.height_bound);
        let record = verdict_json(
            &cv.verdict,
            height_bound,
            cv.search.as_ref().map(|_| cv.status),
        );
        writeln!(out, "{record}").map_err(io)?;
    } else {
        write!(out, "{}", certificate(&cv)).map_err(io)?;
    }
    Ok(exit_code(cv.verdict.outcome))
}

pub fn cmd_invariants(text: &str, out: &mut impl Write) -> Result<i32, CliError> {
    let input = InvariantsInput::parse(text)?;
    write!(out, "{}", invariants_text(&input)).map_err(io)?;
    Ok(0)
}

pub fn cmd_search(text: &str, height: u32, out: &mut impl Write) -> Result<i32, CliError> {
    let f = parse_form(text)?;
    let report = search(&f, height)?;
    write!(out, "{}", search_text(&report)).map_err(io)?;
    Ok(0)
}

pub fn cmd_scan(job: &ScanJob, out: &mut impl Write) -> Result<i32, CliError> {
    let output = run_scan(job)?;
    write_output(job, &output)?;
    let s = output.summary;
    writeln!(
        out,
        "exists {}  obstruction {}  unresolved {}  degenerate {}  contradictions {}",
        s.exists, s.obstruction, s.unresolved, s.degenerate, s.contradictions
    )
    .map_err(io)?;
    for row in output
        .rows
        .iter()
        .filter(|r| r.status == Consistency::Contradiction)
    {
        writeln!(out, "CONTRADICTION {},{},{}", row.a, row.b, row.c).map_err(io)?;
    }
    Ok(if s.contradictions > 0 {
        EXIT_CONTRADICTION
    } else {
        0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: impl FnOnce(&mut Vec<u8>) -> Result<i32, CliError>) -> (i32, String) {
        let mut buf = Vec::new();
        let code = f(&mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn decide_exit_codes() {
        assert_eq!(
            run(|o| cmd_decide("3,2,5", false, 100, o)).0,
            EXIT_OBSTRUCTION
        );
        let (code, text) = run(|o| cmd_decide("1,0,1", false, 100, o));
        assert_eq!(code, EXIT_EXISTS);
        assert!(text.contains("integral point [1:0]"), "{text}");
        assert_eq!(
            run(|o| cmd_decide("2,4,2", true, 100, o)).0,
            EXIT_DEGENERATE
        );
        assert!(cmd_decide("2,4", false, 10, &mut Vec::new()).is_err());
    }

    #[test]
    fn search_output() {
        let (_, text) = run(|o| cmd_search("0,1,0", 1, o));
        assert!(text.contains("stacky point [1:0]"), "{text}");
        let (_, text) = run(|o| cmd_search("3,2,5", 100, o));
        assert!(
            text.contains("no integral point with height <= 100"),
            "{text}"
        );
    }
}
