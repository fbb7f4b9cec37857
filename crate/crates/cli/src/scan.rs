//! Batch decisions over a box of coefficients, each cross-checked against the
//! point search.

use std::collections::HashSet;
use std::fs::File;
use std::io::BufWriter;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use rayon::prelude::*;
use stacky_core::decider::{verify_witness, Outcome};
use stacky_core::form::BinaryQuadraticForm;
use stacky_core::oracle::{cross_validate_memoized, symmetry_class, Consistency, SearchMemo};

use crate::catalog::{write_catalog, CatalogRow};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanJob {
    pub a_range: RangeInclusive<i64>,
    pub b_range: RangeInclusive<i64>,
    pub c_range: RangeInclusive<i64>,
    pub height: u32,
    pub out: Option<PathBuf>,
    pub workers: usize,
}

impl ScanJob {
    /// All forms in the box, in lexicographic order.
    pub fn forms(&self) -> Vec<BinaryQuadraticForm> {
        let mut forms = Vec::new();
        for a in self.a_range.clone() {
            for b in self.b_range.clone() {
                for c in self.c_range.clone() {
                    forms.push(BinaryQuadraticForm::new(a, b, c));
                }
            }
        }
        forms
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanSummary {
    /// Existence verdicts, unresolved ones included.
    pub exists: usize,
    pub obstruction: usize,
    pub unresolved: usize,
    pub degenerate: usize,
    pub contradictions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutput {
    pub rows: Vec<CatalogRow>,
    pub summary: ScanSummary,
}

/// The catalog row of `f`, or `None` for a degenerate form.
fn decide_one(
    f: &BinaryQuadraticForm,
    height: u32,
    memo: &SearchMemo,
) -> Result<Option<CatalogRow>, CliError> {
    let cv = cross_validate_memoized(f, height, memo)?;
    if cv.status == Consistency::Degenerate {
        return Ok(None);
    }
    if let Some(d) = &cv.verdict.witness_class {
        let witness = d.to_integer();
        if !verify_witness(f, &witness)? {
            return Err(CliError::WitnessRejected {
                form: Box::new(f.clone()),
                witness,
            });
        }
    }
    Ok(Some(CatalogRow::from_cross_validation(&cv)))
}

/// Decides every form of the job on `job.workers` threads; rows come back in
/// lexicographic order whatever the scheduling.
///
/// One form per symmetry class goes first, so that the others find its
/// exhausted search in the memo instead of repeating it concurrently.
pub fn run_scan(job: &ScanJob) -> Result<ScanOutput, CliError> {
    let forms = job.forms();
    let memo = SearchMemo::new();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.workers.max(1))
        .build()?;
    let mut seen = HashSet::new();
    let (leaders, followers): (Vec<usize>, Vec<usize>) = (0..forms.len())
        .partition(|&i| !forms[i].is_degenerate() && seen.insert(symmetry_class(&forms[i])));
    let decide_all = |indices: Vec<usize>| -> Result<Vec<(usize, Option<CatalogRow>)>, CliError> {
        pool.install(|| {
            indices
                .into_par_iter()
                .map(|i| Ok((i, decide_one(&forms[i], job.height, &memo)?)))
                .collect()
        })
    };
    let mut decisions = decide_all(leaders)?;
    decisions.extend(decide_all(followers)?);
    decisions.sort_unstable_by_key(|&(i, _)| i);

    let mut summary = ScanSummary::default();
    let mut rows = Vec::new();
    for (_, decision) in decisions {
        let Some(row) = decision else {
            summary.degenerate += 1;
            continue;
        };
        match row.outcome {
            Outcome::IntegralPointExists => summary.exists += 1,
            Outcome::BrauerObstruction => summary.obstruction += 1,
            Outcome::DegenerateInput => unreachable!("degenerate forms have no row"),
        }
        match row.status {
            Consistency::Unresolved => summary.unresolved += 1,
            Consistency::Contradiction => summary.contradictions += 1,
            _ => {}
        }
        rows.push(row);
    }
    Ok(ScanOutput { rows, summary })
}

/// Writes the catalog to `job.out`, if set.
pub fn write_output(job: &ScanJob, output: &ScanOutput) -> Result<(), CliError> {
    let Some(path) = &job.out else {
        return Ok(());
    };
    let io_err = |source| CliError::Io {
        path: path.clone(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_catalog(BufWriter::new(file), &output.rows)
}
