use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Diagonal of the Smith normal form of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_rank`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithNormalForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors different from 1.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// Rank of the free part of the cokernel `Z^cols / rowspace`.
    pub fn cokernel_free_rank(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Smith normal form by alternating row and column reduction.
///
/// # Panics
///
/// If the rows have different lengths.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> SmithNormalForm {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(
        matrix.iter().all(|r| r.len() == cols),
        "ragged integer matrix"
    );
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&a, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let pivot_row = a[t].clone();
                for (x, p) in a[i][t..].iter_mut().zip(&pivot_row[t..]) {
                    *x -= &q * p;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                // a remainder survived: it is smaller than the pivot, move it in
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let other = a[i].clone();
                    for (x, y) in a[t][t..].iter_mut().zip(&other[t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }

    SmithNormalForm {
        invariant_factors: diagonal,
        rows,
        cols,
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], j1: usize, j2: usize) {
    if j1 != j2 {
        for row in a.iter_mut() {
            row.swap(j1, j2);
        }
    }
}

fn smallest_nonzero(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t`, at or beyond the pivot.
fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let in_col = smallest_nonzero(a, t..a.len(), t..t + 1);
    let in_row = smallest_nonzero(a, t..t + 1, t..a[t].len());
    match (in_col, in_row) {
        (Some(c), Some(r)) => {
            if a[c.0][c.1].abs() <= a[r.0][r.1].abs() {
                c
            } else {
                r
            }
        }
        (Some(c), None) => c,
        (None, Some(r)) => r,
        (None, None) => unreachable!("pivot cross cannot be entirely zero"),
    }
}
