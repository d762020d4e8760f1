//! Exact elimination for the small symmetric systems that come out of
//! resolution graphs.
//!
//! Symmetric elimination runs in minimum-degree order. On a tree this is
//! always a leaf, so no fill-in occurs and each pivot costs O(degree).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("right-hand side has length {rhs}, expected {expected}")]
    DimensionMismatch { expected: usize, rhs: usize },
    #[error("matrix is singular")]
    Singular,
}

struct Step {
    vertex: usize,
    pivot: Rational,
    /// Off-diagonal entries of the pivot row, restricted to vertices that
    /// were still uneliminated at this step.
    row: BTreeMap<usize, Rational>,
}

fn check_square(matrix: &[Vec<BigInt>]) -> Result<usize, LinearError> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(LinearError::NotSquare);
    }
    Ok(n)
}

/// Runs symmetric elimination, updating `rhs` alongside when given. Stops
/// after recording the first zero pivot.
fn eliminate(matrix: &[Vec<BigInt>], mut rhs: Option<&mut [Rational]>) -> Vec<Step> {
    let n = matrix.len();
    let mut diag: Vec<Rational> = (0..n)
        .map(|i| Rational::from_integer(matrix[i][i].clone()))
        .collect();
    let mut rows: Vec<BTreeMap<usize, Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && !matrix[i][j].is_zero())
                .map(|j| (j, Rational::from_integer(matrix[i][j].clone())))
                .collect()
        })
        .collect();
    let mut alive = vec![true; n];
    let mut steps = Vec::with_capacity(n);

    for _ in 0..n {
        let k = (0..n)
            .filter(|&i| alive[i])
            .min_by_key(|&i| (rows[i].len(), i))
            .expect("an uneliminated vertex remains");
        alive[k] = false;
        let pivot = core::mem::take(&mut diag[k]);
        let row = core::mem::take(&mut rows[k]);
        for i in row.keys() {
            rows[*i].remove(&k);
        }
        if pivot.is_zero() {
            steps.push(Step { vertex: k, pivot, row });
            break;
        }
        for (i, a_ik) in &row {
            let scaled = a_ik / &pivot;
            for (j, a_kj) in &row {
                let delta = &scaled * a_kj;
                if i == j {
                    diag[*i] = &diag[*i] - &delta;
                } else {
                    let entry = rows[*i].entry(*j).or_default();
                    *entry = &*entry - &delta;
                    if entry.is_zero() {
                        rows[*i].remove(j);
                    }
                }
            }
            if let Some(b) = rhs.as_deref_mut() {
                let update = &scaled * &b[k];
                b[*i] = &b[*i] - &update;
            }
        }
        steps.push(Step { vertex: k, pivot, row });
    }
    steps
}

/// Pivots of symmetric elimination in minimum-degree order. Each pivot is
/// the ratio of consecutive leading principal minors of the correspondingly
/// permuted matrix, so the signs decide definiteness. The sequence ends
/// early, with a zero, if some minor vanishes.
pub fn symmetric_pivots(matrix: &[Vec<BigInt>]) -> Result<Vec<Rational>, LinearError> {
    check_square(matrix)?;
    Ok(eliminate(matrix, None)
        .into_iter()
        .map(|step| step.pivot)
        .collect())
}

/// Exact solution of `matrix * x = rhs`. Symmetric elimination first; if it
/// meets a zero pivot, dense elimination with row pivoting.
pub fn solve(matrix: &[Vec<BigInt>], rhs: &[Rational]) -> Result<Vec<Rational>, LinearError> {
    let n = check_square(matrix)?;
    if rhs.len() != n {
        return Err(LinearError::DimensionMismatch {
            expected: n,
            rhs: rhs.len(),
        });
    }
    let symmetric = (0..n).all(|i| (0..i).all(|j| matrix[i][j] == matrix[j][i]));
    if symmetric {
        let mut b = rhs.to_vec();
        let steps = eliminate(matrix, Some(&mut b));
        if steps.len() == n && steps.iter().all(|s| !s.pivot.is_zero()) {
            let mut x = vec![Rational::zero(); n];
            for step in steps.iter().rev() {
                let mut acc = b[step.vertex].clone();
                for (j, a) in &step.row {
                    acc = acc - a * &x[*j];
                }
                x[step.vertex] = acc / &step.pivot;
            }
            return Ok(x);
        }
    }
    solve_dense(matrix, rhs)
}

fn solve_dense(matrix: &[Vec<BigInt>], rhs: &[Rational]) -> Result<Vec<Rational>, LinearError> {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r: Vec<Rational> = row.iter().cloned().map(Rational::from_integer).collect();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(LinearError::Singular)?;
        m.swap(col, pivot_row);
        let pivot_row = m[col].clone();
        let pivot = &pivot_row[col];
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / pivot;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = &*x - &factor * y;
            }
        }
    }
    Ok((0..n).map(|i| &m[i][n] / &m[i][i]).collect())
}

/// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`, by
/// fraction-free (Bareiss) elimination without pivoting. The sequence stops
/// after the first zero minor.
pub fn leading_principal_minors(matrix: &[Vec<BigInt>]) -> Result<Vec<BigInt>, LinearError> {
    let n = check_square(matrix)?;
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut prev = BigInt::from(1);
    let mut minors = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = m[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &pivot - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = pivot;
    }
    Ok(minors)
}
