//! Exact linear solving and definiteness tests.
//!
//! Square solves and the positive-definiteness test run fraction-free
//! (Bareiss) elimination on an integer image of the input; only the final
//! back-substitution touches fractions. Every intermediate value of the
//! forward pass is a minor of the scaled input, so integer growth stays
//! polynomial in the entry size.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{RatError, RatMatrix, RatVector, Rational};

/// Integer row image of `row`: multiplied through by the lcm of its
/// denominators. Row scaling leaves the solution set of `A x = b` unchanged.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = Rational::lcm_denominators(row);
    row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
}

/// Solves `A x = b` exactly.
///
/// Returns [`RatError::Singular`] with the elimination column at which no
/// nonzero pivot remained.
pub fn solve_linear(a: &RatMatrix, b: &RatVector) -> Result<RatVector, RatError> {
    let n = a.rows();
    if !a.is_square() {
        return Err(RatError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if b.len() != n {
        return Err(RatError::DimensionMismatch { expected: n, found: b.len() });
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            integer_row(&row)
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(RatError::Singular { pivot: k })?;
        m.swap(k, p);
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..=n {
                let v = &row[j] * &pivot_row[k] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from(m[i][n].clone());
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                acc -= &(Rational::from(m[i][j].clone()) * &x[j]);
            }
        }
        x[i] = acc / Rational::from(m[i][i].clone());
    }
    Ok(x.into())
}

/// Leading principal minors of a symmetric matrix, computed fraction-free,
/// stopping at the first one that is not strictly positive.
///
/// The values are minors of `λ·A` for the positive integer `λ` that clears
/// all denominators, so their signs are those of the minors of `A`.
#[allow(clippy::needless_range_loop)]
fn positive_leading_minors(a: &RatMatrix) -> Vec<BigInt> {
    let n = a.rows();
    let l = Rational::lcm_denominators(a.entries());
    let mut m: Vec<Vec<BigInt>> =
        (0..n).map(|i| a.row(i).iter().map(|v| v.numer() * (&l / v.denom())).collect()).collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        minors.push(pivot.clone());
        if !pivot.is_positive() {
            break;
        }
        for i in k + 1..n {
            let factor = m[i][k].clone();
            for j in k + 1..n {
                let v = &m[i][j] * &pivot - &factor * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = pivot;
    }
    minors
}

/// Decides `xᵀ A x > 0 for all x ≠ 0` exactly (Sylvester's criterion).
pub fn is_positive_definite(a: &RatMatrix) -> Result<bool, RatError> {
    if !a.is_square() {
        return Err(RatError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if !a.is_symmetric() {
        return Err(RatError::NotSymmetric);
    }
    let minors = positive_leading_minors(a);
    Ok(minors.len() == a.rows() && minors.iter().all(Signed::is_positive))
}

/// `xᵀ A x + b·x + c0`.
pub fn eval_quadratic(a: &RatMatrix, b: &RatVector, c0: &Rational, x: &RatVector) -> Result<Rational, RatError> {
    let ax = a.mul_vec(x)?;
    if b.len() != x.len() {
        return Err(RatError::DimensionMismatch { expected: x.len(), found: b.len() });
    }
    Ok(x.dot(&ax)? + b.dot(x)? + c0)
}

/// Result of solving a possibly rectangular system exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(RatVector),
    Inconsistent,
    /// Consistent, but the columns are linearly dependent.
    Underdetermined,
}

/// Gauss-Jordan on an `m × k` system. Used where the matrices are a handful
/// of rows wide and the answer must distinguish all three outcomes.
#[allow(clippy::needless_range_loop)]
pub fn solve_system(a: &RatMatrix, b: &RatVector) -> Result<SolveOutcome, RatError> {
    let (rows, cols) = (a.rows(), a.cols());
    if b.len() != rows {
        return Err(RatError::DimensionMismatch { expected: rows, found: b.len() });
    }
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip()?;
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= &d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(SolveOutcome::Inconsistent);
    }
    if pivot_cols.len() < cols {
        return Ok(SolveOutcome::Underdetermined);
    }
    Ok(SolveOutcome::Unique((0..cols).map(|i| m[i][cols].clone()).collect()))
}
