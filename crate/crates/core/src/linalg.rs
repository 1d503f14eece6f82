//! Exact linear algebra: determinants, inverses and ranks over the rationals.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination on an integer
//! matrix obtained by clearing denominators row by row; a sparse exact
//! variant is provided for the large monomial-indexed operator matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polyalgebra::Rational;

/// Determinant of a small square rational matrix (cofactor expansion).
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n));
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, &cols, 0)
}

fn det_rec(m: &[Vec<Rational>], cols: &[usize], row: usize) -> Rational {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = Rational::zero();
    for (i, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&k| k != c).collect();
        let minor = det_rec(m, &rest, row + 1);
        if i % 2 == 0 {
            acc += &m[row][c] * minor;
        } else {
            acc -= &m[row][c] * minor;
        }
    }
    acc
}

/// Inverse of a small rational matrix via Gauss-Jordan. Returns None if
/// singular.
pub fn inverse_rational(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut work: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        let p = work[col][col].clone();
        for v in work[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let f = work[r][col].clone();
            for c in 0..2 * n {
                let sub = &work[col][c] * &f;
                work[r][c] -= sub;
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul_rational(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Rational::zero();
                    for t in 0..k {
                        acc += &a[i][t] * &b[t][j];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Exact rank of a dense integer matrix by Bareiss fraction-free elimination.
pub fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        for r in pivot_row + 1..rows {
            for c in col + 1..cols {
                let num = &m[pivot_row][col] * &m[r][c] - &m[r][col] * &m[pivot_row][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Rank of a rational matrix: denominators are cleared per row, then the
/// integer Bareiss elimination runs.
pub fn rank_rational(m: &[Vec<Rational>]) -> usize {
    let int_rows: Vec<Vec<BigInt>> = m.iter().map(|row| clear_denominators(row)).collect();
    rank_bareiss(int_rows)
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        let d = v.denom();
        let g = num_integer::Integer::gcd(&lcm, d);
        lcm = lcm / g * d;
    }
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

/// Sparse exact rank over the rationals for monomial-indexed operator
/// matrices: rows are (column, value) lists. Elimination walks columns in
/// order, picking the sparsest available pivot row to limit fill-in.
pub fn rank_sparse(rows: Vec<Vec<(usize, Rational)>>) -> usize {
    // normalize rows: sorted by column, no zeros
    let mut active: Vec<Vec<(usize, Rational)>> = rows
        .into_iter()
        .map(|mut r| {
            r.retain(|(_, v)| !v.is_zero());
            r.sort_by_key(|&(c, _)| c);
            r
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut rank = 0;
    while !active.is_empty() {
        // pivot column: smallest leading column among active rows
        let col = active.iter().map(|r| r[0].0).min().unwrap();
        let mut candidates: Vec<usize> = (0..active.len())
            .filter(|&i| active[i][0].0 == col)
            .collect();
        candidates.sort_by_key(|&i| active[i].len());
        let pi = candidates[0];
        let pivot = active.swap_remove(pi);
        let pval = pivot[0].1.clone();
        rank += 1;
        let mut next = Vec::with_capacity(active.len());
        for row in active {
            if row[0].0 != col {
                next.push(row);
                continue;
            }
            let f = &row[0].1 / &pval;
            let combined = sparse_axpy(&row, &pivot, &f);
            if !combined.is_empty() {
                next.push(combined);
            }
        }
        active = next;
    }
    rank
}

/// row - f * pivot, both sorted sparse rows.
fn sparse_axpy(
    row: &[(usize, Rational)],
    pivot: &[(usize, Rational)],
    f: &Rational,
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() && j < pivot.len() {
        match row[i].0.cmp(&pivot[j].0) {
            std::cmp::Ordering::Less => {
                out.push(row[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((pivot[j].0, -(&pivot[j].1 * f)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &row[i].1 - &pivot[j].1 * f;
                if !v.is_zero() {
                    out.push((row[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&row[i..]);
    for (c, v) in &pivot[j..] {
        out.push((*c, -(v * f)));
    }
    out
}
