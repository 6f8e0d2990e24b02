//! Exact Gaussian elimination.

use num::{One, Zero};

use super::rational::{Point, Rational};
use crate::error::{Error, Result};

/// Reduces `rows` in place to reduced row echelon form and returns the pivot columns.
pub(crate) fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Point]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|p| p.0.clone()).collect();
    rref(&mut m).len()
}

/// Solves `matrix * x = rhs` exactly.
///
/// Rectangular systems are accepted when the columns are independent; the
/// extra equations must then be consistent.
pub fn solve_linear(matrix: &[Point], rhs: &[Rational]) -> Result<Point> {
    if matrix.len() != rhs.len() {
        return Err(Error::DimensionMismatch { expected: matrix.len(), found: rhs.len() });
    }
    let ncols = matrix.first().map_or(0, Point::dim);
    if let Some(bad) = matrix.iter().find(|row| row.dim() != ncols) {
        return Err(Error::DimensionMismatch { expected: ncols, found: bad.dim() });
    }
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut v = row.0.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return Err(Error::Inconsistent);
    }
    if pivots.len() < ncols {
        return Err(Error::Singular);
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Ok(Point(x))
}

/// A basis of `{x : row . x = 0 for every row}`, each vector primitive integral.
pub fn null_space(rows: &[Point], ncols: usize) -> Vec<Point> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|p| p.0.clone()).collect();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            Point(v).primitive()
        })
        .collect()
}

pub fn determinant(rows: &[Point]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|p| p.0.clone()).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(sel) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if sel != c {
            m.swap(sel, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v = &*v - &(&f * p);
                }
            }
        }
    }
    det
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
pub fn independent_subset(vectors: &[Point]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Point> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        basis.push(v.clone());
        if rank(&basis) == basis.len() {
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}
