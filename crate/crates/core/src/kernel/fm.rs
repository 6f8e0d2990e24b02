//! Fourier-Motzkin projection of rational polyhedra.

use std::collections::BTreeSet;

use num::{Signed, Zero};

use super::lp::{Constraint, LinearProgram, LpOutcome, Relation, Sense};
use super::rational::{Point, Rational};

/// Normalises to `coeffs . x <= bound` with a primitive integer coefficient row.
fn as_upper_bounds(c: &Constraint) -> Vec<(Point, Rational)> {
    let row = Point(c.coeffs.clone());
    match c.relation {
        Relation::Le => vec![(row, c.bound.clone())],
        Relation::Ge => vec![(-&row, -c.bound.clone())],
        Relation::Eq => vec![(row.clone(), c.bound.clone()), (-&row, -c.bound.clone())],
    }
}

fn normalize(row: &Point, bound: &Rational) -> (Point, Rational) {
    let f = row.primitive_factor();
    (row.scale(&f), bound * &f)
}

/// Projects `{x : constraints}` onto the variables not listed in `drop`.
///
/// The result is expressed in the retained variables, in increasing index
/// order, as `<=` constraints with primitive integer rows and redundant rows
/// removed. An infeasible system projects to the single row `0 <= -1`.
pub fn project_polyhedron(constraints: &[Constraint], drop: &[usize]) -> Vec<Constraint> {
    let Some(n) = constraints.first().map(|c| c.coeffs.len()) else {
        return Vec::new();
    };
    let mut rows: Vec<(Point, Rational)> = constraints.iter().flat_map(as_upper_bounds).collect();

    let drop: BTreeSet<usize> = drop.iter().copied().filter(|&d| d < n).collect();
    for &v in &drop {
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for (row, b) in rows {
            if row[v].is_positive() {
                pos.push((row, b));
            } else if row[v].is_negative() {
                neg.push((row, b));
            } else {
                zero.push((row, b));
            }
        }
        let mut next: BTreeSet<(Point, Rational)> = zero.into_iter().map(|(r, b)| normalize(&r, &b)).collect();
        for (pr, pb) in &pos {
            for (nr, nb) in &neg {
                // scale so the coefficients of v cancel
                let fp = -nr[v].clone();
                let fn_ = pr[v].clone();
                let row = &pr.scale(&fp) + &nr.scale(&fn_);
                let b = pb * &fp + nb * &fn_;
                next.insert(normalize(&row, &b));
            }
        }
        rows = next.into_iter().collect();
    }

    let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let mut projected: BTreeSet<(Point, Rational)> = BTreeSet::new();
    for (row, b) in rows {
        let r = Point(keep.iter().map(|&i| row[i].clone()).collect());
        if r.is_zero() {
            if b.is_negative() {
                return vec![Constraint::new(
                    vec![Rational::zero(); keep.len()],
                    Relation::Le,
                    -Rational::from_integer(1.into()),
                )];
            }
            continue;
        }
        projected.insert(normalize(&r, &b));
    }
    remove_redundant(projected.into_iter().collect(), keep.len())
}

fn remove_redundant(mut rows: Vec<(Point, Rational)>, dim: usize) -> Vec<Constraint> {
    let to_lp = |rows: &[(Point, Rational)], objective: &Point| {
        let mut lp = LinearProgram::new(dim, Sense::Maximize, objective.0.clone());
        for (r, b) in rows {
            lp.add_constraint(r.0.clone(), Relation::Le, b.clone());
        }
        lp
    };
    if matches!(to_lp(&rows, &Point::zeros(dim)).solve(), Ok(LpOutcome::Infeasible)) {
        return vec![Constraint::new(vec![Rational::zero(); dim], Relation::Le, -Rational::from_integer(1.into()))];
    }
    let mut i = 0;
    while i < rows.len() {
        let (row, b) = rows[i].clone();
        let others: Vec<(Point, Rational)> =
            rows.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
        let redundant = match to_lp(&others, &row).solve() {
            Ok(LpOutcome::Optimal { value, .. }) => value <= b,
            Ok(LpOutcome::Infeasible) => true,
            _ => false,
        };
        if redundant {
            rows.remove(i);
        } else {
            i += 1;
        }
    }
    rows.into_iter()
        .map(|(r, b)| Constraint::new(r.0, Relation::Le, b))
        .filter(|c| !c.coeffs.iter().all(Zero::is_zero))
        .collect()
}
