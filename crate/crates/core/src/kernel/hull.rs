//! Vertex/facet conversion for small polytopes and cones, by brute force over
//! subsets of constraints or points.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};

use super::linalg::{null_space, rank, solve_linear};
use super::lp::{LinearProgram, LpOutcome, Relation};
use super::rational::{Point, Rational};
use crate::error::{Error, Result};

/// The half-space `constant + normal . y >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub constant: Rational,
    pub normal: Point,
}

impl Halfspace {
    pub fn new(constant: Rational, normal: Point) -> Self {
        Halfspace { constant, normal }
    }

    pub fn eval(&self, y: &Point) -> Rational {
        &self.constant + self.normal.dot(y)
    }

    pub fn contains(&self, y: &Point) -> bool {
        !self.eval(y).is_negative()
    }

    /// Rescaled so the normal is primitive integral. Zero normals are left as they are.
    pub fn normalized(&self) -> Halfspace {
        let f = self.normal.primitive_factor();
        Halfspace { constant: &self.constant * &f, normal: self.normal.scale(&f) }
    }
}

/// Either description of a bounded convex polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Description {
    Halfspaces { dim: usize, halfspaces: Vec<Halfspace> },
    Vertices { dim: usize, vertices: Vec<Point> },
}

/// Converts one representation into the other.
///
/// Halfspaces produce the sorted, deduplicated vertex list. Vertices produce
/// the irredundant facet list with primitive normals; that direction needs a
/// full-dimensional point set.
pub fn dual_description(input: &Description) -> Result<Description> {
    match input {
        Description::Halfspaces { dim, halfspaces } => {
            if !is_bounded(*dim, halfspaces) {
                return Err(Error::Unbounded);
            }
            let vertices = enumerate_vertices(*dim, halfspaces);
            if vertices.is_empty() {
                return Err(Error::Empty);
            }
            Ok(Description::Vertices { dim: *dim, vertices })
        }
        Description::Vertices { dim, vertices } => {
            if vertices.is_empty() {
                return Err(Error::Empty);
            }
            Ok(Description::Halfspaces { dim: *dim, halfspaces: enumerate_facets(*dim, vertices)? })
        }
    }
}

fn subsets(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Calls `visit` with every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, visit: impl FnMut(&[usize])) {
    subsets(n, k, visit)
}

/// All vertices of `{y : h(y) >= 0}`, sorted. The polyhedron must be pointed.
pub fn enumerate_vertices(dim: usize, halfspaces: &[Halfspace]) -> Vec<Point> {
    if dim == 0 {
        let origin = Point::zeros(0);
        return if halfspaces.iter().all(|h| h.contains(&origin)) { vec![origin] } else { Vec::new() };
    }
    let mut found = BTreeSet::new();
    subsets(halfspaces.len(), dim, |idx| {
        let rows: Vec<Point> = idx.iter().map(|&i| halfspaces[i].normal.clone()).collect();
        let rhs: Vec<Rational> = idx.iter().map(|&i| -halfspaces[i].constant.clone()).collect();
        if let Ok(y) = solve_linear(&rows, &rhs) {
            if halfspaces.iter().all(|h| h.contains(&y)) {
                found.insert(y);
            }
        }
    });
    found.into_iter().collect()
}

/// Facets of the convex hull of a full-dimensional point set.
pub fn enumerate_facets(dim: usize, points: &[Point]) -> Result<Vec<Halfspace>> {
    let points: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if affine_dimension(&points) != Some(dim) {
        return Err(Error::NotSolid);
    }
    let mut facets: BTreeSet<Halfspace> = BTreeSet::new();
    subsets(points.len(), dim, |idx| {
        let base = &points[idx[0]];
        let diffs: Vec<Point> = idx[1..].iter().map(|&i| &points[i] - base).collect();
        let ns = null_space(&diffs, dim);
        if ns.len() != 1 {
            return;
        }
        let normal = ns[0].clone();
        let constant = -normal.dot(base);
        let h = Halfspace::new(constant, normal);
        let vals: Vec<Rational> = points.iter().map(|p| h.eval(p)).collect();
        let pos = vals.iter().any(Signed::is_positive);
        let neg = vals.iter().any(Signed::is_negative);
        if pos && neg {
            return;
        }
        let h = if neg { Halfspace::new(-h.constant, -&h.normal) } else { h };
        facets.insert(h.normalized());
    });
    Ok(facets.into_iter().collect())
}

/// Dimension of the affine hull, `None` for the empty set.
pub fn affine_dimension(points: &[Point]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Point> = rest.iter().map(|p| p - first).collect();
    Some(rank(&diffs))
}

/// Basis of the linear space parallel to the affine hull.
pub fn affine_span(points: &[Point]) -> Vec<Point> {
    let Some((first, rest)) = points.split_first() else {
        return Vec::new();
    };
    let diffs: Vec<Point> = rest.iter().map(|p| p - first).collect();
    let keep = super::linalg::independent_subset(&diffs);
    keep.into_iter().map(|i| diffs[i].clone()).collect()
}

/// Is `target` a convex combination of `points`?
pub fn in_convex_hull(target: &Point, points: &[Point]) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = points.len();
    let mut lp = LinearProgram::feasibility(n);
    lp.set_all_nonnegative();
    for c in 0..target.dim() {
        lp.add_constraint(points.iter().map(|p| p[c].clone()).collect(), Relation::Eq, target[c].clone());
    }
    lp.add_constraint(vec![Rational::one(); n], Relation::Eq, Rational::one());
    !matches!(lp.solve(), Ok(LpOutcome::Infeasible) | Err(_))
}

/// Removes duplicates and points in the hull of the others; sorted output.
pub fn extreme_points(points: &[Point]) -> Vec<Point> {
    let pts: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if pts.len() <= 2 {
        return pts;
    }
    (0..pts.len())
        .filter(|&i| {
            let others: Vec<Point> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            !in_convex_hull(&pts[i], &others)
        })
        .map(|i| pts[i].clone())
        .collect()
}

/// Whether `{y : h(y) >= 0}` is bounded (empty counts as bounded).
pub fn is_bounded(dim: usize, halfspaces: &[Halfspace]) -> bool {
    // The recession cone {d : normal . d >= 0} must be trivial.
    for i in 0..dim {
        for sign in [1i64, -1] {
            let mut obj = vec![Rational::zero(); dim];
            obj[i] = Rational::from_integer(sign.into());
            let mut lp = LinearProgram::new(dim, super::lp::Sense::Maximize, obj);
            for h in halfspaces {
                lp.add_constraint(h.normal.0.clone(), Relation::Ge, Rational::zero());
            }
            let mut bound = vec![Rational::zero(); dim];
            bound[i] = Rational::from_integer(sign.into());
            lp.add_constraint(bound, Relation::Le, Rational::one());
            if let Ok(LpOutcome::Optimal { value, .. }) = lp.solve() {
                if value.is_positive() {
                    return false;
                }
            }
        }
    }
    true
}

/// Extreme rays of a pointed cone `{x : a . x >= 0}` as primitive vectors.
///
/// Returns `None` when the cone contains a line. The zero cone yields an empty list.
pub fn cone_rays(dim: usize, halfspaces: &[Point]) -> Option<Vec<Point>> {
    if dim == 0 {
        return Some(Vec::new());
    }
    if rank(halfspaces) < dim {
        return None;
    }
    let mut rays = BTreeSet::new();
    subsets(halfspaces.len(), dim - 1, |idx| {
        let rows: Vec<Point> = idx.iter().map(|&i| halfspaces[i].clone()).collect();
        let ns = null_space(&rows, dim);
        if ns.len() != 1 {
            return;
        }
        for cand in [ns[0].clone(), -&ns[0]] {
            if halfspaces.iter().all(|a| !a.dot(&cand).is_negative()) {
                rays.insert(cand.primitive());
            }
        }
    });
    Some(rays.into_iter().collect())
}

/// Inequalities `a . x >= 0` cutting out the cone generated by `rays`.
///
/// Lower-dimensional cones get a pair of opposite inequalities per
/// orthogonal direction. All normals are primitive.
pub fn cone_halfspaces(dim: usize, rays: &[Point]) -> Vec<Point> {
    let rays: Vec<Point> = rays.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut out: BTreeSet<Point> = BTreeSet::new();
    for n in null_space(&rays, dim) {
        out.insert(-&n);
        out.insert(n);
    }
    let span_idx = super::linalg::independent_subset(&rays);
    let d = span_idx.len();
    if d == 0 {
        return out.into_iter().collect();
    }
    let basis: Vec<Point> = span_idx.iter().map(|&i| rays[i].clone()).collect();
    let complement = null_space(&basis, dim);
    // coordinates of every ray in the span basis
    let to_span = |v: &Point| -> Point {
        let cols: Vec<Point> = (0..dim).map(|c| Point(basis.iter().map(|b| b[c].clone()).collect())).collect();
        solve_linear(&cols, &v.0).expect("ray lies in its own span")
    };
    let local: Vec<Point> = rays.iter().map(to_span).collect();
    if d == 1 {
        // a ray or a line
        let pos = local.iter().any(|l| l[0].is_positive());
        let neg = local.iter().any(|l| l[0].is_negative());
        if !(pos && neg) {
            let sign = if pos { Rational::one() } else { -Rational::one() };
            out.insert(lift(&basis, &complement, &Point(vec![sign])));
        }
        return out.into_iter().collect();
    }
    subsets(local.len(), d - 1, |idx| {
        let rows: Vec<Point> = idx.iter().map(|&i| local[i].clone()).collect();
        let ns = null_space(&rows, d);
        if ns.len() != 1 {
            return;
        }
        let n = &ns[0];
        let vals: Vec<Rational> = local.iter().map(|l| n.dot(l)).collect();
        let pos = vals.iter().any(Signed::is_positive);
        let neg = vals.iter().any(Signed::is_negative);
        if pos && neg {
            return;
        }
        let n = if neg { -n } else { n.clone() };
        out.insert(lift(&basis, &complement, &n));
    });
    out.into_iter().collect()
}

/// The functional on the full space that restricts to `local` on span(basis) and vanishes on `complement`.
fn lift(basis: &[Point], complement: &[Point], local: &Point) -> Point {
    let mut rows: Vec<Point> = basis.to_vec();
    let mut rhs: Vec<Rational> = local.0.clone();
    for c in complement {
        rows.push(c.clone());
        rhs.push(Rational::zero());
    }
    solve_linear(&rows, &rhs).expect("basis and complement span the space").primitive()
}

/// Removes generators that are non-negative combinations of the others.
pub fn extreme_rays(rays: &[Point]) -> Vec<Point> {
    let rays: Vec<Point> =
        rays.iter().filter(|r| !r.is_zero()).map(Point::primitive).collect::<BTreeSet<_>>().into_iter().collect();
    (0..rays.len())
        .filter(|&i| {
            let others: Vec<&Point> = rays.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r).collect();
            if others.is_empty() {
                return true;
            }
            let mut lp = LinearProgram::feasibility(others.len());
            lp.set_all_nonnegative();
            for c in 0..rays[i].dim() {
                lp.add_constraint(others.iter().map(|r| r[c].clone()).collect(), Relation::Eq, rays[i][c].clone());
            }
            matches!(lp.solve(), Ok(LpOutcome::Infeasible))
        })
        .map(|i| rays[i].clone())
        .collect()
}
