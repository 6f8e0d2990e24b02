//! Piecewise-linear functions on fans: support functions, the line-bundle
//! function `Υ`, and common refinements on which several of them are linear.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{cone_halfspaces, rank, solve_linear, Point, Rational};
use crate::polytope::{normal_fan, outer_normal_fan, Cone, Fan, HPolytope, VPolytope};
use crate::rootsystem::RootData;

/// A fan with one linear functional per maximal cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    fan: Fan,
    functionals: Vec<Point>,
}

impl PLFunction {
    pub fn new(fan: Fan, functionals: Vec<Point>) -> Result<Self> {
        if fan.cones().len() != functionals.len() {
            return Err(Error::DimensionMismatch { expected: fan.cones().len(), found: functionals.len() });
        }
        Ok(PLFunction { fan, functionals })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn functionals(&self) -> &[Point] {
        &self.functionals
    }

    /// `f(−x)` as a function of `x`.
    pub fn reflected(&self) -> PLFunction {
        PLFunction { fan: self.fan.negated(), functionals: self.functionals.iter().map(|f| -f).collect() }
    }

    pub fn evaluate(&self, x: &Point) -> Result<Rational> {
        evaluate(self, x)
    }
}

/// Per-facet divisor coefficients `Λ'_A`, parallel to the polytope's facet list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorData {
    coeffs: Vec<Rational>,
}

impl DivisorData {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        DivisorData { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        DivisorData { coeffs: vec![Rational::zero(); n] }
    }

    /// The coefficients of the polarization itself, i.e. the facet constants of `P`.
    pub fn of_polytope(p: &HPolytope) -> Self {
        DivisorData { coeffs: p.facets().iter().map(|f| f.constant.clone()).collect() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

/// `Υ` on the inner normal fan: on `σ_p`, `ν_p(u_a) = −Λ'_a` for every facet `a` through `p`.
pub fn upsilon_from_divisor(p: &HPolytope, coeffs: &DivisorData) -> Result<PLFunction> {
    if coeffs.coeffs.len() != p.facets().len() {
        return Err(Error::DimensionMismatch { expected: p.facets().len(), found: coeffs.coeffs.len() });
    }
    let fan = normal_fan(p)?;
    let functionals = p
        .vertices()
        .iter()
        .map(|v| {
            let tight = p.tight_facets(v);
            let rows: Vec<Point> = tight.iter().map(|&a| p.facets()[a].normal.clone()).collect();
            let rhs: Vec<Rational> = tight.iter().map(|&a| -coeffs.coeffs[a].clone()).collect();
            solve_linear(&rows, &rhs)
        })
        .collect::<Result<Vec<_>>>()?;
    PLFunction::new(fan, functionals)
}

/// `1 + Σ_{α∈Φ₊} |α(u_A)|` for every facet.
pub fn anticanonical_coeffs(p: &HPolytope, rd: &RootData) -> DivisorData {
    DivisorData::new(
        p.facets()
            .iter()
            .map(|f| rd.positive_roots().iter().fold(Rational::one(), |acc, a| acc + a.dot(&f.normal).abs()))
            .collect(),
    )
}

/// `v_Q` as a PL function on the outer normal regions of `Q`.
pub fn support_function(q: &VPolytope) -> PLFunction {
    PLFunction { fan: outer_normal_fan(q), functionals: q.vertices().to_vec() }
}

pub fn evaluate(f: &PLFunction, x: &Point) -> Result<Rational> {
    if x.dim() != f.fan.rank() {
        return Err(Error::DimensionMismatch { expected: f.fan.rank(), found: x.dim() });
    }
    let i = f.fan.locate(x).ok_or_else(|| Error::OutsideSupport(x.clone()))?;
    Ok(f.functionals[i].dot(x))
}

/// Stellar triangulation of a pointed cone: cone from the lexicographically
/// smallest generator over the triangulated facets not containing it.
pub fn triangulate(dim: usize, rays: &[Point]) -> Vec<Vec<Point>> {
    let mut rays: Vec<Point> = rays.to_vec();
    rays.sort();
    rays.dedup();
    let d = rank(&rays);
    if rays.len() == d {
        return vec![rays];
    }
    let g = rays[0].clone();
    let mut out = BTreeSet::new();
    for h in cone_halfspaces(dim, &rays) {
        if !h.dot(&g).is_zero() {
            let face: Vec<Point> = rays.iter().filter(|r| h.dot(r).is_zero()).cloned().collect();
            if rank(&face) + 1 != d {
                continue;
            }
            for mut s in triangulate(dim, &face) {
                s.push(g.clone());
                s.sort();
                out.insert(s);
            }
        }
    }
    out.into_iter().collect()
}

/// A simplicial fan supported on `restrict_to` refining every input fan.
///
/// Cones are intersected cell by cell, lower-dimensional intersections are
/// discarded, and each surviving cell is triangulated.
pub fn common_refinement(fans: &[Fan], restrict_to: &Cone) -> Result<Fan> {
    let dim = restrict_to.rank();
    let mut cells = vec![restrict_to.clone()];
    for fan in fans {
        if fan.rank() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: fan.rank() });
        }
        let mut next: Vec<Cone> = Vec::new();
        for c in &cells {
            for d in fan.cones() {
                let x = c.intersect(d);
                if x.is_full_dimensional() && !next.contains(&x) {
                    next.push(x);
                }
            }
        }
        cells = next;
    }
    let mut simplices = BTreeSet::new();
    for c in &cells {
        let rays = c.rays().ok_or(Error::NotPointed)?;
        simplices.extend(triangulate(dim, rays));
    }
    Ok(Fan::new(dim, simplices.into_iter().map(|s| Cone::from_rays(dim, &s)).collect()))
}
