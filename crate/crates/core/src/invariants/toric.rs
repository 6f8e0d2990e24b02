//! The toric `t`-function, its minimum and minimizing faces, and the facet
//! lattice-point criterion for `α_{m,k} = α`.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};

use super::{AlphaValue, Witness};
use crate::error::{Error, Result};
use crate::kernel::{affine_dimension, LinearProgram, LpOutcome, Point, Rational, Relation, Sense};
use crate::polytope::{lattice_points, HPolytope, VPolytope};

fn require_interior_origin(p: &HPolytope) -> Result<()> {
    if p.contains_origin_in_interior() {
        Ok(())
    } else {
        Err(Error::Precondition("the origin must be interior to P".into()))
    }
}

/// `t(x) = s*/(1+s*)` with `s* = max{s : −s·x ∈ P}`; `t(0) = 1`.
pub fn t_function(p: &HPolytope, x: &Point) -> Result<Rational> {
    require_interior_origin(p)?;
    if x.dim() != p.rank() {
        return Err(Error::DimensionMismatch { expected: p.rank(), found: x.dim() });
    }
    if !p.contains(x) {
        return Err(Error::OutsidePolytope(x.clone()));
    }
    // −s x ∈ P  ⇔  Λ_A − s u_A(x) >= 0 for every A
    let s = p
        .facets()
        .iter()
        .filter_map(|f| {
            let u = f.normal.dot(x);
            u.is_positive().then(|| &f.constant / u)
        })
        .min();
    Ok(match s {
        Some(s) => &s / (&s + Rational::one()),
        None => Rational::one(),
    })
}

/// Minimum of `t` over `P`, attained at a vertex; ties go to the smallest vertex.
pub fn alpha_toric(p: &HPolytope) -> Result<AlphaValue> {
    if !p.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let mut best: Option<(Rational, Point)> = None;
    for v in p.vertices() {
        let t = t_function(p, v)?;
        if best.as_ref().is_none_or(|(b, _)| &t < b) {
            best = Some((t, v.clone()));
        }
    }
    let (value, v) = best.ok_or(Error::Empty)?;
    Ok(AlphaValue { capped: value >= Rational::one(), value, witness: Witness::Vertex(v) })
}

/// `sup_{x∈Î} t(x) = 1/(1+c_min)`, `c_min = min{c >= 0 : ∃y ∈ Î, u_A(y) <= cΛ_A ∀A}`.
pub fn sup_t_on_hull(p: &HPolytope, hull: &VPolytope) -> Result<Rational> {
    require_interior_origin(p)?;
    if hull.rank() != p.rank() {
        return Err(Error::DimensionMismatch { expected: p.rank(), found: hull.rank() });
    }
    if hull.is_empty() {
        return Err(Error::Empty);
    }
    if let Some(out) = hull.vertices().iter().find(|v| !p.contains(v)) {
        return Err(Error::OutsidePolytope(out.clone()));
    }
    let r = p.rank();
    let verts = hull.vertices();
    // variables: y (r), c, λ (one per hull vertex)
    let n = r + 1 + verts.len();
    let mut objective = vec![Rational::zero(); n];
    objective[r] = Rational::one();
    let mut lp = LinearProgram::new(n, Sense::Minimize, objective);
    for j in r..n {
        lp.set_nonnegative(j);
    }
    for c in 0..r {
        let mut row = vec![Rational::zero(); n];
        row[c] = Rational::one();
        for (j, v) in verts.iter().enumerate() {
            row[r + 1 + j] = -v[c].clone();
        }
        lp.add_constraint(row, Relation::Eq, Rational::zero());
    }
    let mut sum = vec![Rational::zero(); n];
    for s in sum.iter_mut().skip(r + 1) {
        *s = Rational::one();
    }
    lp.add_constraint(sum, Relation::Eq, Rational::one());
    for f in p.facets() {
        let mut row = vec![Rational::zero(); n];
        row[..r].clone_from_slice(f.normal.coords());
        row[r] = -f.constant.clone();
        lp.add_constraint(row, Relation::Le, Rational::zero());
    }
    match lp.solve()? {
        LpOutcome::Optimal { value, .. } => Ok((Rational::one() + value).recip()),
        _ => Err(Error::Precondition("hull LP has no optimum".into())),
    }
}

/// A proper face of `P`, given by its vertices and the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub vertices: Vec<Point>,
    pub dimension: usize,
    pub facets: Vec<usize>,
}

impl Face {
    pub fn barycenter(&self) -> Point {
        let n = Rational::from_integer(self.vertices.len().into());
        let dim = self.vertices[0].dim();
        self.vertices.iter().fold(Point::zeros(dim), |acc, v| &acc + v).scale(&n.recip())
    }
}

/// All nonempty proper faces, as intersections of facets, sorted by vertex list.
pub fn faces(p: &HPolytope) -> Vec<Face> {
    let verts = p.vertices();
    let facet_sets: Vec<BTreeSet<usize>> =
        p.facets().iter().map(|f| (0..verts.len()).filter(|&i| f.eval(&verts[i]).is_zero()).collect()).collect();
    let mut all: BTreeSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
    let mut frontier: Vec<BTreeSet<usize>> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for f in &facet_sets {
                let i: BTreeSet<usize> = s.intersection(f).copied().collect();
                if !i.is_empty() && all.insert(i.clone()) {
                    next.push(i);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Face> = all
        .into_iter()
        .map(|s| {
            let vertices: Vec<Point> = s.iter().map(|&i| verts[i].clone()).collect();
            let facets = (0..facet_sets.len()).filter(|&a| s.is_subset(&facet_sets[a])).collect();
            let dimension = affine_dimension(&vertices).unwrap_or(0);
            Face { vertices, dimension, facets }
        })
        .collect();
    out.sort();
    out
}

/// Maximal faces on which `t` is identically its minimum.
///
/// `t = 1/(1 + c)` with `c` convex, so `t` is minimal on a whole face exactly
/// when it is minimal at a relative-interior point; the barycenter is used.
pub fn min_face_set(p: &HPolytope) -> Result<Vec<Face>> {
    let alpha = alpha_toric(p)?.value;
    let mut hits = Vec::new();
    for f in faces(p) {
        if t_function(p, &f.barycenter())? == alpha {
            hits.push(f);
        }
    }
    let maximal = hits
        .iter()
        .filter(|f| {
            !hits
                .iter()
                .any(|g| g.vertices.len() > f.vertices.len() && f.vertices.iter().all(|v| g.vertices.contains(v)))
        })
        .cloned()
        .collect();
    Ok(maximal)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailReason {
    /// No facet lies in the minimizing set, so the criterion fails for every `m`.
    NoFacetInMinimizingSet,
    /// Minimizing facets exist but are single points (rank one) with `k > 1`.
    FacetTooSmall,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds { m_k: u32, facet: usize, count: usize },
    Fails(FailReason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub verdict: Verdict,
    pub alpha: Rational,
    pub minimizing_faces: Vec<Face>,
}

/// Least `m` for which some minimizing facet `F` has at least `k` points of
/// `mF ∩ 𝔐`. The search continues past `m_max` whenever a minimizing facet
/// exists, since its lattice-point count then grows without bound.
pub fn conjecture_check(p: &HPolytope, k: usize, m_max: u32) -> Result<ConjectureReport> {
    if k == 0 || m_max == 0 {
        return Err(Error::Precondition("k and m_max must be positive".into()));
    }
    let minimizing_faces = min_face_set(p)?;
    let alpha = alpha_toric(p)?.value;
    let facets: Vec<usize> =
        minimizing_faces.iter().filter(|f| f.dimension + 1 == p.rank()).map(|f| f.facets[0]).collect();
    let verdict = if facets.is_empty() {
        Verdict::Fails(FailReason::NoFacetInMinimizingSet)
    } else if p.rank() == 1 && k > 1 {
        Verdict::Fails(FailReason::FacetTooSmall)
    } else {
        let mut m = 1u32;
        loop {
            let pts = lattice_points(p, m);
            let scale = Rational::from_integer(m.into());
            let hit = facets.iter().find_map(|&a| {
                let f = &p.facets()[a];
                let count = pts.iter().filter(|y| (&f.constant * &scale + f.normal.dot(y)).is_zero()).count();
                (count >= k).then_some((a, count))
            });
            if let Some((facet, count)) = hit {
                break Verdict::Holds { m_k: m, facet, count };
            }
            m += 1;
        }
    };
    Ok(ConjectureReport { verdict, alpha, minimizing_faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, ratio};

    fn square() -> HPolytope {
        HPolytope::from_integer_pairs(2, &[(1, &[1, 0]), (1, &[-1, 0]), (1, &[0, 1]), (1, &[0, -1])]).unwrap()
    }

    fn pentagon() -> HPolytope {
        HPolytope::from_integer_pairs(2, &[(1, &[-1, -1]), (1, &[-1, 0]), (1, &[0, -1]), (1, &[1, 0]), (1, &[0, 1])])
            .unwrap()
    }

    fn cpn(n: usize) -> HPolytope {
        let mut pairs: Vec<(i64, Vec<i64>)> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                (1, v)
            })
            .collect();
        pairs.push((1, vec![-1; n]));
        let refs: Vec<(i64, &[i64])> = pairs.iter().map(|(c, v)| (*c, v.as_slice())).collect();
        HPolytope::from_integer_pairs(n, &refs).unwrap()
    }

    fn pt(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    #[test]
    fn t_values() {
        let p = pentagon();
        assert_eq!(t_function(&p, &pt(&[-1, -1])).unwrap(), ratio(1, 3));
        assert_eq!(t_function(&p, &pt(&[0, 0])).unwrap(), rat(1));
        assert_eq!(t_function(&p, &pt(&[-1, 0])).unwrap(), ratio(1, 2));
        assert!(matches!(t_function(&p, &pt(&[1, 1])), Err(Error::OutsidePolytope(_))));
    }

    #[test]
    fn toric_minimum() {
        assert_eq!(alpha_toric(&square()).unwrap().value, ratio(1, 2));
        let a = alpha_toric(&pentagon()).unwrap();
        assert_eq!((a.value, a.witness), (ratio(1, 3), Witness::Vertex(pt(&[-1, -1]))));
        assert_eq!(alpha_toric(&cpn(3)).unwrap().value, ratio(1, 4));
        let gl2 =
            HPolytope::from_integer_pairs(2, &[(1, &[1, 1]), (1, &[-1, -1]), (2, &[-1, 0]), (2, &[0, -1])]).unwrap();
        assert!(matches!(alpha_toric(&gl2), Err(Error::NotReflexive)));
    }

    #[test]
    fn hull_sup() {
        let p = pentagon();
        let single = VPolytope::point(pt(&[-1, -1]));
        assert_eq!(sup_t_on_hull(&p, &single).unwrap(), ratio(1, 3));
        let seg = VPolytope::from_points(2, &[pt(&[-1, -1]), pt(&[-1, 0])]).unwrap();
        assert_eq!(sup_t_on_hull(&p, &seg).unwrap(), ratio(1, 2));
        assert_eq!(sup_t_on_hull(&p, &VPolytope::point(Point::zeros(2))).unwrap(), rat(1));
        assert!(sup_t_on_hull(&p, &VPolytope::point(pt(&[2, 0]))).is_err());
    }

    #[test]
    fn minimizing_faces() {
        let sq = min_face_set(&square()).unwrap();
        assert_eq!(sq.len(), 4);
        assert!(sq.iter().all(|f| f.dimension == 1));
        let pe = min_face_set(&pentagon()).unwrap();
        assert_eq!(pe.len(), 1);
        assert_eq!(pe[0].vertices, vec![pt(&[-1, -1])]);
        let cp2 = min_face_set(&cpn(2)).unwrap();
        assert_eq!(cp2.len(), 3);
        assert!(cp2.iter().all(|f| f.dimension == 0));
        assert_eq!(faces(&cpn(3)).len(), 4 + 6 + 4);
    }

    #[test]
    fn criterion() {
        let r = conjecture_check(&square(), 3, 10).unwrap();
        assert!(matches!(r.verdict, Verdict::Holds { m_k: 1, count: 3, .. }));
        let r = conjecture_check(&square(), 5, 1).unwrap();
        assert!(matches!(r.verdict, Verdict::Holds { m_k: 2, count: 5, .. }));
        let f = conjecture_check(&pentagon(), 2, 10).unwrap();
        assert_eq!(f.verdict, Verdict::Fails(FailReason::NoFacetInMinimizingSet));
        assert_eq!(
            conjecture_check(&cpn(3), 2, 3).unwrap().verdict,
            Verdict::Fails(FailReason::NoFacetInMinimizingSet)
        );
    }
}
