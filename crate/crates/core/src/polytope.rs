//! Convex lattice polytopes, polyhedral cones and fans.
//!
//! A polytope in half-space form is `P = {y : Λ_A + u_A(y) >= 0}` with
//! primitive integer normals `u_A`. The lattice is the standard integer
//! lattice of the coordinates.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{
    affine_dimension, cone_halfspaces, cone_rays, determinant, enumerate_facets, enumerate_vertices, extreme_points,
    extreme_rays, is_bounded, rank, Halfspace, LinearProgram, LpOutcome, Point, Rational, Relation, Sense,
};

/// A bounded polytope given by its facet inequalities.
#[derive(Clone, Debug)]
pub struct HPolytope {
    rank: usize,
    facets: Vec<Halfspace>,
    empty: bool,
    vertices: OnceLock<Vec<Point>>,
}

impl PartialEq for HPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.empty == other.empty && self.facets == other.facets
    }
}

impl Eq for HPolytope {}

impl HPolytope {
    /// Normalises every inequality to a primitive normal, merges parallel
    /// duplicates (keeping the tighter one, in first-seen order) and, for a
    /// solid result, drops redundant inequalities. Unbounded input is an error;
    /// infeasible input yields the empty polytope.
    pub fn new(rank: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        let mut facets: Vec<Halfspace> = Vec::new();
        for h in halfspaces {
            if h.normal.dim() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: h.normal.dim() });
            }
            if h.normal.is_zero() {
                if h.constant.is_negative() {
                    return Ok(Self::empty(rank));
                }
                continue;
            }
            let h = h.normalized();
            match facets.iter_mut().find(|f| f.normal == h.normal) {
                Some(f) => {
                    if h.constant < f.constant {
                        f.constant = h.constant;
                    }
                }
                None => facets.push(h),
            }
        }
        if !is_feasible(rank, &facets) {
            return Ok(Self::empty(rank));
        }
        if !is_bounded(rank, &facets) {
            return Err(Error::Unbounded);
        }
        let vertices = enumerate_vertices(rank, &facets);
        if affine_dimension(&vertices) == Some(rank) {
            facets.retain(|f| {
                let tight: Vec<Point> = vertices.iter().filter(|v| f.eval(v).is_zero()).cloned().collect();
                affine_dimension(&tight) == Some(rank.saturating_sub(1))
            });
        }
        let cache = OnceLock::new();
        let _ = cache.set(vertices);
        Ok(HPolytope { rank, facets, empty: false, vertices: cache })
    }

    /// Builds from `(constant, normal)` integer pairs, a convenience for literals.
    pub fn from_integer_pairs(rank: usize, pairs: &[(i64, &[i64])]) -> Result<Self> {
        Self::new(
            rank,
            pairs
                .iter()
                .map(|(c, n)| Halfspace::new(Rational::from_integer((*c).into()), Point::from_ints(n)))
                .collect(),
        )
    }

    pub fn empty(rank: usize) -> Self {
        let cache = OnceLock::new();
        let _ = cache.set(Vec::new());
        HPolytope { rank, facets: Vec::new(), empty: true, vertices: cache }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    /// Sorted vertex list.
    pub fn vertices(&self) -> &[Point] {
        self.vertices.get_or_init(|| enumerate_vertices(self.rank, &self.facets))
    }

    pub fn is_solid(&self) -> bool {
        !self.empty && affine_dimension(self.vertices()) == Some(self.rank)
    }

    pub fn to_vpolytope(&self) -> VPolytope {
        VPolytope { rank: self.rank, vertices: self.vertices().to_vec() }
    }

    pub fn contains(&self, y: &Point) -> bool {
        hull_membership(y, self)
    }

    /// Indices of the facets whose inequality is tight at `y`.
    pub fn tight_facets(&self, y: &Point) -> Vec<usize> {
        (0..self.facets.len()).filter(|&a| self.facets[a].eval(y).is_zero()).collect()
    }

    /// The dilate `mP`.
    pub fn scaled(&self, m: &Rational) -> HPolytope {
        if self.empty {
            return Self::empty(self.rank);
        }
        let facets = self.facets.iter().map(|f| Halfspace::new(&f.constant * m, f.normal.clone())).collect();
        let vertices = self.vertices().iter().map(|v| v.scale(m)).collect();
        let cache = OnceLock::new();
        let _ = cache.set(vertices);
        HPolytope { rank: self.rank, facets, empty: false, vertices: cache }
    }

    /// All facet constants equal 1 (so the origin is interior) and every vertex is a lattice point.
    pub fn is_reflexive(&self) -> bool {
        !self.empty
            && self.is_solid()
            && self.facets.iter().all(|f| f.constant.is_one())
            && self.vertices().iter().all(Point::is_integral)
    }

    pub fn contains_origin_in_interior(&self) -> bool {
        !self.empty && self.facets.iter().all(|f| f.constant.is_positive())
    }

    /// Vertices at which the smoothness (Delzant) condition fails: not a lattice
    /// point, not exactly `rank` facets, or facet normals not a lattice basis.
    pub fn delzant_violations(&self) -> Vec<Point> {
        self.vertices()
            .iter()
            .filter(|v| {
                let tight = self.tight_facets(v);
                if !v.is_integral() || tight.len() != self.rank {
                    return true;
                }
                let normals: Vec<Point> = tight.iter().map(|&a| self.facets[a].normal.clone()).collect();
                determinant(&normals).abs() != Rational::one()
            })
            .cloned()
            .collect()
    }
}

fn is_feasible(rank: usize, facets: &[Halfspace]) -> bool {
    let mut lp = LinearProgram::feasibility(rank);
    for f in facets {
        lp.add_constraint(f.normal.0.clone(), Relation::Ge, -f.constant.clone());
    }
    !matches!(lp.solve(), Ok(LpOutcome::Infeasible))
}

/// A polytope given by its vertices; may be lower-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    rank: usize,
    vertices: Vec<Point>,
}

impl VPolytope {
    /// The convex hull of `points`; interior and duplicate points are discarded.
    pub fn from_points(rank: usize, points: &[Point]) -> Result<Self> {
        if let Some(bad) = points.iter().find(|p| p.dim() != rank) {
            return Err(Error::DimensionMismatch { expected: rank, found: bad.dim() });
        }
        Ok(VPolytope { rank, vertices: extreme_points(points) })
    }

    pub fn empty(rank: usize) -> Self {
        VPolytope { rank, vertices: Vec::new() }
    }

    pub fn point(p: Point) -> Self {
        VPolytope { rank: p.dim(), vertices: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        affine_dimension(&self.vertices)
    }

    /// Facet description; requires a full-dimensional polytope.
    pub fn to_hpolytope(&self) -> Result<HPolytope> {
        if self.vertices.is_empty() {
            return Err(Error::Empty);
        }
        HPolytope::new(self.rank, enumerate_facets(self.rank, &self.vertices)?)
    }

    pub fn scaled(&self, m: &Rational) -> VPolytope {
        VPolytope { rank: self.rank, vertices: self.vertices.iter().map(|v| v.scale(m)).collect() }
    }
}

/// `v_P(x) = max over vertices p of <x, p>`.
pub fn support_value(p: &VPolytope, x: &Point) -> Result<Rational> {
    if x.dim() != p.rank {
        return Err(Error::DimensionMismatch { expected: p.rank, found: x.dim() });
    }
    p.vertices.iter().map(|v| v.dot(x)).max().ok_or(Error::Empty)
}

pub fn hull_membership(y: &Point, p: &HPolytope) -> bool {
    !p.empty && y.dim() == p.rank && p.facets.iter().all(|f| f.contains(y))
}

/// Integer points of `mP`, sorted lexicographically.
pub fn lattice_points(p: &HPolytope, m: u32) -> Vec<Point> {
    if p.is_empty() {
        return Vec::new();
    }
    let scale = Rational::from_integer(m.into());
    let verts: Vec<Point> = p.vertices().iter().map(|v| v.scale(&scale)).collect();
    let r = p.rank;
    if r == 0 {
        return vec![Point::zeros(0)];
    }
    let lo: Vec<BigInt> = (0..r).map(|c| verts.iter().map(|v| v[c].ceil().to_integer()).min().unwrap()).collect();
    let hi: Vec<BigInt> = (0..r).map(|c| verts.iter().map(|v| v[c].floor().to_integer()).max().unwrap()).collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let y = Point(cur.iter().map(|c| Rational::from_integer(c.clone())).collect());
        if p.facets.iter().all(|f| !(&f.constant * &scale + f.normal.dot(&y)).is_negative()) {
            out.push(y);
        }
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                cur[i + 1..r].clone_from_slice(&lo[i + 1..r]);
                break;
            }
        }
    }
}

/// A polyhedral cone `{x : a . x >= 0}`, with its extreme rays when pointed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    rank: usize,
    halfspaces: Vec<Point>,
    rays: Option<Vec<Point>>,
}

impl Cone {
    /// The cone generated by `generators`; redundant generators are dropped.
    pub fn from_rays(rank: usize, generators: &[Point]) -> Self {
        let rays = extreme_rays(generators);
        let halfspaces = cone_halfspaces(rank, &rays);
        Cone { rank, halfspaces, rays: Some(rays) }
    }

    pub fn from_halfspaces(rank: usize, halfspaces: &[Point]) -> Self {
        let halfspaces: Vec<Point> = halfspaces
            .iter()
            .filter(|h| !h.is_zero())
            .map(Point::primitive)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let rays = cone_rays(rank, &halfspaces);
        Cone { rank, halfspaces, rays }
    }

    pub fn full_space(rank: usize) -> Self {
        Cone { rank, halfspaces: Vec::new(), rays: if rank == 0 { Some(Vec::new()) } else { None } }
    }

    pub fn zero(rank: usize) -> Self {
        Cone::from_rays(rank, &[])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn halfspaces(&self) -> &[Point] {
        &self.halfspaces
    }

    /// Extreme rays (the generators) when the cone is pointed.
    pub fn rays(&self) -> Option<&[Point]> {
        self.rays.as_deref()
    }

    pub fn is_pointed(&self) -> bool {
        self.rays.is_some()
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.halfspaces.iter().all(|a| !a.dot(x).is_negative())
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        Cone::from_halfspaces(self.rank, &hs)
    }

    pub fn negated(&self) -> Cone {
        Cone {
            rank: self.rank,
            halfspaces: self.halfspaces.iter().map(|h| -h).collect::<BTreeSet<_>>().into_iter().collect(),
            rays: self.rays.as_ref().map(|rs| rs.iter().map(|r| -r).collect::<BTreeSet<_>>().into_iter().collect()),
        }
    }

    /// Whether the cone has nonempty interior.
    pub fn is_full_dimensional(&self) -> bool {
        if let Some(rays) = &self.rays {
            return rank(rays) == self.rank;
        }
        // maximise t with a . x >= t on the unit box
        let n = self.rank;
        let mut obj = vec![Rational::zero(); n + 1];
        obj[n] = Rational::one();
        let mut lp = LinearProgram::new(n + 1, Sense::Maximize, obj);
        for a in &self.halfspaces {
            let mut row = a.0.clone();
            row.push(-Rational::one());
            lp.add_constraint(row, Relation::Ge, Rational::zero());
        }
        for i in 0..n {
            let mut row = vec![Rational::zero(); n + 1];
            row[i] = Rational::one();
            lp.add_constraint(row.clone(), Relation::Le, Rational::one());
            lp.add_constraint(row, Relation::Ge, -Rational::one());
        }
        let mut cap = vec![Rational::zero(); n + 1];
        cap[n] = Rational::one();
        lp.add_constraint(cap, Relation::Le, Rational::one());
        matches!(lp.solve(), Ok(LpOutcome::Optimal { value, .. }) if value.is_positive())
    }
}

/// A collection of maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    cones: Vec<Cone>,
}

impl Fan {
    pub fn new(rank: usize, cones: Vec<Cone>) -> Self {
        Fan { rank, cones }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn negated(&self) -> Fan {
        Fan { rank: self.rank, cones: self.cones.iter().map(Cone::negated).collect() }
    }

    /// Index of the first cone containing `x`.
    pub fn locate(&self, x: &Point) -> Option<usize> {
        self.cones.iter().position(|c| c.contains(x))
    }
}

/// Inner normal fan: one cone per vertex `p`, generated by the normals of the facets through `p`.
/// Cones follow the sorted vertex order.
pub fn normal_fan(p: &HPolytope) -> Result<Fan> {
    if !p.is_solid() {
        return Err(Error::NotSolid);
    }
    let cones = p
        .vertices()
        .iter()
        .map(|v| {
            let gens: Vec<Point> = p.tight_facets(v).iter().map(|&a| p.facets[a].normal.clone()).collect();
            Cone::from_rays(p.rank, &gens)
        })
        .collect();
    Ok(Fan::new(p.rank, cones))
}

/// Outer normal regions of a (possibly lower-dimensional) vertex set:
/// `{x : <x, q> >= <x, q'> for all vertices q'}` for each vertex `q`. These
/// are the linearity domains of the support function.
pub fn outer_normal_fan(p: &VPolytope) -> Fan {
    let cones = p
        .vertices
        .iter()
        .map(|q| {
            let hs: Vec<Point> = p.vertices.iter().filter(|o| *o != q).map(|o| q - o).collect();
            Cone::from_halfspaces(p.rank, &hs)
        })
        .collect();
    Fan::new(p.rank, cones)
}

/// `P ∩ span(basis)` in span coordinates, together with the basis that embeds it back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    pub polytope: VPolytope,
    pub basis: Vec<Point>,
}

impl Slice {
    pub fn embed(&self, c: &Point) -> Point {
        let r = self.basis.first().map_or(0, Point::dim);
        self.basis.iter().zip(c.iter()).fold(Point::zeros(r), |acc, (b, t)| &acc + &b.scale(t))
    }

    /// Vertices in ambient coordinates, sorted.
    pub fn ambient_vertices(&self) -> Vec<Point> {
        let mut v: Vec<Point> = self.polytope.vertices.iter().map(|c| self.embed(c)).collect();
        v.sort();
        v
    }
}

/// Intersects `P` with the linear subspace spanned by `basis`.
pub fn slice_by_subspace(p: &HPolytope, basis: &[Point]) -> Result<Slice> {
    if let Some(bad) = basis.iter().find(|b| b.dim() != p.rank) {
        return Err(Error::DimensionMismatch { expected: p.rank, found: bad.dim() });
    }
    if rank(basis) != basis.len() {
        return Err(Error::Singular);
    }
    let d = basis.len();
    if p.is_empty() {
        return Ok(Slice { polytope: VPolytope::empty(d), basis: basis.to_vec() });
    }
    let mut hs = Vec::new();
    for f in &p.facets {
        let normal = Point(basis.iter().map(|b| f.normal.dot(b)).collect());
        if normal.is_zero() {
            if f.constant.is_negative() {
                return Ok(Slice { polytope: VPolytope::empty(d), basis: basis.to_vec() });
            }
            continue;
        }
        hs.push(Halfspace::new(f.constant.clone(), normal));
    }
    let vertices = enumerate_vertices(d, &hs);
    Ok(Slice { polytope: VPolytope { rank: d, vertices }, basis: basis.to_vec() })
}

/// Minkowski erosion `Q ⊖ H = {x : x + h ∈ Q for all h ∈ H}`.
pub fn erode(q: &HPolytope, h: &VPolytope) -> Result<HPolytope> {
    if h.rank != q.rank {
        return Err(Error::DimensionMismatch { expected: q.rank, found: h.rank });
    }
    if h.is_empty() {
        return Err(Error::Empty);
    }
    if q.is_empty() {
        return Ok(HPolytope::empty(q.rank));
    }
    let hs = q
        .facets
        .iter()
        .map(|f| {
            let shift = h.vertices.iter().map(|v| f.normal.dot(v)).min().expect("nonempty");
            Halfspace::new(&f.constant + shift, f.normal.clone())
        })
        .collect();
    HPolytope::new(q.rank, hs)
}
