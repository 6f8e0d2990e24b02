//! Root systems embedded in the coordinates of `𝔞*`, with the pairing taken
//! to be the standard dot product.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{null_space, rank, solve_linear, Halfspace, Point, Rational};
use crate::polytope::{lattice_points, Cone, HPolytope, VPolytope};

/// Irreducible types we know how to embed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::G => "G",
        };
        f.write_str(s)
    }
}

/// One irreducible factor placed on consecutive coordinates starting at `offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedFactor {
    #[serde(rename = "type")]
    pub kind: RootType,
    pub n: usize,
    #[serde(default)]
    pub offset: usize,
}

impl NamedFactor {
    /// Number of coordinates the standard embedding occupies.
    pub fn width(&self) -> usize {
        match self.kind {
            RootType::A => self.n + 1,
            RootType::G => 3,
            _ => self.n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSpec {
    Named(Vec<NamedFactor>),
    Explicit(Vec<Point>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    rank: usize,
    positive_roots: Vec<Point>,
    simple_roots: Vec<Point>,
    rho: Point,
    center_basis: Vec<Point>,
}

fn e(rank: usize, i: usize) -> Point {
    Point::unit(rank, i)
}

fn named_roots(rank: usize, f: &NamedFactor) -> Result<Vec<Point>> {
    let o = f.offset;
    if o + f.width() > rank {
        return Err(Error::InvalidRootSystem(format!(
            "{}{} at offset {} needs {} coordinates, rank is {}",
            f.kind,
            f.n,
            o,
            f.width(),
            rank
        )));
    }
    let min_n = match f.kind {
        RootType::A | RootType::B | RootType::C => 1,
        RootType::D => 2,
        RootType::G => 2,
    };
    if f.n < min_n || (f.kind == RootType::G && f.n != 2) {
        return Err(Error::InvalidRootSystem(format!("no root system of type {}{}", f.kind, f.n)));
    }
    let mut roots = Vec::new();
    let n = f.n;
    let pairs = |count: usize, roots: &mut Vec<Point>, plus: bool| {
        for i in 0..count {
            for j in i + 1..count {
                roots.push(&e(rank, o + i) - &e(rank, o + j));
                if plus {
                    roots.push(&e(rank, o + i) + &e(rank, o + j));
                }
            }
        }
    };
    match f.kind {
        RootType::A => pairs(n + 1, &mut roots, false),
        RootType::B => {
            pairs(n, &mut roots, true);
            roots.extend((0..n).map(|i| e(rank, o + i)));
        }
        RootType::C => {
            pairs(n, &mut roots, true);
            roots.extend((0..n).map(|i| e(rank, o + i).scale(&Rational::from_integer(2.into()))));
        }
        RootType::D => pairs(n, &mut roots, true),
        RootType::G => {
            let v = |c: [i64; 3]| {
                let mut p = Point::zeros(rank);
                for (k, x) in c.iter().enumerate() {
                    p.0[o + k] = Rational::from_integer((*x).into());
                }
                p
            };
            roots.extend([[1, -1, 0], [-2, 1, 1], [-1, 0, 1], [0, -1, 1], [1, -2, 1], [-1, -1, 2]].map(v));
        }
    }
    Ok(roots)
}

/// `s_α(y) = y − 2<y,α>/<α,α> α`.
pub fn reflect(alpha: &Point, y: &Point) -> Point {
    let c = Rational::from_integer(2.into()) * y.dot(alpha) / alpha.dot(alpha);
    y - &alpha.scale(&c)
}

/// Builds and validates root data from named factors or explicit positive roots.
pub fn build_root_data(rank_: usize, spec: &RootSpec) -> Result<RootData> {
    let positive: Vec<Point> = match spec {
        RootSpec::Named(factors) => {
            let mut used = BTreeSet::new();
            let mut roots = Vec::new();
            for f in factors {
                for c in f.offset..f.offset + f.width() {
                    if !used.insert(c) {
                        return Err(Error::InvalidRootSystem(format!("coordinate {c} used by two factors")));
                    }
                }
                roots.extend(named_roots(rank_, f)?);
            }
            roots
        }
        RootSpec::Explicit(v) => v.clone(),
    };
    RootData::from_positive_roots(rank_, positive)
}

impl RootData {
    /// The torus: no roots at all.
    pub fn toric(rank: usize) -> RootData {
        RootData {
            rank,
            positive_roots: Vec::new(),
            simple_roots: Vec::new(),
            rho: Point::zeros(rank),
            center_basis: (0..rank).map(|i| Point::unit(rank, i)).collect(),
        }
    }

    pub fn from_positive_roots(rank_: usize, roots: Vec<Point>) -> Result<RootData> {
        if let Some(bad) = roots.iter().find(|r| r.dim() != rank_) {
            return Err(Error::DimensionMismatch { expected: rank_, found: bad.dim() });
        }
        let set: BTreeSet<Point> = roots.iter().cloned().collect();
        if set.len() != roots.len() || set.iter().any(Point::is_zero) {
            return Err(Error::InvalidRootSystem("roots must be distinct and nonzero".into()));
        }
        if set.iter().any(|r| set.contains(&-r)) {
            return Err(Error::InvalidRootSystem("a positive system cannot contain both α and −α".into()));
        }
        if roots.is_empty() {
            return Ok(RootData::toric(rank_));
        }
        // simple roots are the indecomposable positive roots
        let simple: Vec<Point> =
            roots.iter().filter(|a| !set.iter().any(|b| b != *a && set.contains(&(*a - b)))).cloned().collect();
        if rank(&simple) != simple.len() {
            return Err(Error::InvalidRootSystem("simple roots are linearly dependent".into()));
        }
        let cols: Vec<Point> = (0..rank_).map(|c| Point(simple.iter().map(|s| s[c].clone()).collect())).collect();
        for r in &roots {
            let coeffs = solve_linear(&cols, &r.0)
                .map_err(|_| Error::InvalidRootSystem(format!("{r} is not in the span of the simple roots")))?;
            if coeffs.iter().any(|c| c.is_negative() || !c.is_integer()) {
                return Err(Error::InvalidRootSystem(format!(
                    "{r} is not a nonnegative integer combination of simple roots"
                )));
            }
        }
        for a in &simple {
            for b in &roots {
                let cartan = Rational::from_integer(2.into()) * b.dot(a) / a.dot(a);
                if !cartan.is_integer() {
                    return Err(Error::InvalidRootSystem(format!("non-integral Cartan number between {a} and {b}")));
                }
                if b == a {
                    continue;
                }
                if !set.contains(&reflect(a, b)) {
                    return Err(Error::InvalidRootSystem(format!("reflection in {a} does not preserve {b}")));
                }
            }
        }
        let half = Rational::new(1.into(), 2.into());
        let rho = roots.iter().fold(Point::zeros(rank_), |acc, r| &acc + r).scale(&half);
        let center_basis = null_space(&roots, rank_);
        let mut positive_roots = roots;
        positive_roots.sort();
        Ok(RootData { rank: rank_, positive_roots, simple_roots: simple, rho, center_basis })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Point] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Point] {
        &self.simple_roots
    }

    pub fn rho(&self) -> &Point {
        &self.rho
    }

    /// Basis of the center `𝔞_z`, the common kernel of all roots.
    pub fn center_basis(&self) -> &[Point] {
        &self.center_basis
    }

    pub fn is_toric(&self) -> bool {
        self.positive_roots.is_empty()
    }

    pub fn is_dominant(&self, y: &Point) -> bool {
        self.positive_roots.iter().all(|a| !a.dot(y).is_negative())
    }

    /// The closed positive chamber `{x : α(x) >= 0}`.
    pub fn chamber(&self) -> Cone {
        if self.is_toric() {
            Cone::full_space(self.rank)
        } else {
            Cone::from_halfspaces(self.rank, &self.simple_roots)
        }
    }
}

/// Orbit under the group generated by simple reflections, sorted.
pub fn weyl_orbit(rd: &RootData, y: &Point) -> Vec<Point> {
    let mut seen: BTreeSet<Point> = BTreeSet::new();
    let mut queue = VecDeque::from([y.clone()]);
    seen.insert(y.clone());
    while let Some(p) = queue.pop_front() {
        for a in &rd.simple_roots {
            let q = reflect(a, &p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn weyl_group_order(rd: &RootData) -> usize {
    // ρ is regular, so its stabiliser is trivial
    weyl_orbit(rd, &rd.rho).len()
}

/// `conv(W · I)`.
pub fn orbit_hull(rd: &RootData, weights: &[Point]) -> VPolytope {
    let pts: BTreeSet<Point> = weights.iter().flat_map(|w| weyl_orbit(rd, w)).collect();
    let pts: Vec<Point> = pts.into_iter().collect();
    VPolytope::from_points(rd.rank, &pts).expect("orbit points share the ambient rank")
}

/// Each simple reflection permutes the facets (constants matched).
pub fn is_w_invariant(rd: &RootData, p: &HPolytope) -> bool {
    if p.rank() != rd.rank {
        return false;
    }
    let facets: BTreeSet<(Point, Rational)> =
        p.facets().iter().map(|f| (f.normal.clone(), f.constant.clone())).collect();
    rd.simple_roots.iter().all(|a| {
        p.facets().iter().all(|f| {
            let g = Halfspace::new(f.constant.clone(), reflect(a, &f.normal)).normalized();
            facets.contains(&(g.normal, g.constant))
        })
    })
}

/// Dominant lattice points of `mP`, sorted.
pub fn dominant_points(rd: &RootData, p: &HPolytope, m: u32) -> Result<Vec<Point>> {
    if !is_w_invariant(rd, p) {
        return Err(Error::NotWInvariant);
    }
    Ok(lattice_points(p, m).into_iter().filter(|y| rd.is_dominant(y)).collect())
}

/// Weyl dimension formula `∏ <λ+ρ,α>/<ρ,α>`.
pub fn irrep_dimension(rd: &RootData, lambda: &Point) -> Result<u64> {
    if !rd.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let shifted = lambda + &rd.rho;
    let d = rd.positive_roots.iter().fold(Rational::one(), |acc, a| acc * shifted.dot(a) / rd.rho.dot(a));
    if !d.is_integer() {
        return Err(Error::NotIntegralWeight(lambda.clone()));
    }
    d.to_integer().try_into().map_err(|_| Error::Precondition("representation dimension overflows u64".into()))
}

/// `𝔞₊^∨`, generated by the simple roots; the zero cone for a torus.
pub fn dual_positive_cone(rd: &RootData) -> Cone {
    Cone::from_rays(rd.rank, &rd.simple_roots)
}

/// A set `I_Π` of dominant weights at level `m`, with its orbit hull `Î_Π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    level: u32,
    weights: Vec<Point>,
    hull: VPolytope,
}

impl WeightSet {
    /// Validates that every weight is integral, dominant and inside `mP`.
    pub fn new(rd: &RootData, p: &HPolytope, m: u32, weights: Vec<Point>) -> Result<WeightSet> {
        if m == 0 {
            return Err(Error::Precondition("level m must be positive".into()));
        }
        let mp = p.scaled(&Rational::from_integer(m.into()));
        for w in &weights {
            if w.dim() != rd.rank {
                return Err(Error::DimensionMismatch { expected: rd.rank, found: w.dim() });
            }
            if !w.is_integral() {
                return Err(Error::NotIntegralWeight(w.clone()));
            }
            if !rd.is_dominant(w) {
                return Err(Error::NotDominant(w.clone()));
            }
            if !mp.contains(w) {
                return Err(Error::OutsidePolytope(w.clone()));
            }
        }
        Ok(Self::new_unchecked(rd, m, weights))
    }

    pub(crate) fn new_unchecked(rd: &RootData, m: u32, mut weights: Vec<Point>) -> WeightSet {
        weights.sort();
        weights.dedup();
        let hull = orbit_hull(rd, &weights);
        WeightSet { level: m, weights, hull }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn weights(&self) -> &[Point] {
        &self.weights
    }

    pub fn orbit_hull(&self) -> &VPolytope {
        &self.hull
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `Σ (dim V_λ)²`, the dimension of the corresponding subspace.
    pub fn true_dimension(&self, rd: &RootData) -> Result<u64> {
        self.weights.iter().map(|w| irrep_dimension(rd, w).map(|d| d * d)).sum()
    }
}
