//! Shared fixtures, independent oracles and property checks for the
//! integration tests.
#![allow(dead_code)]

use alpha_polytope::cli::{bundled, bundled_names, Loaded};
use alpha_polytope::invariants::{alpha_mk, alpha_pi_fano, alpha_toric, t_function, SweepOptions, Witness};
use alpha_polytope::kernel::{
    dual_description, Description, Halfspace, LinearProgram, LpOutcome, Point, Rational, Relation, Sense,
};
use alpha_polytope::plfunc::{evaluate, support_function};
use alpha_polytope::polytope::{lattice_points, support_value, HPolytope, VPolytope};
use alpha_polytope::rootsystem::{dominant_points, weyl_orbit};
use num::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub fn fixture(name: &str) -> Loaded {
    bundled(name).unwrap_or_else(|e| panic!("bundled {name}: {e}"))
}

pub fn all_fixtures() -> Vec<Loaded> {
    bundled_names().into_iter().map(fixture).collect()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=7).prop_map(|(n, d)| q(n, d))
}

pub fn point(rank: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(rational(), rank).prop_map(Point)
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=7).prop_map(|(n, d)| q(n, d))
}

/// `t` straight from the definition: the largest `s` with `−s·x ∈ P`.
pub fn t_direct(p: &HPolytope, x: &Point) -> Rational {
    let s = p.facets().iter().filter(|f| f.normal.dot(x).is_positive()).map(|f| &f.constant / f.normal.dot(x)).min();
    match s {
        Some(s) => &s / (&s + Rational::one()),
        None => Rational::one(),
    }
}

/// Minimum of `t` over `(1/m)𝔐 ∩ P`.
pub fn grid_min_t(p: &HPolytope, m: u32) -> Rational {
    let inv = q(1, m.into());
    lattice_points(p, m).iter().map(|y| t_direct(p, &y.scale(&inv))).min().expect("nonempty grid")
}

/// `max t` on the segment `[a, b]`, found among the endpoints and the points
/// where two of the linear pieces of `1/s*` cross.
pub fn segment_sup_t(p: &HPolytope, a: &Point, b: &Point) -> Rational {
    let at = |lam: &Rational| -> Point { Point(a.iter().zip(b.iter()).map(|(x, y)| x + lam * (y - x)).collect()) };
    let mut params = vec![Rational::zero(), Rational::one()];
    let g: Vec<(Rational, Rational)> = p
        .facets()
        .iter()
        .map(|f| (f.normal.dot(a) / &f.constant, (f.normal.dot(b) - f.normal.dot(a)) / &f.constant))
        .collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let slope = &g[i].1 - &g[j].1;
            if !slope.is_zero() {
                let lam = (&g[j].0 - &g[i].0) / slope;
                if lam > Rational::zero() && lam < Rational::one() {
                    params.push(lam);
                }
            }
        }
    }
    params.iter().map(|l| t_direct(p, &at(l))).max().unwrap()
}

/// Brute-force `α_{m,2}` for toric Fano data: every pair of lattice points of
/// `mP`, each scored by the largest `t` on its segment.
pub fn pair_sweep(p: &HPolytope, m: u32) -> Rational {
    let inv = q(1, m.into());
    let pts: Vec<Point> = lattice_points(p, m).iter().map(|y| y.scale(&inv)).collect();
    let mut best: Option<Rational> = None;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let v = segment_sup_t(p, &pts[i], &pts[j]);
            if best.as_ref().is_none_or(|b| &v < b) {
                best = Some(v);
            }
        }
    }
    best.expect("at least two lattice points")
}

fn vertices_of(p: &HPolytope) -> VPolytope {
    p.to_vpolytope()
}

pub type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn check_support(l: &Loaded, x: &Point, y: &Point, lam: &Rational) -> Check {
    let v = vertices_of(l.data.polytope());
    let sv = |z: &Point| support_value(&v, z).map_err(|e| e.to_string());
    let (vx, vy) = (sv(x)?, sv(y)?);
    let sum = Point(x.iter().zip(y.iter()).map(|(a, b)| a + b).collect());
    ensure(sv(&x.scale(lam))? == lam * &vx, || format!("{}: v({lam}·x) != {lam}·v(x) at {x:?}", l.name))?;
    ensure(sv(&sum)? <= &vx + &vy, || format!("{}: subadditivity fails at {x:?}, {y:?}", l.name))?;
    let pl = evaluate(&support_function(&v), x).map_err(|e| e.to_string())?;
    ensure(pl == vx, || format!("{}: PL support function disagrees at {x:?}", l.name))
}

pub fn check_fano_identity(l: &Loaded, x: &Point) -> Check {
    let neg = x.scale(&-Rational::one());
    let ups = l.data.upsilon().evaluate(&neg).map_err(|e| e.to_string())?;
    let v = support_value(&vertices_of(l.data.polytope()), x).map_err(|e| e.to_string())?;
    ensure(ups == -v, || format!("{}: Υ(−x) != −v_P(x) at {x:?}", l.name))
}

/// For each vertex `p`, the point `−s*·p` sits on the boundary of `P`.
pub fn check_t_boundary(l: &Loaded) -> Check {
    let p = l.data.polytope();
    for v in p.vertices() {
        let t = t_function(p, v).map_err(|e| e.to_string())?;
        ensure(t < Rational::one(), || format!("{}: t = 1 at vertex {v:?}", l.name))?;
        let s = &t / (Rational::one() - &t);
        let y = v.scale(&-s);
        let values: Vec<Rational> = p.facets().iter().map(|f| f.eval(&y)).collect();
        ensure(values.iter().all(|x| !x.is_negative()), || format!("{}: −s*p outside P for {v:?}", l.name))?;
        ensure(values.iter().any(Zero::is_zero), || format!("{}: −s*p interior for {v:?}", l.name))?;
    }
    Ok(())
}

pub fn check_dominant_uniqueness(l: &Loaded, m: u32) -> Check {
    let rd = l.data.root_data();
    for y in lattice_points(l.data.polytope(), m) {
        let reps = weyl_orbit(rd, &y).into_iter().filter(|z| rd.is_dominant(z)).count();
        ensure(reps == 1, || format!("{}: {y:?} has {reps} dominant representatives", l.name))?;
    }
    Ok(())
}

/// `α_{m,k}` is nondecreasing in `k` and bounded below by the toric value.
pub fn check_k_monotone(l: &Loaded, m: u32, k_max: u64) -> Check {
    let floor = alpha_toric(l.data.polytope()).map_err(|e| e.to_string())?.value;
    let mut prev = floor.clone();
    for k in 1..=k_max {
        let a = alpha_mk(&l.data, m, k, SweepOptions::default()).map_err(|e| e.to_string())?.alpha.value;
        ensure(a >= prev, || format!("{}: α_{{{m},{k}}} = {a} drops below {prev}", l.name))?;
        prev = a;
    }
    Ok(())
}

/// The LP witness `p` reproduces the optimum: `p ∈ mP` and some `y ∈ Î` has
/// `p + s·y − 2m(1+s)ρ` in the dual cone, with `s = α/(1−α)`.
pub fn check_lp_witness(l: &Loaded, m: u32, weights: Vec<Point>) -> Check {
    let data = &l.data;
    let ws = data.weight_set(m, weights).map_err(|e| e.to_string())?;
    let a = alpha_pi_fano(data, &ws).map_err(|e| e.to_string())?;
    if a.capped {
        return Ok(());
    }
    let Witness::LpPoint(p) = &a.witness else {
        return Err(format!("{}: expected an LP witness", l.name));
    };
    let mq = Rational::from_integer(m.into());
    ensure(data.polytope().scaled(&mq).contains(p), || format!("{}: witness {p:?} outside mP", l.name))?;
    let s = &a.value / (Rational::one() - &a.value);
    let rd = data.root_data();
    let target = rd.rho().scale(&(q(2, 1) * &mq * (Rational::one() + &s)));
    // unknowns: convex weights λ_j on hull vertices, τ_k >= 0 on simple roots
    let hull = ws.orbit_hull().vertices();
    let gens = rd.simple_roots();
    let r = rd.rank();
    let n = hull.len() + gens.len();
    let mut lp = LinearProgram::new(n, Sense::Minimize, vec![Rational::zero(); n]);
    lp.set_all_nonnegative();
    for c in 0..r {
        let mut row: Vec<Rational> = hull.iter().map(|w| &s * &w[c]).collect();
        row.extend(gens.iter().map(|g| -g[c].clone()));
        lp.add_constraint(row, Relation::Eq, &target[c] - &p[c]);
    }
    let mut ones = vec![Rational::one(); hull.len()];
    ones.resize(n, Rational::zero());
    lp.add_constraint(ones, Relation::Eq, Rational::one());
    match lp.solve().map_err(|e| e.to_string())? {
        LpOutcome::Optimal { .. } => Ok(()),
        other => Err(format!("{}: witness {p:?} does not certify α = {}: {other:?}", l.name, a.value)),
    }
}

/// H → V → H gives back the same facets and vertices.
pub fn check_roundtrip(l: &Loaded) -> Check {
    let p = l.data.polytope();
    let back = p.to_vpolytope().to_hpolytope().map_err(|e| e.to_string())?;
    let key = |h: &HPolytope| {
        let mut f: Vec<(Point, Rational)> = h.facets().iter().map(|f| (f.normal.clone(), f.constant.clone())).collect();
        f.sort();
        f
    };
    ensure(key(&back) == key(p), || format!("{}: facets differ after roundtrip", l.name))?;
    ensure(back.vertices() == p.vertices(), || format!("{}: vertices differ after roundtrip", l.name))?;
    let hs: Vec<Halfspace> = p.facets().to_vec();
    match dual_description(&Description::Halfspaces { dim: p.rank(), halfspaces: hs }).map_err(|e| e.to_string())? {
        Description::Vertices { vertices, .. } => {
            let mut pts = vertices;
            pts.sort();
            ensure(pts == p.vertices(), || format!("{}: dual description vertices differ", l.name))
        }
        _ => Err(format!("{}: dual description returned H", l.name)),
    }
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Check) -> Check {
    let mut runner = TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    runner.run(&strategy, |v| test(v).map_err(TestCaseError::fail)).map_err(|e| e.to_string())
}

/// Toric data on which `α_{m,k}` is swept for monotonicity.
pub const MONOTONE_FIXTURES: [&str; 2] = ["cp1xcp1", "cp2-blowup2"];

/// The whole property suite with a fixed seed; returns the first failure.
pub fn property_suite() -> Check {
    for l in all_fixtures() {
        let r = l.data.polytope().rank();
        run(100, (point(r), point(r), positive_rational()), |(x, y, lam)| check_support(&l, &x, &y, &lam))?;
        if l.data.is_fano() {
            run(100, point(r), |x| check_fano_identity(&l, &x))?;
        }
        if l.data.polytope().is_reflexive() {
            check_t_boundary(&l)?;
        }
        for m in 1..=3 {
            check_dominant_uniqueness(&l, m)?;
        }
        for m in 1..=2 {
            for w in dominant_points(l.data.root_data(), l.data.polytope(), m).map_err(|e| e.to_string())? {
                check_lp_witness(&l, m, vec![w])?;
            }
        }
        check_roundtrip(&l)?;
    }
    for name in MONOTONE_FIXTURES {
        let l = fixture(name);
        for m in 1..=3 {
            check_k_monotone(&l, m, 4)?;
        }
    }
    Ok(())
}
