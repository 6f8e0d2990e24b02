//! Group-case α-values: the chamber criterion, its LP form for Fano data,
//! the center-slice formula and Delcroix's erosion formula.

use std::collections::BTreeSet;

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use super::{AlphaValue, CompactificationData, Witness};
use crate::error::{Error, Result};
use crate::kernel::{LinearProgram, LpOutcome, Point, Rational, Relation, Sense};
use crate::plfunc::common_refinement;
use crate::polytope::{erode, normal_fan, outer_normal_fan, slice_by_subspace, support_value, HPolytope};
use crate::rootsystem::{dual_positive_cone, orbit_hull, WeightSet};

/// Evaluates `α^Π` with the LP when the data is Fano, otherwise with the chamber criterion.
pub fn alpha_pi(data: &CompactificationData, weights: &WeightSet) -> Result<AlphaValue> {
    if data.is_fano() {
        alpha_pi_fano(data, weights)
    } else {
        alpha_pi_general(data, weights)
    }
}

/// `sup{α ∈ (0,1) : α v_P(x) + Υ(−x) + 2ρ(x) − (α/m) v_Î(x) < 0 on the closed chamber minus 0}`.
///
/// Every term is linear on the cells of the common refinement of the outer
/// normal fans of `P` and `Î` restricted to the chamber, so the condition
/// is checked at the rays of that refinement, giving one α-interval per ray.
pub fn alpha_pi_general(data: &CompactificationData, weights: &WeightSet) -> Result<AlphaValue> {
    if weights.is_empty() {
        return Err(Error::Precondition("weight set is empty".into()));
    }
    let rd = data.root_data();
    let p = data.polytope();
    let hull = weights.orbit_hull();
    let m = Rational::from_integer(weights.level().into());
    // Υ(−·) lives on the negated inner fan of P, which is the outer fan of P
    let fans = [normal_fan(p)?.negated(), outer_normal_fan(hull)];
    let refined = common_refinement(&fans, &rd.chamber())?;
    let rays: BTreeSet<Point> = refined.cones().iter().flat_map(|c| c.rays().unwrap_or_default().to_vec()).collect();

    let pv = p.to_vpolytope();
    let two_rho = rd.rho().scale(&Rational::from_integer(2.into()));
    let mut lower = Rational::zero();
    let mut upper: Option<(Rational, Point)> = None;
    for x in &rays {
        let a = support_value(&pv, x)? - support_value(hull, x)? / &m;
        let b = data.upsilon().evaluate(&-x)? + two_rho.dot(x);
        if a.is_zero() {
            if !b.is_negative() {
                return Err(Error::EmptyWindow);
            }
        } else if a.is_positive() {
            let u = -&b / &a;
            if upper.as_ref().is_none_or(|(cur, _)| &u < cur) {
                upper = Some((u, x.clone()));
            }
        } else {
            lower = lower.max(-&b / &a);
        }
    }
    match upper {
        Some((u, ray)) if u < Rational::one() => {
            if u <= lower {
                return Err(Error::EmptyWindow);
            }
            Ok(AlphaValue { value: u, capped: false, witness: Witness::Ray(ray) })
        }
        _ => {
            if lower >= Rational::one() {
                return Err(Error::EmptyWindow);
            }
            Ok(AlphaValue::cap())
        }
    }
}

/// `sup{α : (mP + sÎ − 2m(1+s)ρ) ∩ 𝔞₊^∨ ≠ ∅}` with `s = α/(1−α)`, as one LP.
///
/// Substituting `ν_j = s μ_j` for the convex weights on the hull vertices
/// makes the system linear: maximize `Σν` subject to `p ∈ mP`, `ν, τ ≥ 0` and
/// `p + Σ ν_j w_j − 2mρ − 2m(Σν)ρ = Σ τ_k γ_k` over the dual-cone generators `γ_k`.
pub fn alpha_pi_fano(data: &CompactificationData, weights: &WeightSet) -> Result<AlphaValue> {
    if !data.is_fano() {
        return Err(Error::Precondition("the LP form needs Fano data".into()));
    }
    if weights.is_empty() {
        return Err(Error::Precondition("weight set is empty".into()));
    }
    let rd = data.root_data();
    let p = data.polytope();
    let r = rd.rank();
    let m = Rational::from_integer(weights.level().into());
    let hull = weights.orbit_hull().vertices();
    let cone = dual_positive_cone(rd);
    let gens = cone.rays().unwrap_or_default();
    let (nw, ng) = (hull.len(), gens.len());
    let n = r + nw + ng;

    let mut objective = vec![Rational::zero(); n];
    for o in objective.iter_mut().skip(r).take(nw) {
        *o = Rational::one();
    }
    let mut lp = LinearProgram::new(n, Sense::Maximize, objective);
    for j in r..n {
        lp.set_nonnegative(j);
    }
    for f in p.facets() {
        let mut row = vec![Rational::zero(); n];
        row[..r].clone_from_slice(f.normal.coords());
        lp.add_constraint(row, Relation::Ge, -(&m * &f.constant));
    }
    let two_m_rho = rd.rho().scale(&(&m * Rational::from_integer(2.into())));
    for c in 0..r {
        let mut row = vec![Rational::zero(); n];
        row[c] = Rational::one();
        for (j, w) in hull.iter().enumerate() {
            row[r + j] = &w[c] - &two_m_rho[c];
        }
        for (k, g) in gens.iter().enumerate() {
            row[r + nw + k] = -g[c].clone();
        }
        lp.add_constraint(row, Relation::Eq, two_m_rho[c].clone());
    }
    match lp.solve()? {
        LpOutcome::Optimal { value, witness } => Ok(AlphaValue {
            value: &value / (&value + Rational::one()),
            capped: false,
            witness: Witness::LpPoint(Point(witness.coords()[..r].to_vec())),
        }),
        LpOutcome::Unbounded => Ok(AlphaValue::cap()),
        LpOutcome::Infeasible => {
            Err(Error::Precondition("(mP − 2mρ) misses the dual positive cone; the data is not Fano".into()))
        }
    }
}

fn center_vertices(data: &CompactificationData) -> Result<Vec<Point>> {
    let slice = slice_by_subspace(data.polytope(), data.root_data().center_basis())?;
    Ok(slice.ambient_vertices())
}

/// `min 1/l_A(v_z)` over facets `A` and vertices `v_z` of `P ∩ 𝔞_z*`, capped at 1.
///
/// Facets with `l_A(v_z) <= 0` impose nothing. Ties go to the smallest vertex,
/// then to the first facet.
pub fn alpha_group(data: &CompactificationData) -> Result<AlphaValue> {
    let mut best: Option<(Rational, usize, Point)> = None;
    for v in center_vertices(data)? {
        for (a, f) in data.polytope().facets().iter().enumerate() {
            let l = f.eval(&v);
            if !l.is_positive() {
                continue;
            }
            let cand = l.recip();
            if best.as_ref().is_none_or(|(b, _, _)| &cand < b) {
                best = Some((cand, a, v.clone()));
            }
        }
    }
    Ok(match best {
        Some((value, facet, vertex)) => {
            let capped = value >= Rational::one();
            AlphaValue { value: value.min(Rational::one()), capped, witness: Witness::FacetVertex { facet, vertex } }
        }
        None => AlphaValue::cap(),
    })
}

/// `sup{t : t(P − (P ∩ 𝔞_z*)) ⊆ P(K⁻¹) ⊖ conv(W·2ρ)}`.
pub fn alpha_group_delcroix(data: &CompactificationData) -> Result<AlphaValue> {
    if !data.is_fano() {
        return Err(Error::Precondition("the erosion formula needs Fano data".into()));
    }
    let rd = data.root_data();
    let p = data.polytope();
    let anti = HPolytope::new(
        p.rank(),
        p.facets()
            .iter()
            .zip(data.bundle().coeffs())
            .map(|(f, c)| crate::kernel::Halfspace::new(c.clone(), f.normal.clone()))
            .collect(),
    )?;
    let h = orbit_hull(rd, &[rd.rho().scale(&Rational::from_integer(2.into()))]);
    let eroded = erode(&anti, &h)?;
    if eroded.is_empty() || eroded.facets().iter().any(|f| f.constant.is_negative()) {
        return Err(Error::Precondition("the eroded body does not contain the origin".into()));
    }
    let mut best: Option<(Rational, Point, Point)> = None;
    for c in center_vertices(data)? {
        for v in p.vertices() {
            let d = v - &c;
            let t = eroded
                .facets()
                .iter()
                .filter_map(|f| {
                    let u = f.normal.dot(&d);
                    u.is_negative().then(|| &f.constant / -u)
                })
                .min();
            if let Some(t) = t {
                if best.as_ref().is_none_or(|(b, _, _)| &t < b) {
                    best = Some((t, v.clone(), c.clone()));
                }
            }
        }
    }
    Ok(match best {
        Some((t, vertex, center)) => AlphaValue {
            capped: t >= Rational::one(),
            value: t.min(Rational::one()),
            witness: Witness::VertexPair { vertex, center },
        },
        None => AlphaValue::cap(),
    })
}

/// The level at which the center-slice minimum becomes a lattice weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quantization {
    pub m0: u32,
    pub vertex: Point,
    pub alpha: AlphaValue,
}

pub fn quantization_m0(data: &CompactificationData) -> Result<Quantization> {
    let alpha = alpha_group(data)?;
    let Witness::FacetVertex { vertex, .. } = &alpha.witness else {
        return Err(Error::Precondition("no facet is positive on the center slice".into()));
    };
    let lcm: BigInt = vertex.denominator_lcm();
    let m0 = lcm.to_u32().ok_or_else(|| Error::Precondition("quantization level overflows u32".into()))?;
    Ok(Quantization { m0, vertex: vertex.clone(), alpha })
}
