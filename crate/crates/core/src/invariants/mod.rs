//! The computable invariants: `α^Π_{m,k}`, `α^{K×K}_{m,k}`, `α^{K×K}`, the
//! toric `t`-function and its minimizing faces, and the quantization level.

mod group;
mod sweep;
mod toric;

use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{format_rational, Point, Rational};
use crate::plfunc::{anticanonical_coeffs, upsilon_from_divisor, DivisorData, PLFunction};
use crate::polytope::HPolytope;
use crate::rootsystem::{is_w_invariant, RootData, WeightSet};

pub use group::{
    alpha_group, alpha_group_delcroix, alpha_pi, alpha_pi_fano, alpha_pi_general, quantization_m0, Quantization,
};
pub use sweep::{alpha_mk, DimensionMode, MkResult, SweepOptions};
pub use toric::{
    alpha_toric, conjecture_check, faces, min_face_set, sup_t_on_hull, t_function, ConjectureReport, Face, FailReason,
    Verdict,
};

/// A polarized group compactification: root data, the polytope of `(M, L)`
/// and the divisor coefficients of `K⁻¹_M` restricted to the toric part.
#[derive(Clone, Debug)]
pub struct CompactificationData {
    rd: RootData,
    polytope: HPolytope,
    bundle: DivisorData,
    upsilon: PLFunction,
    fano: bool,
}

impl CompactificationData {
    /// Validates W-invariance and, when `fano` is set, that the facet
    /// constants are the anticanonical coefficients with 0 interior.
    pub fn new(rd: RootData, polytope: HPolytope, bundle: Option<DivisorData>, fano: bool) -> Result<Self> {
        if polytope.rank() != rd.rank() {
            return Err(Error::DimensionMismatch { expected: rd.rank(), found: polytope.rank() });
        }
        if !polytope.is_solid() {
            return Err(Error::NotSolid);
        }
        if !is_w_invariant(&rd, &polytope) {
            return Err(Error::NotWInvariant);
        }
        let anti = anticanonical_coeffs(&polytope, &rd);
        if fano {
            if !polytope.contains_origin_in_interior() {
                return Err(Error::FanoMismatch("origin is not interior to P".into()));
            }
            for (a, (f, c)) in polytope.facets().iter().zip(anti.coeffs()).enumerate() {
                if &f.constant != c {
                    return Err(Error::FanoMismatch(format!(
                        "facet {} has constant {} but anticanonical coefficient {}",
                        a + 1,
                        format_rational(&f.constant),
                        format_rational(c)
                    )));
                }
            }
            if bundle.as_ref().is_some_and(|b| b != &anti) {
                return Err(Error::FanoMismatch("bundle override disagrees with the anticanonical divisor".into()));
            }
        }
        let bundle = bundle.unwrap_or(anti);
        let upsilon = upsilon_from_divisor(&polytope, &bundle)?;
        Ok(CompactificationData { rd, polytope, bundle, upsilon, fano })
    }

    pub fn root_data(&self) -> &RootData {
        &self.rd
    }

    pub fn polytope(&self) -> &HPolytope {
        &self.polytope
    }

    pub fn bundle(&self) -> &DivisorData {
        &self.bundle
    }

    /// `Υ` of the anticanonical bundle on the inner normal fan of `P`.
    pub fn upsilon(&self) -> &PLFunction {
        &self.upsilon
    }

    pub fn is_fano(&self) -> bool {
        self.fano
    }

    pub fn is_toric(&self) -> bool {
        self.rd.is_toric()
    }

    /// Builds a weight set at level `m`, checking dominance and membership in `mP`.
    pub fn weight_set(&self, m: u32, weights: Vec<Point>) -> Result<WeightSet> {
        WeightSet::new(&self.rd, &self.polytope, m, weights)
    }

    /// Human-readable notes, e.g. vertices where the smoothness condition fails.
    pub fn warnings(&self) -> Vec<String> {
        self.polytope
            .delzant_violations()
            .into_iter()
            .map(|v| format!("Delzant condition fails at vertex {v}"))
            .collect()
    }
}

/// What pins down an α-value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A ray of the refined chamber fan carrying the binding constraint.
    Ray(Point),
    /// Facet index and center-slice vertex.
    FacetVertex {
        facet: usize,
        vertex: Point,
    },
    /// A vertex of `P` and a vertex of the center slice.
    VertexPair {
        vertex: Point,
        center: Point,
    },
    /// A vertex of `P` (toric minimum of `t`).
    Vertex(Point),
    /// The point `p ∈ mP` from an optimal LP solution.
    LpPoint(Point),
    None,
}

/// A supremum in the window `(0, 1]`; `capped` means only the window bounds it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaValue {
    pub value: Rational,
    pub capped: bool,
    pub witness: Witness,
}

impl AlphaValue {
    pub(crate) fn cap() -> Self {
        AlphaValue { value: Rational::from_integer(1.into()), capped: true, witness: Witness::None }
    }
}

impl fmt::Display for AlphaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.value))?;
        if self.capped {
            write!(f, " (capped)")?;
        }
        Ok(())
    }
}
