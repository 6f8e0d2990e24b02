//! The versioned JSON input format.
//!
//! Numbers are JSON integers or strings such as `"-1/2"`; a U+2212 minus sign
//! is accepted on input. Output always uses ASCII.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::CompactificationData;
use crate::kernel::{determinant, format_rational, parse_rational, Halfspace, Point, Rational};
use crate::plfunc::DivisorData;
use crate::polytope::{HPolytope, VPolytope};
use crate::rootsystem::{build_root_data, NamedFactor, RootSpec};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Num::Int(i) => Ok(Rational::from_integer((*i).into())),
            Num::Str(s) => parse_rational(s).map_err(|e| Error::Schema(e.to_string())),
        }
    }

    pub fn from_rational(r: &Rational) -> Num {
        Num::Str(format_rational(r))
    }
}

fn to_point(v: &[Num]) -> Result<Point> {
    v.iter().map(Num::to_rational).collect::<Result<Vec<_>>>().map(Point)
}

fn from_point(p: &Point) -> Vec<Num> {
    p.iter().map(Num::from_rational).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSystemDoc {
    #[serde(default)]
    pub types: Vec<NamedFactor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive_roots: Option<Vec<Vec<Num>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InequalityDoc {
    pub constant: Num,
    pub normal: Vec<Num>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<Vec<InequalityDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<Num>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub rank: usize,
    #[serde(default)]
    pub root_system: RootSystemDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice_basis: Option<Vec<Vec<Num>>>,
    pub polytope: PolytopeDoc,
    #[serde(default)]
    pub fano: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Divisor coefficients of `K⁻¹` per input facet; defaults to the anticanonical ones.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<Vec<Num>>,
}

/// A validated document ready for computation.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub data: CompactificationData,
    /// One label per facet of the normalized polytope.
    pub labels: Vec<String>,
}

impl Loaded {
    pub fn label(&self, facet: usize) -> String {
        self.labels.get(facet).cloned().unwrap_or_else(|| format!("l{}", facet + 1))
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

pub fn parse_document(text: &str) -> Result<InputDocument> {
    serde_json::from_str(text).map_err(|e| schema(e.to_string()))
}

/// Reads and validates a document.
pub fn parse_input(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)?;
    let fallback = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let mut doc = parse_document(&text)?;
    if doc.name.is_none() {
        doc.name = Some(fallback);
    }
    doc.into_loaded()
}

impl InputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes") + "\n"
    }

    pub fn into_loaded(self) -> Result<Loaded> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(schema(format!("unsupported schema_version {}", self.schema_version)));
        }
        let r = self.rank;
        if r == 0 {
            return Err(schema("rank must be positive"));
        }
        if let Some(basis) = &self.lattice_basis {
            check_lattice_basis(r, basis)?;
        }

        let spec = match (&self.root_system.positive_roots, self.root_system.types.is_empty()) {
            (Some(_), false) => return Err(schema("give either root_system.types or root_system.positive_roots")),
            (Some(roots), true) => RootSpec::Explicit(roots.iter().map(|v| to_point(v)).collect::<Result<_>>()?),
            (None, _) => RootSpec::Named(self.root_system.types.clone()),
        };
        let rd = build_root_data(r, &spec).map_err(|e| match e {
            Error::DimensionMismatch { .. } => schema(e.to_string()),
            other => other,
        })?;

        // polytope, plus for each final facet the index of the input row it came from
        let (polytope, source, n_input) = match (&self.polytope.inequalities, &self.polytope.vertices) {
            (Some(rows), None) => {
                let hs = rows
                    .iter()
                    .map(|row| {
                        let normal = to_point(&row.normal)?;
                        if normal.dim() != r {
                            return Err(schema(format!("normal {normal} does not have {r} coordinates")));
                        }
                        Ok(Halfspace::new(row.constant.to_rational()?, normal))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let p = HPolytope::new(r, hs.clone()).map_err(|e| schema(e.to_string()))?;
                let source = p
                    .facets()
                    .iter()
                    .map(|f| {
                        hs.iter()
                            .position(|h| !h.normal.is_zero() && h.normalized().normal == f.normal)
                            .expect("every facet comes from an input row")
                    })
                    .collect::<Vec<_>>();
                (p, source, hs.len())
            }
            (None, Some(vs)) => {
                let pts = vs.iter().map(|v| to_point(v)).collect::<Result<Vec<_>>>()?;
                if let Some(bad) = pts.iter().find(|p| p.dim() != r) {
                    return Err(schema(format!("vertex {bad} does not have {r} coordinates")));
                }
                let p = VPolytope::from_points(r, &pts)?.to_hpolytope().map_err(|e| schema(e.to_string()))?;
                let n = p.facets().len();
                (p, (0..n).collect(), n)
            }
            _ => return Err(schema("polytope needs exactly one of inequalities or vertices")),
        };
        if polytope.is_empty() || !polytope.is_solid() {
            return Err(schema("polytope must be nonempty and full-dimensional"));
        }

        let labels = match &self.labels {
            Some(l) if l.len() != n_input => {
                return Err(schema(format!("{} labels given for {} facets", l.len(), n_input)));
            }
            Some(l) => source.iter().map(|&i| l[i].clone()).collect(),
            None => (0..polytope.facets().len()).map(|a| format!("l{}", a + 1)).collect(),
        };
        let bundle = match &self.bundle {
            Some(b) if b.len() != n_input => {
                return Err(schema(format!("{} bundle coefficients given for {} facets", b.len(), n_input)));
            }
            Some(b) => Some(DivisorData::new(source.iter().map(|&i| b[i].to_rational()).collect::<Result<_>>()?)),
            None => None,
        };
        let data = CompactificationData::new(rd, polytope, bundle, self.fano)?;
        Ok(Loaded { name: self.name.unwrap_or_else(|| "input".into()), data, labels })
    }
}

/// The lattice must be the standard one: only unimodular integer bases are accepted.
fn check_lattice_basis(r: usize, basis: &[Vec<Num>]) -> Result<()> {
    let rows = basis.iter().map(|v| to_point(v)).collect::<Result<Vec<_>>>()?;
    if rows.len() != r || rows.iter().any(|p| p.dim() != r) {
        return Err(schema(format!("lattice_basis must be {r} x {r}")));
    }
    if !rows.iter().all(Point::is_integral) {
        return Err(schema("lattice_basis must be integral"));
    }
    let d = determinant(&rows);
    if d != Rational::from_integer(1.into()) && d != Rational::from_integer((-1).into()) {
        return Err(schema("lattice_basis must be unimodular; rescale the polytope to standard coordinates"));
    }
    Ok(())
}

const BUNDLED: [(&str, &str); 5] = [
    ("cp1xcp1", include_str!("../../data/cp1xcp1.json")),
    ("gl2", include_str!("../../data/gl2.json")),
    ("cp2-blowup2", include_str!("../../data/cp2-blowup2.json")),
    ("cp2", include_str!("../../data/cp2.json")),
    ("cp3", include_str!("../../data/cp3.json")),
];

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

pub fn bundled_document(name: &str) -> Result<InputDocument> {
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| schema(format!("no bundled example named {name:?}; try one of {:?}", bundled_names())))?;
    parse_document(text)
}

pub fn bundled(name: &str) -> Result<Loaded> {
    bundled_document(name)?.into_loaded()
}

/// `CPⁿ`: `{1 + y_i >= 0, 1 − Σ y_i >= 0}`.
pub fn cpn_document(n: usize) -> InputDocument {
    let mut rows: Vec<InequalityDoc> = (0..n)
        .map(|i| InequalityDoc { constant: Num::Str("1".into()), normal: from_point(&Point::unit(n, i)) })
        .collect();
    rows.push(InequalityDoc {
        constant: Num::Str("1".into()),
        normal: from_point(&Point(vec![Rational::from_integer((-1).into()); n])),
    });
    InputDocument {
        schema_version: SCHEMA_VERSION,
        name: Some(format!("cp{n}")),
        description: Some(format!("CP{n}, toric Fano simplex")),
        rank: n,
        root_system: RootSystemDoc::default(),
        lattice_basis: None,
        polytope: PolytopeDoc { inequalities: Some(rows), vertices: None },
        fano: true,
        labels: None,
        bundle: None,
    }
}
