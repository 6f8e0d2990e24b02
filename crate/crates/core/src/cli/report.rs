use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::invariants::{AlphaValue, Face, Witness};
use crate::kernel::{format_rational, Point, Rational};

use super::document::Loaded;

/// The outcome of one command. Key order is sorted, so identical input gives
/// byte-identical output apart from `timing_ms`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub summary: String,
    pub results: Map<String, Value>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.summary);
        for (k, v) in &self.results {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("  {k}: {shown}\n"));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("  timing_ms: {t}\n"));
        }
        out
    }
}

pub(crate) fn q(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub(crate) fn pt(p: &Point) -> Value {
    Value::Array(p.iter().map(q).collect())
}

pub(crate) fn witness(w: &Witness, loaded: &Loaded) -> Value {
    match w {
        Witness::Ray(x) => json!({"kind": "ray", "ray": pt(x)}),
        Witness::FacetVertex { facet, vertex } => {
            json!({"kind": "facet_vertex", "facet": loaded.label(*facet), "vertex": pt(vertex)})
        }
        Witness::VertexPair { vertex, center } => {
            json!({"kind": "vertex_pair", "vertex": pt(vertex), "center": pt(center)})
        }
        Witness::Vertex(v) => json!({"kind": "vertex", "vertex": pt(v)}),
        Witness::LpPoint(p) => json!({"kind": "lp_point", "point": pt(p)}),
        Witness::None => Value::Null,
    }
}

pub(crate) fn alpha(a: &AlphaValue, loaded: &Loaded) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("value".into(), q(&a.value));
    m.insert("capped".into(), Value::Bool(a.capped));
    m.insert("witness".into(), witness(&a.witness, loaded));
    m
}

pub(crate) fn face(f: &Face, loaded: &Loaded) -> Value {
    json!({
        "vertices": f.vertices.iter().map(pt).collect::<Vec<_>>(),
        "dimension": f.dimension,
        "facets": f.facets.iter().map(|&a| loaded.label(a)).collect::<Vec<_>>(),
    })
}
