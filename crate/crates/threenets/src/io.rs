//! JSON serialization for nets, fields and reports. The net file format is
//! the interchange format for every CLI command:
//!
//! {"field": {"p": .., "k": .., "modulus": [..]},
//!  "A": [[[..],[..],[..]], ...], "B": [...], "C": [...],
//!  "provenance": {"family": "...", "params": {...}}}
//!
//! A field element is its coefficient list (length k, low degree first); a
//! point is a triple of elements. Keys serialize in sorted order and nothing
//! is timestamped, so output is byte-identical across runs.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::field::{FieldElement, FieldSpec};
use crate::geometry::{ProjLine, ProjPoint};
use crate::nets::{DualThreeNet, Provenance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IoError {
    Parse(String),
    Schema(String),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Parse(m) => write!(f, "parse error: {}", m),
            IoError::Schema(m) => write!(f, "schema error: {}", m),
        }
    }
}

impl std::error::Error for IoError {}

pub fn field_spec_to_json(spec: &FieldSpec) -> Value {
    json!({
        "p": spec.p(),
        "k": spec.k(),
        "modulus": spec.modulus(),
    })
}

pub fn element_to_json(e: &FieldElement) -> Value {
    Value::Array(e.coeffs().iter().map(|&c| json!(c)).collect())
}

pub fn point_to_json(p: &ProjPoint) -> Value {
    Value::Array(p.coords().iter().map(element_to_json).collect())
}

pub fn line_to_json(l: &ProjLine) -> Value {
    json!({ "line": l.coeffs().iter().map(element_to_json).collect::<Vec<_>>() })
}

pub fn coset_triple_to_json(t: &crate::curve_groups::CosetTriple) -> Value {
    let pts = |v: &[ProjPoint]| Value::Array(v.iter().map(point_to_json).collect());
    json!({
        "H": pts(&t.h),
        "a": point_to_json(&t.a),
        "b": point_to_json(&t.b),
        "c": point_to_json(&t.c),
        "a_coset": pts(&t.coset_a),
        "b_coset": pts(&t.coset_b),
        "c_coset": pts(&t.coset_c),
    })
}

pub fn net_to_json(net: &DualThreeNet) -> Value {
    let comp = |pts: &[ProjPoint]| Value::Array(pts.iter().map(point_to_json).collect());
    let mut params = Map::new();
    for (k, v) in &net.provenance().params {
        params.insert(k.clone(), Value::String(v.clone()));
    }
    json!({
        "field": field_spec_to_json(net.spec()),
        "A": comp(net.a()),
        "B": comp(net.b()),
        "C": comp(net.c()),
        "provenance": {
            "family": net.provenance().family,
            "params": Value::Object(params),
        },
    })
}

pub fn net_to_string(net: &DualThreeNet) -> String {
    serde_json::to_string_pretty(&net_to_json(net)).expect("serializable")
}

fn as_u64(v: &Value, what: &str) -> Result<u64, IoError> {
    v.as_u64()
        .ok_or_else(|| IoError::Schema(format!("{} must be a non-negative integer", what)))
}

pub fn field_spec_from_json(v: &Value) -> Result<FieldSpec, IoError> {
    let p = as_u64(
        v.get("p").ok_or_else(|| IoError::Schema("missing field.p".into()))?,
        "field.p",
    )?;
    let k = as_u64(
        v.get("k").ok_or_else(|| IoError::Schema("missing field.k".into()))?,
        "field.k",
    )? as usize;
    let spec = FieldSpec::new(p, k).map_err(|e| IoError::Schema(format!("field: {}", e)))?;
    if let Some(m) = v.get("modulus") {
        let stated: Vec<u64> = m
            .as_array()
            .ok_or_else(|| IoError::Schema("modulus must be an array".into()))?
            .iter()
            .map(|x| as_u64(x, "modulus entry"))
            .collect::<Result<_, _>>()?;
        if stated != spec.modulus() {
            return Err(IoError::Schema(
                "modulus does not match the canonical modulus for (p, k)".into(),
            ));
        }
    }
    Ok(spec)
}

pub fn element_from_json(spec: &FieldSpec, v: &Value) -> Result<FieldElement, IoError> {
    let coeffs: Vec<u64> = v
        .as_array()
        .ok_or_else(|| IoError::Schema("element must be an array".into()))?
        .iter()
        .map(|x| as_u64(x, "coefficient"))
        .collect::<Result<_, _>>()?;
    if coeffs.len() != spec.k() {
        return Err(IoError::Schema(format!(
            "element has {} coefficients, field needs {}",
            coeffs.len(),
            spec.k()
        )));
    }
    if coeffs.iter().any(|&c| c >= spec.p()) {
        return Err(IoError::Schema("coefficient not reduced mod p".into()));
    }
    Ok(spec.element(&coeffs))
}

pub fn point_from_json(spec: &FieldSpec, v: &Value) -> Result<ProjPoint, IoError> {
    let arr = v
        .as_array()
        .ok_or_else(|| IoError::Schema("point must be an array of three elements".into()))?;
    if arr.len() != 3 {
        return Err(IoError::Schema("point must have three coordinates".into()));
    }
    let x = element_from_json(spec, &arr[0])?;
    let y = element_from_json(spec, &arr[1])?;
    let z = element_from_json(spec, &arr[2])?;
    ProjPoint::new(x, y, z).map_err(|e| IoError::Schema(format!("point: {}", e)))
}

pub fn net_from_json(v: &Value) -> Result<DualThreeNet, IoError> {
    let spec = field_spec_from_json(
        v.get("field").ok_or_else(|| IoError::Schema("missing field".into()))?,
    )?;
    let comp = |key: &str| -> Result<Vec<ProjPoint>, IoError> {
        v.get(key)
            .ok_or_else(|| IoError::Schema(format!("missing component {}", key)))?
            .as_array()
            .ok_or_else(|| IoError::Schema(format!("component {} must be an array", key)))?
            .iter()
            .map(|pv| point_from_json(&spec, pv))
            .collect()
    };
    let a = comp("A")?;
    let b = comp("B")?;
    let c = comp("C")?;
    let mut provenance = Provenance::new("unknown");
    if let Some(pv) = v.get("provenance") {
        if let Some(fam) = pv.get("family").and_then(|x| x.as_str()) {
            provenance.family = fam.to_string();
        }
        if let Some(params) = pv.get("params").and_then(|x| x.as_object()) {
            for (k, val) in params {
                let s = match val {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                provenance.params.insert(k.clone(), s);
            }
        }
    }
    DualThreeNet::new(&spec, a, b, c, provenance)
        .map_err(|e| IoError::Schema(format!("net: {}", e)))
}

pub fn net_from_str(s: &str) -> Result<DualThreeNet, IoError> {
    let v: Value = serde_json::from_str(s).map_err(|e| IoError::Parse(e.to_string()))?;
    net_from_json(&v)
}
