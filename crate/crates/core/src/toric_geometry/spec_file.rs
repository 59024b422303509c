//! JSON domain descriptions.
//!
//! ```json
//! {"type": "ellipsoid", "a": ["7/2", 4]}
//! {"type": "polydisk",  "a": [1, 1]}
//! {"type": "ball",      "r": 1, "d": 2}
//! {"type": "polytope",  "vertices": [[0, 0], [2, 0], [0, 1], [1, 1]]}
//! ```
//!
//! Every scalar may be a `"p/q"` string, an integer, or a decimal literal
//! (read exactly, so `3.5` is `7/2`). A ball's `r` is its action parameter
//! a, not a Euclidean radius.

use serde_json::Value;
use thiserror::Error;

use super::{GeometryError, Shape, ToricDomain};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed domain spec: {0}")]
    Malformed(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn malformed(msg: impl Into<String>) -> SpecError {
    SpecError::Malformed(msg.into())
}

/// Reads one rational from a JSON string or number without going through f64.
pub fn rational_from_json(v: &Value) -> Result<Rational, SpecError> {
    let text = match v {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) => n.to_string(),
        other => return Err(malformed(format!("expected a rational, got {other}"))),
    };
    let lower = text.to_ascii_lowercase();
    if matches!(lower.trim_start_matches('+'), "inf" | "infinity") {
        return Err(GeometryError::UnboundedDomain.into());
    }
    text.parse()
        .map_err(|_| malformed(format!("invalid rational {text:?}")))
}

pub fn rational_list_from_json(v: &Value) -> Result<Vec<Rational>, SpecError> {
    v.as_array()
        .ok_or_else(|| malformed("expected an array of rationals"))?
        .iter()
        .map(rational_from_json)
        .collect()
}

pub fn parse_shape(text: &str) -> Result<Shape, SpecError> {
    let root: Value = serde_json::from_str(text)?;
    let obj = root
        .as_object()
        .ok_or_else(|| malformed("top level must be an object"))?;
    let kind = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| malformed("missing string field \"type\""))?;
    let field = |name: &str| {
        obj.get(name)
            .ok_or_else(|| malformed(format!("{kind} needs field \"{name}\"")))
    };
    match kind {
        "ellipsoid" => Ok(Shape::Ellipsoid {
            a: rational_list_from_json(field("a")?)?,
        }),
        "polydisk" => Ok(Shape::Polydisk {
            a: rational_list_from_json(field("a")?)?,
        }),
        "ball" => {
            let a = match obj.get("r").or_else(|| obj.get("a")) {
                Some(v) => rational_from_json(v)?,
                None => return Err(malformed("ball needs field \"r\"")),
            };
            let dimension = obj
                .get("d")
                .or_else(|| obj.get("dimension"))
                .ok_or_else(|| malformed("ball needs field \"d\""))?
                .as_u64()
                .ok_or_else(|| malformed("\"d\" must be a nonnegative integer"))?;
            Ok(Shape::Ball {
                a,
                dimension: dimension as usize,
            })
        }
        "polytope" => {
            let vertices = field("vertices")?
                .as_array()
                .ok_or_else(|| malformed("\"vertices\" must be an array"))?
                .iter()
                .map(rational_list_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Shape::Polytope { vertices })
        }
        other => Err(malformed(format!("unknown domain type {other:?}"))),
    }
}

pub fn parse_domain(text: &str) -> Result<ToricDomain, SpecError> {
    Ok(ToricDomain::from_shape(parse_shape(text)?)?)
}
