//! Canonical JSON encodings. Ground-set elements are 1-based; objects have
//! sorted keys; rationals are strings in lowest terms.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::gammoid::WeightedDigraph;
use crate::matroid::Matroid;
use crate::subset::{k_subsets, Subset};
use crate::transversal::SetSystem;
use crate::trop::{format_q, Trop, TropMatrix, TropPoint};
use crate::valuated::ValuatedMatroid;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field \"{key}\"")))
}

pub fn trop_to_json(t: &Trop) -> Value {
    Value::String(t.to_string())
}

/// Accepts integers, `"p/q"` strings and `"inf"`.
pub fn trop_from_json(v: &Value) -> Result<Trop> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(x) => x
            .as_i64()
            .map(Trop::int)
            .ok_or_else(|| parse_err(format!("{x} is not an integer; use a \"p/q\" string"))),
        other => Err(parse_err(format!("expected a tropical number, got {other}"))),
    }
}

pub fn point_to_json(p: &TropPoint) -> Value {
    Value::Array(p.coords().iter().map(trop_to_json).collect())
}

pub fn point_from_json(v: &Value) -> Result<TropPoint> {
    let coords = v
        .as_array()
        .ok_or_else(|| parse_err("a point is an array"))?
        .iter()
        .map(trop_from_json)
        .collect::<Result<Vec<_>>>()?;
    TropPoint::normalize(coords)
}

pub fn points_to_json(ps: &[TropPoint]) -> Value {
    Value::Array(ps.iter().map(point_to_json).collect())
}

pub fn points_from_json(v: &Value) -> Result<Vec<TropPoint>> {
    v.as_array()
        .ok_or_else(|| parse_err("points are an array of arrays"))?
        .iter()
        .map(point_from_json)
        .collect()
}

pub fn matrix_to_json(a: &TropMatrix) -> Value {
    Value::Array(
        a.entries()
            .iter()
            .map(|r| Value::Array(r.iter().map(trop_to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(v: &Value) -> Result<TropMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| parse_err("a matrix is an array of rows"))?
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| parse_err("a matrix row is an array"))?
                .iter()
                .map(trop_from_json)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    TropMatrix::new(rows)
}

pub fn subset_to_json(s: Subset) -> Value {
    json!(s.to_one_based())
}

pub fn subset_from_json(v: &Value, n: usize) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for x in v.as_array().ok_or_else(|| parse_err("a set is an array of elements"))? {
        let e = x
            .as_u64()
            .filter(|&e| e >= 1 && e as usize <= n)
            .ok_or_else(|| parse_err(format!("{x} is not an element of [{n}]")))?;
        s = s.insert(e as usize - 1);
    }
    Ok(s)
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("\"{key}\" must be a nonnegative integer")))
}

fn ground_size(n: usize) -> Result<usize> {
    if n > 20 {
        return Err(parse_err(format!("ground sets of size {n} are not supported")));
    }
    Ok(n)
}

pub fn matroid_to_json(m: &Matroid) -> Value {
    let mut bases: Vec<Vec<usize>> = m.bases().iter().map(|b| b.to_one_based()).collect();
    bases.sort();
    json!({ "n": m.n(), "rank": m.rank(), "bases": bases })
}

pub fn matroid_from_json(v: &Value) -> Result<Matroid> {
    let n = ground_size(usize_field(v, "n")?)?;
    let bases = field(v, "bases")?
        .as_array()
        .ok_or_else(|| parse_err("\"bases\" is an array of sets"))?
        .iter()
        .map(|b| subset_from_json(b, n))
        .collect::<Result<Vec<_>>>()?;
    let m = Matroid::new(n, bases)?;
    if let Some(r) = v.get("rank") {
        if r.as_u64() != Some(m.rank() as u64) {
            return Err(parse_err(format!("\"rank\" {r} does not match the bases")));
        }
    }
    Ok(m)
}

fn key(b: Subset) -> String {
    b.to_one_based()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn valuation_to_json(v: &ValuatedMatroid) -> Value {
    let entries: Map<String, Value> = v
        .dense()
        .into_iter()
        .map(|(b, t)| (key(b), trop_to_json(&t)))
        .collect();
    json!({ "n": v.n(), "rank": v.rank(), "entries": entries })
}

/// Parse a valuation; the Plücker relations are verified when `check` is set.
pub fn valuation_from_json(v: &Value, check: bool) -> Result<ValuatedMatroid> {
    let n = ground_size(usize_field(v, "n")?)?;
    let d = usize_field(v, "rank")?;
    if d > n {
        return Err(parse_err(format!("rank {d} exceeds {n}")));
    }
    let sparse = v.get("sparse").and_then(Value::as_bool).unwrap_or(false);
    let entries = field(v, "entries")?
        .as_object()
        .ok_or_else(|| parse_err("\"entries\" is an object"))?;
    let mut values = Vec::new();
    let mut seen = 0;
    for b in k_subsets(n, d) {
        match entries.get(&key(b)) {
            Some(x) => {
                values.push((b, trop_from_json(x)?));
                seen += 1;
            }
            None if sparse => {}
            None => return Err(parse_err(format!("missing entry \"{}\"", key(b)))),
        }
    }
    if seen != entries.len() {
        let bad = entries
            .keys()
            .find(|k| !k_subsets(n, d).into_iter().any(|b| key(b) == **k))
            .cloned()
            .unwrap_or_default();
        return Err(parse_err(format!(
            "entry \"{bad}\" is not a sorted {d}-subset of [{n}]"
        )));
    }
    if check {
        ValuatedMatroid::new(n, d, values)
    } else {
        ValuatedMatroid::from_values(n, d, values)
    }
}

pub fn set_system_to_json(s: &SetSystem) -> Value {
    json!({ "sets": s.sets().iter().map(|x| x.to_one_based()).collect::<Vec<_>>() })
}

pub fn set_system_from_json(v: &Value, n: usize) -> Result<SetSystem> {
    let sets = field(v, "sets")?
        .as_array()
        .ok_or_else(|| parse_err("\"sets\" is an array of sets"))?
        .iter()
        .map(|s| subset_from_json(s, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SetSystem::new(n, sets))
}

pub fn digraph_to_json(g: &WeightedDigraph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .map(|(i, j, w)| json!({ "from": i + 1, "to": j + 1, "w": format_q(w) }))
        .collect();
    json!({ "n": g.n(), "sinks": subset_to_json(g.sinks()), "edges": edges })
}

pub fn digraph_from_json(v: &Value) -> Result<WeightedDigraph> {
    let n = ground_size(usize_field(v, "n")?)?;
    let sinks = subset_from_json(field(v, "sinks")?, n)?;
    let mut edges = Vec::new();
    for e in field(v, "edges")?
        .as_array()
        .ok_or_else(|| parse_err("\"edges\" is an array"))?
    {
        let end = |k: &str| -> Result<usize> {
            let x = usize_field(e, k)?;
            if x == 0 || x > n {
                return Err(parse_err(format!("edge endpoint {x} outside [{n}]")));
            }
            Ok(x - 1)
        };
        let w = match field(e, "w")? {
            Value::String(s) => match s.parse::<Trop>()? {
                Trop::Fin(q) => Some(q),
                Trop::Inf => None,
            },
            x => trop_from_json(x)?.finite().cloned(),
        };
        if let Some(w) = w {
            edges.push((end("from")?, end("to")?, w));
        }
    }
    WeightedDigraph::new(n, sinks, edges)
}

/// `{"error": message, "witness": …}` with a structured witness when the
/// error carries one.
pub fn error_to_json(e: &Error) -> Value {
    let witness = match e {
        Error::OutOfDomain { rows, cols } => {
            json!({ "rows": subset_to_json(*rows), "cols": subset_to_json(*cols) })
        }
        Error::NotAFlat(s) | Error::NotCyclicFlat(s) | Error::HasColoops(s) | Error::HasLoops(s) => {
            subset_to_json(*s)
        }
        Error::PointOutsideL { index } => json!({ "point": index + 1 }),
        Error::WrongArity { expected, got } => json!({ "expected": expected, "got": got }),
        Error::CountMismatch {
            flat,
            expected,
            found,
        } => json!({ "flat": subset_to_json(*flat), "expected": expected, "found": found }),
        Error::MultiplicityMismatch { expected, found } => {
            json!({ "expected": expected, "found": found })
        }
        Error::NegativeCycle { cycle } => {
            json!({ "cycle": cycle.iter().map(|i| i + 1).collect::<Vec<_>>() })
        }
        _ => Value::Null,
    };
    json!({ "error": e.to_string(), "witness": witness })
}
