//! JSON documents read and written by the CLI.
//!
//! ```text
//! lattice: {"ring": <ring>, "ambient_dim": n, "gens": [{"ideal": <ideal>, "vector": ["1", "0"]}, ...]}
//! pair:    {"ring": <ring>, "R": <lattice>, "S": <lattice>}
//! ```
//!
//! A missing `ideal` means the unit ideal. A lattice without `ring` inherits
//! the pair's, which in turn falls back to the one passed by the caller.

use serde_json::{json, Map, Value};

use crate::arith::FieldElem;
use crate::error::{Error, Result};
use crate::ideal::FractionalIdeal;
use crate::lattice::PseudoLattice;
use crate::linalg::Vector;
use crate::ring::RingConfig;

pub fn ring_from_json(v: &Value) -> Result<RingConfig> {
    let ring: RingConfig = serde_json::from_value(v.clone()).map_err(|e| Error::Schema(format!("ring: {e}")))?;
    ring.validated()
}

pub fn ring_to_json(ring: &RingConfig) -> Value {
    serde_json::to_value(ring).expect("ring configs serialize")
}

fn resolve_ring(v: &Value, fallback: Option<&RingConfig>) -> Result<RingConfig> {
    match v.get("ring") {
        Some(r) => ring_from_json(r),
        None => fallback.cloned().ok_or_else(|| Error::Schema("no ring given".into())),
    }
}

fn parse_vector(v: &Value) -> Result<Vector> {
    let items = v.as_array().ok_or_else(|| Error::Schema("vector must be an array".into()))?;
    items
        .iter()
        .map(|x| match x {
            Value::String(s) => s.parse::<FieldElem>().map_err(Error::from),
            Value::Number(n) => n.to_string().parse::<FieldElem>().map_err(Error::from),
            _ => Err(Error::Schema("vector entries must be strings".into())),
        })
        .collect()
}

pub fn lattice_from_json(v: &Value, fallback: Option<&RingConfig>) -> Result<PseudoLattice> {
    if !v.is_object() {
        return Err(Error::Schema("lattice must be an object".into()));
    }
    let ring = resolve_ring(v, fallback)?;
    let gens = v
        .get("gens")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("lattice needs a \"gens\" array".into()))?;
    let mut parsed = Vec::with_capacity(gens.len());
    for g in gens {
        let vector = parse_vector(g.get("vector").ok_or_else(|| Error::Schema("generator needs \"vector\"".into()))?)?;
        let ideal = match g.get("ideal") {
            None => FractionalIdeal::unit(&ring),
            Some(i) => FractionalIdeal::from_json(&ring, i)?,
        };
        parsed.push((ideal, vector));
    }
    let dim = match v.get("ambient_dim") {
        Some(d) => d.as_u64().ok_or_else(|| Error::Schema("ambient_dim must be a non-negative integer".into()))? as usize,
        None => parsed.first().map(|(_, v)| v.len()).ok_or_else(|| Error::Schema("ambient_dim is required".into()))?,
    };
    if parsed.iter().any(|(_, v)| v.len() != dim) {
        return Err(Error::Schema(format!("every vector must have {dim} entries")));
    }
    PseudoLattice::new(&ring, dim, parsed)
}

pub fn lattice_to_json(l: &PseudoLattice) -> Value {
    let gens: Vec<Value> = l
        .gens()
        .iter()
        .map(|g| {
            let vector: Vec<String> = g.vector.iter().map(ToString::to_string).collect();
            json!({"ideal": g.ideal.to_json(), "vector": vector})
        })
        .collect();
    let mut m = Map::new();
    m.insert("ring".into(), ring_to_json(l.ring()));
    m.insert("ambient_dim".into(), json!(l.dim()));
    m.insert("gens".into(), Value::Array(gens));
    Value::Object(m)
}

fn pair_member<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Schema(format!("pair needs \"{key}\"")))
}

pub fn pair_from_json(v: &Value, fallback: Option<&RingConfig>) -> Result<(PseudoLattice, PseudoLattice)> {
    let ring = match v.get("ring") {
        Some(r) => Some(ring_from_json(r)?),
        None => fallback.cloned(),
    };
    let r = lattice_from_json(pair_member(v, "R")?, ring.as_ref())?;
    let s = lattice_from_json(pair_member(v, "S")?, ring.as_ref())?;
    Ok((r, s))
}

pub fn pair_to_json(r: &PseudoLattice, s: &PseudoLattice) -> Value {
    json!({"R": lattice_to_json(r), "S": lattice_to_json(s)})
}
