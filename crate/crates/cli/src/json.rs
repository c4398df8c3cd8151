//! Canonical JSON forms of specs, scalars, ideals and chains.
//!
//! Keys come out sorted (serde_json's default map is ordered), bases are in
//! canonical echelon order, and scalars are strings such as `"3/2"` or
//! `"1 - 2/3*z"`.

use ordeform_core::notation::parse_scalar;
use ordeform_core::orders::{AlgebraElement, AlgebraKind};
use ordeform_core::power_series::SeriesRing;
use ordeform_core::{
    Algebra, AlgebraSpec, CommIdeal, CycField, CycScalar, IdealChain, LeftIdeal, SparseVec, Subspace,
};
use serde_json::{json, Map, Value};

use crate::Failure;

pub fn scalar(c: &CycScalar) -> Value {
    Value::String(c.to_string())
}

pub fn parse_scalar_value(field: &CycField, v: &Value) -> Result<CycScalar, Failure> {
    match v {
        Value::String(s) => Ok(parse_scalar(field, s)?),
        Value::Number(n) => n
            .as_i64()
            .map(|n| field.from_int(n))
            .ok_or_else(|| Failure::parse(format!("scalar {n} is not an integer; write fractions as \"p/q\""))),
        _ => Err(Failure::parse("scalar must be a string or an integer")),
    }
}

pub fn vector(v: &[(usize, CycScalar)]) -> Value {
    Value::Array(v.iter().map(|(c, x)| json!([c, scalar(x)])).collect())
}

pub fn parse_vector(field: &CycField, v: &Value, ambient: usize) -> Result<SparseVec, Failure> {
    let terms = v.as_array().ok_or_else(|| Failure::parse("vector must be an array of [coordinate, scalar] pairs"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| Failure::parse("vector term must be [coordinate, scalar]"))?;
        let c = pair[0].as_u64().ok_or_else(|| Failure::parse("coordinate must be a nonnegative integer"))? as usize;
        if c >= ambient {
            return Err(Failure::parse(format!("coordinate {c} outside ambient dimension {ambient}")));
        }
        out.push((c, parse_scalar_value(field, &pair[1])?));
    }
    Ok(ordeform_core::linalg::collect_terms(out))
}

pub fn spec(s: &AlgebraSpec) -> Value {
    json!({
        "kind": s.kind.name(),
        "e": s.e,
        "e_prime": s.e_prime,
        "f": s.f,
        "truncation": s.n,
    })
}

fn field_u32(obj: &Map<String, Value>, key: &str) -> Result<Option<u32>, Failure> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v
            .as_u64()
            .and_then(|x| u32::try_from(x).ok())
            .map(Some)
            .ok_or_else(|| Failure::parse(format!("algebra.{key} must be a small nonnegative integer"))),
    }
}

/// Reads `{"kind", "e", "f", "truncation"}` (plus `"e_prime"` for mixed
/// orders); `truncation` may be overridden from the command line.
pub fn parse_spec(v: &Value, truncation: Option<usize>) -> Result<AlgebraSpec, Failure> {
    let obj = v.as_object().ok_or_else(|| Failure::parse("algebra must be an object"))?;
    let kind_name = obj.get("kind").and_then(Value::as_str).ok_or_else(|| Failure::parse("algebra.kind is required"))?;
    let kind = AlgebraKind::from_name(kind_name).ok_or_else(|| Failure::parse(format!("unknown algebra kind {kind_name:?}")))?;
    let e = field_u32(obj, "e")?.unwrap_or(1);
    let f = field_u32(obj, "f")?.unwrap_or(1);
    let n = match truncation {
        Some(n) => n,
        None => field_u32(obj, "truncation")?.ok_or_else(|| Failure::parse("algebra.truncation is required"))? as usize,
    };
    let spec = match kind {
        AlgebraKind::Mixed => {
            let ep = field_u32(obj, "e_prime")?.ok_or_else(|| Failure::parse("mixed orders need algebra.e_prime"))?;
            AlgebraSpec::mixed(e, ep, f, n)
        }
        _ => AlgebraSpec::of_kind(kind, e, f, n),
    };
    if let Some(ep) = field_u32(obj, "e_prime")? {
        if ep != spec.e_prime {
            return Err(Failure::parse(format!("algebra.e_prime = {ep} does not match kind {kind_name}")));
        }
    }
    spec.validate()?;
    Ok(spec)
}

pub fn subspace(s: &Subspace) -> Value {
    Value::Array(s.rows().iter().map(|r| vector(r)).collect())
}

/// Rows given in a certificate must already be the canonical basis they span.
pub fn parse_canonical(field: &CycField, v: &Value, ambient: usize, what: &str) -> Result<Subspace, Failure> {
    let rows = v.as_array().ok_or_else(|| Failure::parse(format!("{what} must be an array of vectors")))?;
    let rows = rows.iter().map(|r| parse_vector(field, r, ambient)).collect::<Result<Vec<_>, _>>()?;
    let space = Subspace::from_vectors(field, ambient, rows.iter().cloned());
    if space.rows() != rows.as_slice() {
        return Err(Failure::mismatch(what, "basis is not the canonical echelon basis of its span"));
    }
    Ok(space)
}

pub fn ideal(i: &LeftIdeal) -> Value {
    json!({
        "basis": subspace(i.basis()),
        "colength": i.colength().ok(),
        "dim": i.dim(),
    })
}

pub fn comm_ideal(j: &CommIdeal) -> Value {
    json!({
        "basis": subspace(j.basis()),
        "colength": j.colength().ok(),
    })
}

pub fn element(x: &AlgebraElement) -> Value {
    json!({ "coords": vector(x.coords()), "entries": x.entries() })
}

pub fn chain(c: &IdealChain) -> Value {
    Value::Array(c.entries().iter().map(comm_ideal).collect())
}

fn parse_generator(alg: &Algebra, g: &Value) -> Result<AlgebraElement, Failure> {
    match g {
        Value::String(s) => Ok(alg.parse(s)?),
        Value::Array(rows) => {
            let mut entries = Vec::with_capacity(rows.len());
            for r in rows {
                let cells = r.as_array().ok_or_else(|| Failure::parse("matrix generator rows must be arrays"))?;
                let cells = cells
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => Ok(s.clone()),
                        Value::Number(n) => Ok(n.to_string()),
                        _ => Err(Failure::parse("matrix entries must be strings or integers")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                entries.push(cells);
            }
            Ok(alg.from_entries(&entries)?)
        }
        _ => Err(Failure::parse("generator must be an expression string or a matrix of entries")),
    }
}

/// A left ideal given either by `"generators"` (closed on the left, or on
/// both sides with `"closure": "two-sided"`) or by a canonical `"basis"`.
pub fn parse_ideal(alg: &Algebra, v: &Value) -> Result<LeftIdeal, Failure> {
    let obj = v.as_object().ok_or_else(|| Failure::parse("ideal must be an object"))?;
    if let Some(basis) = obj.get("basis") {
        let space = parse_canonical(alg.field(), basis, alg.dim(), "ideal.basis")?;
        return Ok(LeftIdeal::from_subspace(alg, space)?);
    }
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::parse("ideal needs \"generators\" or \"basis\""))?;
    let gens = gens.iter().map(|g| parse_generator(alg, g)).collect::<Result<Vec<_>, _>>()?;
    match obj.get("closure").and_then(Value::as_str).unwrap_or("left") {
        "left" => Ok(LeftIdeal::generated_by(alg, &gens)?),
        "two-sided" => {
            Ok(LeftIdeal::two_sided_from_vectors(alg, gens.into_iter().map(AlgebraElement::into_coords).collect()))
        }
        other => Err(Failure::parse(format!("unknown closure {other:?}; use \"left\" or \"two-sided\""))),
    }
}

/// An ideal of `R = Q(ζ)[[u, v]]/(deg ≥ n)` from generator strings or a canonical basis.
pub fn parse_comm_ideal(field: &CycField, n: usize, v: &Value) -> Result<CommIdeal, Failure> {
    let ring = SeriesRing::new(n, field.clone());
    let gens = match v {
        Value::Array(gens) => gens,
        Value::Object(obj) => {
            if let Some(basis) = obj.get("basis") {
                let size = ordeform_core::power_series::monomial_count(n);
                let space = parse_canonical(field, basis, size, "chain entry basis")?;
                return Ok(CommIdeal::from_subspace(field, n, space)?);
            }
            obj.get("generators").and_then(Value::as_array).ok_or_else(|| Failure::parse("ideal of R needs \"generators\" or \"basis\""))?
        }
        _ => return Err(Failure::parse("ideal of R must be a list of generators or an object")),
    };
    let gens = gens
        .iter()
        .map(|g| match g {
            Value::String(s) => Ok(ring.parse(s)?),
            Value::Number(k) => Ok(ring.parse(&k.to_string())?),
            _ => Err(Failure::parse("generators of R must be strings")),
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(CommIdeal::from_generators(&gens, n, field)?)
}

pub fn parse_chain(field: &CycField, n: usize, v: &Value) -> Result<IdealChain, Failure> {
    let entries = v.as_array().ok_or_else(|| Failure::parse("chain must be an array of ideals of R"))?;
    let entries = entries.iter().map(|e| parse_comm_ideal(field, n, e)).collect::<Result<Vec<_>, _>>()?;
    Ok(IdealChain::new(entries)?)
}

pub fn parse_point(field: &CycField, v: &Value) -> Result<(CycScalar, CycScalar), Failure> {
    let p = v.as_array().filter(|p| p.len() == 2).ok_or_else(|| Failure::parse("point must be [a, b]"))?;
    Ok((parse_scalar_value(field, &p[0])?, parse_scalar_value(field, &p[1])?))
}

pub fn point(p: &(CycScalar, CycScalar)) -> Value {
    json!([scalar(&p.0), scalar(&p.1)])
}

/// Compact single-line canonical form used for hashing and golden output.
pub fn canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}
