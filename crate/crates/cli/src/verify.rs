//! Re-checking certificates.
//!
//! A certificate carries its algebra and the canonical bases of every ideal
//! it mentions. Verification parses those bases (rejecting anything that is
//! not canonical or not closed under left multiplication), recomputes the
//! operation from them and requires the fresh result and witness to match
//! the recorded ones exactly.

use serde_json::{json, Value};

use crate::job::{compute, Command, Job, Options};
use crate::{json as j, Failure};

fn get<'a>(v: &'a Value, path: &str) -> Result<&'a Value, Failure> {
    let mut cur = v;
    for key in path.split('.') {
        cur = cur.get(key).ok_or_else(|| Failure::mismatch(path, format!("certificate is missing {path}")))?;
    }
    Ok(cur)
}

fn basis_of(cert: &Value, path: &str) -> Result<Value, Failure> {
    Ok(json!({"basis": get(cert, &format!("{path}.basis"))?}))
}

/// The job whose output the certificate claims to be.
fn replay(cert: &Value, op: Command) -> Result<Job, Failure> {
    let payload = match op {
        Command::Colength | Command::CheckTwoSided | Command::CheckDualContainment | Command::DecomposeChain => {
            json!({"ideal": basis_of(cert, "result.ideal")?})
        }
        Command::ComposeChain => {
            let chain = get(cert, "result.chain")?.as_array().ok_or_else(|| Failure::mismatch("result.chain", "chain must be an array"))?;
            let entries = chain
                .iter()
                .map(|e| e.get("basis").map(|b| json!({"basis": b})).ok_or_else(|| Failure::mismatch("result.chain", "chain entry without basis")))
                .collect::<Result<Vec<_>, _>>()?;
            json!({"chain": entries})
        }
        Command::Deform => json!({"ideal": basis_of(cert, "result.before")?}),
        Command::FamilyFiber => json!({
            "after": basis_of(cert, "result.after")?,
            "before": basis_of(cert, "result.before")?,
            "point": get(cert, "result.point")?,
        }),
        Command::ProbeDivisibility => json!({"l": get(cert, "result.l")?}),
        Command::FindSimpleQuotients => json!({}),
        Command::Selftest => json!({"level": get(cert, "result.level")?}),
        Command::VerifyCertificate => return Err(Failure::mismatch("operation", "verification results are not themselves re-verified")),
    };
    let algebra = match op {
        Command::Selftest => None,
        _ => Some(j::parse_spec(get(cert, "result.algebra")?, None)?),
    };
    Ok(Job { command: op, algebra, payload })
}

/// First path at which two JSON values differ.
fn first_difference(a: &Value, b: &Value, path: &str) -> Option<String> {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            for k in x.keys().chain(y.keys()) {
                let sub = format!("{path}.{k}");
                match (x.get(k), y.get(k)) {
                    (Some(p), Some(q)) => {
                        if let Some(d) = first_difference(p, q, &sub) {
                            return Some(d);
                        }
                    }
                    _ => return Some(sub),
                }
            }
            None
        }
        (Value::Array(x), Value::Array(y)) => {
            if x.len() != y.len() {
                return Some(path.to_string());
            }
            x.iter().zip(y).enumerate().find_map(|(i, (p, q))| first_difference(p, q, &format!("{path}[{i}]")))
        }
        _ => (a != b).then(|| path.to_string()),
    }
}

/// Malformed content inside a certificate counts as tampering, not as a bad job.
fn as_mismatch(e: Failure) -> Failure {
    match e {
        Failure::Parse(msg) => Failure::mismatch("result", format!("recorded data does not parse: {msg}")),
        other => other,
    }
}

/// Re-checks a certificate; returns its operation name on success.
pub fn verify(cert: &Value, opts: &Options) -> Result<String, Failure> {
    let obj = cert.as_object().ok_or_else(|| Failure::parse("certificate must be a JSON object"))?;
    for key in obj.keys() {
        if !["input_hash", "operation", "result", "witness"].contains(&key.as_str()) {
            return Err(Failure::mismatch(key, format!("unexpected certificate field {key:?}")));
        }
    }
    let name = get(cert, "operation")?.as_str().ok_or_else(|| Failure::mismatch("operation", "operation must be a string"))?;
    let op = Command::from_name(name).ok_or_else(|| Failure::mismatch("operation", format!("unknown operation {name:?}")))?;
    let hash = get(cert, "input_hash")?.as_str().unwrap_or("");
    if hash.len() != 64 || hex::decode(hash).is_err() {
        return Err(Failure::mismatch("input_hash", "input_hash must be 64 hex digits"));
    }
    let job = replay(cert, op).map_err(as_mismatch)?;
    let mut opts = opts.clone();
    if op == Command::Selftest {
        opts.seed = get(cert, "result.seed")?.as_u64().ok_or_else(|| Failure::mismatch("result.seed", "seed must be an integer"))?;
    }
    let (result, witness) = compute(&job, &opts).map_err(|e| match e {
        Failure::Precondition { code, message, .. } if code != "CertificateMismatch" => Failure::Precondition {
            code: "CertificateMismatch".into(),
            message: format!("recorded inputs are rejected: {code}: {message}"),
            offending: json!("result"),
        },
        other => as_mismatch(other),
    })?;
    let fresh = json!({"result": result, "witness": witness});
    let recorded = json!({"result": get(cert, "result")?, "witness": cert.get("witness").unwrap_or(&Value::Null)});
    if let Some(path) = first_difference(&recorded, &fresh, "") {
        let path = path.trim_start_matches('.').to_string();
        return Err(Failure::mismatch(&path, format!("recomputed value differs at {path}")));
    }
    Ok(name.to_string())
}
