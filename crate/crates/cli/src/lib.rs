//! Job runner behind the `ordeform` binary.
//!
//! A job is a JSON object `{"command", "algebra", "payload"}`. Every
//! successful run yields a certificate `{"operation", "input_hash",
//! "result", "witness"}` that `verify-certificate` can re-check from the
//! certificate alone.

pub mod job;
pub mod json;
pub mod selftest;
pub mod verify;

use serde_json::{json, Value};

pub use job::{run_job, Command, Job, Options};

/// How a job failed; decides the exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    /// Malformed JSON or payload. Exit code 1.
    Parse(String),
    /// The input was understood but a precondition or check failed. Exit code 2.
    Precondition { code: String, message: String, offending: Value },
}

impl Failure {
    pub fn parse(msg: impl Into<String>) -> Self {
        Failure::Parse(msg.into())
    }

    pub fn mismatch(path: &str, msg: impl Into<String>) -> Self {
        Failure::Precondition { code: "CertificateMismatch".into(), message: msg.into(), offending: json!(path) }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Precondition { .. } => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Failure::Parse(msg) => json!({"error": {"code": "Parse", "message": msg, "offending": null}}),
            Failure::Precondition { code, message, offending } => {
                json!({"error": {"code": code, "message": message, "offending": offending}})
            }
        }
    }
}

impl From<ordeform_core::Error> for Failure {
    fn from(e: ordeform_core::Error) -> Self {
        use ordeform_core::Error as E;
        let offending = match &e {
            E::Parse { pos, msg } => return Failure::Parse(format!("at byte {pos}: {msg}")),
            E::PatternViolation { row, col } => json!({"row": row, "col": col}),
            E::NotCirculant { first, second } => json!({"first": [first.0, first.1], "second": [second.0, second.1]}),
            E::PrecisionExhausted { budget, required } => json!({"budget": budget, "required": required}),
            E::DimensionBound { dim, bound } => json!({"dim": dim, "bound": bound}),
            E::UnsupportedKind { expected, found } => json!({"expected": expected, "found": found}),
            E::NonIsolatedQuotient(d) => json!({"eigenspace_dim": d}),
            _ => Value::Null,
        };
        Failure::Precondition { code: e.code().into(), message: e.to_string(), offending }
    }
}

/// Parses a job document and runs it. `command` overrides (or supplies) the
/// document's `"command"`; for `verify-certificate` the document may be the
/// certificate itself.
pub fn run(input: &str, command: Option<Command>, opts: &Options) -> Result<Value, Failure> {
    let doc: Value = if input.trim().is_empty() && command == Some(Command::Selftest) {
        json!({})
    } else {
        serde_json::from_str(input).map_err(|e| Failure::parse(format!("invalid JSON: {e}")))?
    };
    let job = Job::from_document(doc, command, opts)?;
    let cert = run_job(&job, opts)?;
    if opts.verify && job.command != Command::VerifyCertificate {
        verify::verify(&cert, opts)?;
    }
    Ok(cert)
}
