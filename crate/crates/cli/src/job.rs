use clap::ValueEnum;
use ordeform_core::deformations::{deform_smooth_ram, deform_unramified, divisibility_probe, family_fiber, Branch};
use ordeform_core::submodules::{
    chain_compose, chain_decompose, dual_containment, find_codim_one_quotients, morita_drop, RowModule,
};
use ordeform_core::{Algebra, AlgebraKind, AlgebraSpec, CommIdeal, DeformationCertificate, LeftIdeal};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::{json as j, selftest, verify, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Colength,
    CheckTwoSided,
    CheckDualContainment,
    DecomposeChain,
    ComposeChain,
    Deform,
    FamilyFiber,
    ProbeDivisibility,
    FindSimpleQuotients,
    Selftest,
    VerifyCertificate,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Colength => "colength",
            Command::CheckTwoSided => "check-two-sided",
            Command::CheckDualContainment => "check-dual-containment",
            Command::DecomposeChain => "decompose-chain",
            Command::ComposeChain => "compose-chain",
            Command::Deform => "deform",
            Command::FamilyFiber => "family-fiber",
            Command::ProbeDivisibility => "probe-divisibility",
            Command::FindSimpleQuotients => "find-simple-quotients",
            Command::Selftest => "selftest",
            Command::VerifyCertificate => "verify-certificate",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Command::value_variants().iter().copied().find(|c| c.name() == s)
    }

    fn needs_algebra(self) -> bool {
        !matches!(self, Command::Selftest | Command::VerifyCertificate)
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub truncation: Option<usize>,
    pub max_dim: usize,
    pub verify: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, truncation: None, max_dim: 200_000, verify: false }
    }
}

#[derive(Clone, Debug)]
pub struct Job {
    pub command: Command,
    pub algebra: Option<AlgebraSpec>,
    pub payload: Value,
}

impl Job {
    pub fn from_document(doc: Value, command: Option<Command>, opts: &Options) -> Result<Job, Failure> {
        let Value::Object(mut obj) = doc else {
            return Err(Failure::parse("job must be a JSON object"));
        };
        // a bare certificate handed to verify-certificate
        if command == Some(Command::VerifyCertificate) && obj.contains_key("operation") {
            return Ok(Job { command: Command::VerifyCertificate, algebra: None, payload: Value::Object(obj) });
        }
        let named = match obj.remove("command") {
            None => None,
            Some(Value::String(s)) => {
                Some(Command::from_name(&s).ok_or_else(|| Failure::parse(format!("unknown command {s:?}")))?)
            }
            Some(_) => return Err(Failure::parse("command must be a string")),
        };
        let command = match (command, named) {
            (Some(a), Some(b)) if a != b => {
                return Err(Failure::parse(format!("command line says {} but the job says {}", a.name(), b.name())))
            }
            (Some(c), _) | (None, Some(c)) => c,
            (None, None) => return Err(Failure::parse("no command given")),
        };
        let algebra = match obj.remove("algebra") {
            Some(a) if command.needs_algebra() => Some(j::parse_spec(&a, opts.truncation)?),
            None if command.needs_algebra() => return Err(Failure::parse("job needs an \"algebra\"")),
            _ => None,
        };
        let payload = obj.remove("payload").unwrap_or_else(|| Value::Object(Map::new()));
        if !payload.is_object() {
            return Err(Failure::parse("payload must be an object"));
        }
        if let Some(k) = obj.keys().next() {
            return Err(Failure::parse(format!("unexpected job field {k:?}")));
        }
        Ok(Job { command, algebra, payload })
    }

    /// SHA-256 of the canonical job, after command-line overrides.
    pub fn input_hash(&self, opts: &Options) -> String {
        let doc = json!({
            "algebra": self.algebra.as_ref().map(j::spec),
            "command": self.command.name(),
            "payload": self.payload,
            "seed": opts.seed,
        });
        hex::encode(Sha256::digest(j::canonical_string(&doc).as_bytes()))
    }
}

fn field<'a>(payload: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    payload.get(key).ok_or_else(|| Failure::parse(format!("payload.{key} is required")))
}

fn algebra(job: &Job) -> Result<Algebra, Failure> {
    let spec = job.algebra.expect("checked when the job was parsed");
    Ok(Algebra::new(spec)?)
}

/// Runs one job and wraps the outcome as a certificate.
pub fn run_job(job: &Job, opts: &Options) -> Result<Value, Failure> {
    let (result, witness) = compute(job, opts)?;
    Ok(json!({
        "input_hash": job.input_hash(opts),
        "operation": job.command.name(),
        "result": result,
        "witness": witness,
    }))
}

/// The `(result, witness)` pair of a job.
pub fn compute(job: &Job, opts: &Options) -> Result<(Value, Value), Failure> {
    let p = &job.payload;
    let spec_json = job.algebra.as_ref().map(j::spec).unwrap_or(Value::Null);
    let out = match job.command {
        Command::Colength => {
            let alg = algebra(job)?;
            let ideal = j::parse_ideal(&alg, field(p, "ideal")?)?;
            let colength = ideal.colength()?;
            (json!({"algebra": spec_json, "colength": colength, "ideal": j::ideal(&ideal)}), Value::Null)
        }
        Command::CheckTwoSided => {
            let alg = algebra(job)?;
            let ideal = j::parse_ideal(&alg, field(p, "ideal")?)?;
            let w = ideal.two_sided_witness()?;
            let witness = w.as_ref().map(j::element).unwrap_or(Value::Null);
            (json!({"algebra": spec_json, "ideal": j::ideal(&ideal), "two_sided": w.is_none()}), witness)
        }
        Command::CheckDualContainment => {
            let alg = algebra(job)?;
            let ideal = j::parse_ideal(&alg, field(p, "ideal")?)?;
            let d = dual_containment(&ideal)?;
            let witness = d.witness.as_ref().map(j::element).unwrap_or(Value::Null);
            (json!({"algebra": spec_json, "dual_containment": d.holds, "ideal": j::ideal(&ideal)}), witness)
        }
        Command::DecomposeChain => {
            let alg = algebra(job)?;
            let ideal = j::parse_ideal(&alg, field(p, "ideal")?)?;
            let chain = chain_decompose(&ideal)?;
            let colength = ideal.colength()?;
            (json!({"algebra": spec_json, "chain": j::chain(&chain), "colength": colength, "ideal": j::ideal(&ideal)}), Value::Null)
        }
        Command::ComposeChain => {
            let alg = algebra(job)?;
            let chain = j::parse_chain(alg.field(), alg.trunc(), field(p, "chain")?)?;
            let ideal = chain_compose(&chain, &alg)?;
            let colength = ideal.colength()?;
            (json!({"algebra": spec_json, "chain": j::chain(&chain), "colength": colength, "ideal": j::ideal(&ideal)}), Value::Null)
        }
        Command::Deform => {
            let alg = algebra(job)?;
            let cert = deform(&alg, p)?;
            let witness = dual_containment(&cert.after)?.witness.as_ref().map(j::element).unwrap_or(Value::Null);
            (deformation(&spec_json, &cert), witness)
        }
        Command::FamilyFiber => {
            let alg = algebra(job)?;
            let before = j::parse_ideal(&alg, field(p, "before")?)?;
            let after = j::parse_ideal(&alg, field(p, "after")?)?;
            let point = j::parse_point(alg.field(), field(p, "point")?)?;
            let fiber = family_fiber(&before, &after, &point)?;
            let colength = fiber.colength()?;
            (
                json!({
                    "after": j::ideal(&after),
                    "algebra": spec_json,
                    "before": j::ideal(&before),
                    "colength": colength,
                    "fiber": j::ideal(&fiber),
                    "point": j::point(&point),
                }),
                Value::Null,
            )
        }
        Command::ProbeDivisibility => {
            let spec = job.algebra.expect("checked when the job was parsed");
            let l = field(p, "l")?.as_u64().ok_or_else(|| Failure::parse("payload.l must be a nonnegative integer"))? as usize;
            let report = divisibility_probe(&spec, l, opts.max_dim)?;
            (
                json!({
                    "algebra": spec_json,
                    "exists": report.exists,
                    "l": l,
                    "simple_count": report.simple_count,
                }),
                report.witness.as_ref().map(j::ideal).unwrap_or(Value::Null),
            )
        }
        Command::FindSimpleQuotients => {
            let alg = algebra(job)?;
            let found = find_codim_one_quotients(&alg, opts.max_dim)?;
            let quotients: Vec<Value> = found.iter().map(j::ideal).collect();
            (json!({"algebra": spec_json, "count": found.len(), "quotients": quotients}), Value::Null)
        }
        Command::Selftest => {
            let level = match p.get("level").and_then(Value::as_str).unwrap_or("quick") {
                "quick" => selftest::Level::Quick,
                "full" => selftest::Level::Full,
                other => return Err(Failure::parse(format!("unknown selftest level {other:?}"))),
            };
            let report = selftest::run(level, opts.seed);
            if !report["passed"].as_bool().unwrap_or(false) {
                return Err(Failure::Precondition {
                    code: "SelftestFailed".into(),
                    message: "one or more self-test suites failed".into(),
                    offending: report,
                });
            }
            (report, Value::Null)
        }
        Command::VerifyCertificate => {
            let op = verify::verify(p, opts)?;
            (json!({"operation": op, "verified": true}), Value::Null)
        }
    };
    Ok(out)
}

fn deform(alg: &Algebra, p: &Value) -> Result<DeformationCertificate, Failure> {
    if alg.kind() == AlgebraKind::Unramified {
        let module = if let Some(summands) = p.get("summands") {
            let list = summands.as_array().ok_or_else(|| Failure::parse("payload.summands must be an array"))?;
            let ideals = list
                .iter()
                .map(|s| j::parse_comm_ideal(alg.field(), alg.trunc(), s))
                .collect::<Result<Vec<CommIdeal>, _>>()?;
            RowModule::direct_sum(&ideals)?
        } else {
            morita_drop(&j::parse_ideal(alg, field(p, "ideal")?)?)?
        };
        return Ok(deform_unramified(alg, &module)?);
    }
    let ideal: LeftIdeal = if let Some(chain) = p.get("chain") {
        chain_compose(&j::parse_chain(alg.field(), alg.trunc(), chain)?, alg)?
    } else {
        j::parse_ideal(alg, field(p, "ideal")?)?
    };
    Ok(deform_smooth_ram(&ideal)?)
}

fn deformation(spec_json: &Value, cert: &DeformationCertificate) -> Value {
    let branch = match cert.branch {
        Branch::NoOp => json!("no-op"),
        Branch::Unramified => json!("unramified"),
        Branch::AllEqual => json!("all-equal"),
        Branch::Step(m) => json!({"step": m}),
    };
    let samples: Vec<Value> = cert
        .family_samples
        .iter()
        .map(|s| json!({"colength": s.colength, "fiber": j::ideal(&s.fiber), "point": j::point(&s.point)}))
        .collect();
    json!({
        "after": j::ideal(&cert.after),
        "algebra": spec_json,
        "before": j::ideal(&cert.before),
        "branch": branch,
        "colength": cert.colength,
        "dual_containment_after": cert.dual_containment_after,
        "dual_containment_before": cert.dual_containment_before,
        "endpoint_only": cert.endpoint_only(),
        "family_samples": samples,
    })
}
