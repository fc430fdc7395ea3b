//! Dispatch of a parsed job to the core operations, producing one JSON
//! report, a one-paragraph summary and an exit code.

use matalg_core::algebra::{is_nilpotent_algebra, AlgebraBasis};
use matalg_core::linalg::is_nilpotent;
use matalg_core::module::{commutant, hyperinvariant_check, is_irreducible, triangularize, Triangularization};
use matalg_core::theorems::{
    burnside_certify, burnside_field_audit, counterexample_algebra, semigroup_ideal_audit, wedderburn_matrix_verify,
    wedderburn_verify, Status, WedderburnFailure,
};
use matalg_core::{Error, Matrix};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::job::{Command, Job};
use crate::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
/// An internal consistency check failed; never expected.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub exit: i32,
}

impl Outcome {
    /// The report as it is written to standard output.
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("reports serialize")
    }
}

struct Body {
    fields: Map<String, Value>,
    status: String,
    summary: String,
}

impl Body {
    fn new(status: impl Into<String>, summary: impl Into<String>) -> Self {
        Body { fields: Map::new(), status: status.into(), summary: summary.into() }
    }

    fn with(mut self, key: &str, v: Value) -> Self {
        self.fields.insert(key.into(), v);
        self
    }
}

pub fn job_hash(job: &Job) -> String {
    let canon = serde_json::to_string(&json::canonical_job(job)).expect("jobs serialize");
    format!("{:x}", Sha256::digest(canon.as_bytes()))
}

pub fn run(job: &Job) -> Outcome {
    let mut report = Map::new();
    report.insert("tool".into(), json!("matalg"));
    report.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    report.insert("command".into(), json!(job.command.name()));
    report.insert("jobHash".into(), json!(job_hash(job)));
    report.insert("seed".into(), json!(job.seed));
    report.insert("field".into(), json::field(&job.domain));
    report.insert("n".into(), json!(job.n));
    let (body, exit) = match dispatch(job) {
        Ok(body) => {
            let exit = if body.status == "inconclusive" { EXIT_INCONCLUSIVE } else { EXIT_OK };
            (body, exit)
        }
        Err(e) => error_body(&e),
    };
    report.insert("status".into(), json!(body.status));
    report.extend(body.fields);
    let summary = format!("{} [{}]: {} (seed {})", job.command.name(), job.domain.descriptor(), body.summary, job.seed);
    Outcome { report: Value::Object(report), summary, exit }
}

fn error_body(e: &Error) -> (Body, i32) {
    let msg = e.to_string();
    if e.is_inconclusive() {
        let mut b = Body::new("inconclusive", format!("inconclusive: {msg}")).with("reason", json!(msg));
        if let Error::RankOneNotFound { min_rank } = e {
            b = b.with("minRankSeen", json!(min_rank));
        }
        return (b, EXIT_INCONCLUSIVE);
    }
    match e {
        Error::HypothesisViolation(_) | Error::NonIrreducibleSemigroup => {
            (Body::new("inapplicable", format!("inapplicable: {msg}")).with("reason", json!(msg)), EXIT_OK)
        }
        Error::TheoremViolation(_) => {
            (Body::new("internal-error", format!("internal error: {msg}")).with("error", json!(msg)), EXIT_INTERNAL)
        }
        _ => (Body::new("error", format!("error: {msg}")).with("error", json!(msg)), EXIT_INPUT),
    }
}

/// A report for input that never became a job.
pub fn input_error(message: &str) -> Outcome {
    let report = json!({
        "tool": "matalg",
        "version": env!("CARGO_PKG_VERSION"),
        "status": "error",
        "error": message,
    });
    Outcome { report, summary: format!("error: {message}"), exit: EXIT_INPUT }
}

fn dispatch(job: &Job) -> Result<Body, Error> {
    match job.command {
        Command::Closure => closure(job),
        Command::Irreducible => irreducible(job),
        Command::Triangularize => tri(job),
        Command::Commutant => comm(job),
        Command::Nilpotency => nil(job),
        Command::Burnside => burnside(job),
        Command::FieldAudit => field_audit(job),
        Command::Counterexample => counterexample(job),
        Command::Wedderburn => wedderburn(job),
        Command::IdealAudit => ideal_audit(job),
        Command::Hyperinvariant => hyper(job),
    }
}

fn nilpotency_value(a: &AlgebraBasis) -> Result<Value, Error> {
    let nil = is_nilpotent_algebra(a)?;
    Ok(json!({"verdict": nil.nilpotent, "index": nil.index, "powerChain": nil.chain}))
}

fn closure(job: &Job) -> Result<Body, Error> {
    let a = AlgebraBasis::close(&job.domain, job.n, &job.generators, job.unital)?;
    let summary = format!("closure of dimension {} (of {})", a.dim(), a.full_dim());
    Ok(Body::new("completed", summary)
        .with("dimension", json!(a.dim()))
        .with("unital", json!(job.unital))
        .with("basis", json::matrices(a.basis()))
        .with("nilpotent", nilpotency_value(&a)?))
}

fn witness_summary(w: &matalg_core::Subspace) -> String {
    format!("invariant subspace of dim {} found", w.dim())
}

fn irreducible(job: &Job) -> Result<Body, Error> {
    let v = is_irreducible(&job.domain, job.n, &job.generators, job.seed)?;
    let body = match &v {
        matalg_core::module::IrreducibilityVerdict::Irreducible(c) => {
            Body::new("irreducible", format!("irreducible; generated algebra of dimension {}", c.algebra_dim))
        }
        matalg_core::module::IrreducibilityVerdict::Reducible(w) => Body::new("reducible", witness_summary(w)),
    };
    let mut body = body;
    for (k, val) in json::irreducibility(&v).as_object().unwrap() {
        if k != "verdict" {
            body.fields.insert(k.clone(), val.clone());
        }
    }
    Ok(body)
}

fn chain_text(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join("<")
}

fn tri(job: &Job) -> Result<Body, Error> {
    match triangularize(&job.domain, job.n, &job.generators, job.seed)? {
        Triangularization::Triangularized(r) => {
            let dims = r.chain.dims();
            let mut eig = Map::new();
            let mut parts = Vec::new();
            for (i, ev) in r.inner_eigenvalues.iter().enumerate() {
                eig.insert(format!("gen{i}"), json::scalars(ev));
                let text: Vec<String> = ev.iter().map(ToString::to_string).collect();
                parts.push(format!("gen{i} [{}]", text.join(", ")));
            }
            let summary = format!("chain {}; inner eigenvalues per generator: {}", chain_text(&dims), parts.join("; "));
            Ok(Body::new("triangularized", summary)
                .with("chainDims", json!(dims))
                .with("P", json::matrix(&r.p))
                .with("triangularForms", json::matrices(&r.triangular_forms))
                .with("innerEigenvalues", Value::Object(eig)))
        }
        Triangularization::Obstructed(o) => {
            let dims = o.chain.dims();
            let summary = format!(
                "chain {}; irreducible quotient of dim {} at step {}",
                chain_text(&dims),
                o.quotient_dim(),
                o.step
            );
            Ok(Body::new("obstructed", summary).with("chainDims", json!(dims)).with(
                "witness",
                json!({
                    "step": o.step,
                    "lower": json::subspace(&o.lower),
                    "upper": json::subspace(&o.upper),
                    "quotientDim": o.quotient_dim(),
                    "quotientAction": json::matrices(&o.quotient_action),
                }),
            ))
        }
    }
}

fn comm(job: &Job) -> Result<Body, Error> {
    let c = commutant(&job.domain, job.n, &job.generators)?;
    let scalar_only = c.dim() == 1;
    let summary = format!("commutant of dimension {}{}", c.dim(), if scalar_only { " (scalars)" } else { "" });
    Ok(Body::new("completed", summary).with("dimension", json!(c.dim())).with("basis", json::matrices(c.basis())))
}

fn nil(job: &Job) -> Result<Body, Error> {
    let a = AlgebraBasis::close(&job.domain, job.n, &job.generators, job.unital)?;
    let nil = is_nilpotent_algebra(&a)?;
    let members: Vec<Value> = job
        .generators
        .iter()
        .map(|g| {
            let m = is_nilpotent(g);
            json!({"nilpotent": m.nilpotent, "index": m.index})
        })
        .collect();
    let (status, summary) = match nil.index {
        Some(k) => ("nilpotent", format!("nilpotent algebra of dimension {}, index {k}", a.dim())),
        None => ("not-nilpotent", format!("algebra of dimension {} is not nilpotent", a.dim())),
    };
    Ok(Body::new(status, summary)
        .with("dimension", json!(a.dim()))
        .with("index", json!(nil.index))
        .with("powerChain", json!(nil.chain))
        .with("generators", Value::Array(members)))
}

fn status_str(s: Status) -> &'static str {
    s.as_str()
}

fn burnside(job: &Job) -> Result<Body, Error> {
    let r = burnside_certify(&job.domain, job.n, &job.generators, job.unital, job.seed)?;
    let hypotheses: Vec<Value> = r
        .hypotheses
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let ev: Vec<Value> =
                h.eigenvalues.iter().map(|(s, m)| json!({"value": json::scalar(s), "multiplicity": m})).collect();
            json!({"basisElement": i, "triangularizable": h.triangularizable, "minPoly": json::poly(&h.min_poly), "eigenvalues": ev})
        })
        .collect();
    let summary = match r.status {
        Status::Certified => format!("certified: closure dimension {} = {}; matrix units verified", r.closure_dim, r.target_dim),
        _ if !r.hypotheses_hold => {
            let bad = r.hypotheses.iter().position(|h| !h.triangularizable).unwrap_or(0);
            format!("inapplicable: basis element {bad} is not triangularizable over the field")
        }
        _ => match r.irreducibility.witness() {
            Some(w) => format!("inapplicable: {}", witness_summary(w)),
            None => "inapplicable".into(),
        },
    };
    let mut body = Body::new(status_str(r.status), summary)
        .with("closureDim", json!(r.closure_dim))
        .with("targetDim", json!(r.target_dim))
        .with("hypothesesHold", json!(r.hypotheses_hold))
        .with("hypotheses", Value::Array(hypotheses))
        .with("irreducibility", json::irreducibility(&r.irreducibility));
    if let Some(ro) = &r.rank_one {
        body = body.with("rankOne", json!({"element": json::matrix(&ro.element), "ranksSeen": ro.ranks_seen}));
    }
    if let Some(mu) = &r.units {
        body = body.with(
            "matrixUnits",
            json!({
                "P": json::matrix(&mu.p),
                "units": json::matrices(&mu.units),
                "idempotent": json::matrix(&mu.idempotent.e),
                "idempotentScalar": json::scalar(&mu.idempotent.c),
                "normalization": json::matrix(&mu.normalization),
                "conjugatedBasis": json::matrices(&mu.conjugated_basis),
            }),
        );
    }
    Ok(body)
}

fn counterexample_value(cx: &matalg_core::theorems::Counterexample) -> Value {
    json!({
        "k": cx.k,
        "poly": json::poly(&cx.poly),
        "blockSum": json::matrix(&cx.block_sum),
        "dimension": cx.dim(),
        "expectedDim": cx.expected_dim,
        "basis": json::matrices(cx.algebra.basis()),
        "irreducibility": json::irreducibility(&cx.irreducibility),
    })
}

const ROMAN: [&str; 6] = ["i", "ii", "iii", "iv", "v", "vi"];

fn field_audit(job: &Job) -> Result<Body, Error> {
    let a = burnside_field_audit(&job.domain, job.n, job.seed)?;
    let mut conds = Map::new();
    for (i, c) in a.conditions.iter().enumerate() {
        conds.insert(ROMAN[i].into(), json!(c));
    }
    let closedness: Vec<Value> = a
        .k_closedness
        .iter()
        .map(|c| json!({"k": c.k, "closed": c.closed, "witness": c.witness.as_ref().map(json::poly)}))
        .collect();
    let verdict = if a.conditions[0] { "all hold" } else { "all fail" };
    let witness_k = a.counterexample.as_ref().map(|c| c.k);
    let summary = match witness_k {
        Some(k) => format!("field audit conditions (i)-(v): {verdict}; witness k={k}"),
        None => format!("field audit conditions (i)-(v): {verdict}"),
    };
    let mut body = Body::new("completed", summary)
        .with("conditions", Value::Object(conds))
        .with("kClosedness", Value::Array(closedness))
        .with("witnessK", json!(witness_k));
    if let Some(cx) = &a.counterexample {
        body = body.with("counterexample", counterexample_value(cx));
    }
    if let Some(abs) = &a.absolute {
        body = body.with(
            "absoluteIrreducibility",
            json!({"irreducible": abs.irreducible, "absolutelyIrreducible": abs.absolutely_irreducible, "closureDim": abs.closure_dim, "commutantDim": abs.commutant_dim}),
        );
    }
    if let Some(h) = &a.hyperinvariance {
        body = body.with("hyperinvariance", hyper_value(h));
    }
    Ok(body.with("commutantDim", json!(a.commutant_dim)))
}

fn counterexample(job: &Job) -> Result<Body, Error> {
    let k = match job.k {
        Some(k) => k,
        None => (2..=job.n)
            .find(|k| job.n.is_multiple_of(*k))
            .ok_or_else(|| Error::InvalidInput("n = 1 has no divisor k > 1".into()))?,
    };
    let cx = counterexample_algebra(&job.domain, job.n, k)?;
    let summary = format!(
        "irreducible proper algebra of dimension {} < {} from {}",
        cx.dim(),
        job.n * job.n,
        cx.poly
    );
    let mut body = Body::new("completed", summary);
    for (key, v) in counterexample_value(&cx).as_object().unwrap() {
        body.fields.insert(key.clone(), v.clone());
    }
    Ok(body)
}

fn wedderburn(job: &Job) -> Result<Body, Error> {
    if job.closure {
        let a = AlgebraBasis::close(&job.domain, job.n, &job.generators, job.unital)?;
        let r = wedderburn_matrix_verify(&a, job.seed)?;
        let summary = match (&r.nilpotency, &r.reason) {
            (Some(nil), _) => format!("algebra of dimension {} is nilpotent; power chain {:?}", r.dim, nil.chain),
            (None, Some(reason)) => format!("{}: {reason}", r.status.as_str()),
            (None, None) => r.status.as_str().into(),
        };
        return Ok(Body::new(status_str(r.status), summary)
            .with("dimension", json!(r.dim))
            .with("nilpotentSpanDim", json!(r.nilpotent_dim))
            .with("index", json!(r.nilpotency.as_ref().and_then(|x| x.index)))
            .with("powerChain", json!(r.nilpotency.as_ref().map(|x| x.chain.clone())))
            .with("reason", json!(r.reason)));
    }
    let r = wedderburn_verify(&job.domain, job.n, &job.generators)?;
    let (failure, summary) = match &r.failure {
        None => {
            let nil = r.nilpotency.as_ref().unwrap();
            (Value::Null, format!("span of dimension {} is a nilpotent algebra; power chain {:?}", r.dim, nil.chain))
        }
        Some(WedderburnFailure::NonNilpotentMember { index }) => (
            json!({"kind": "non-nilpotent-member", "index": index}),
            format!("generator {index} is not nilpotent"),
        ),
        Some(WedderburnFailure::NotAnAlgebra { left, right, product }) => (
            json!({"kind": "not-an-algebra", "left": left, "right": right, "product": json::matrix(product)}),
            format!("product of generators {left} and {right} leaves the span"),
        ),
    };
    Ok(Body::new(status_str(r.status), summary)
        .with("dimension", json!(r.dim))
        .with("index", json!(r.nilpotency.as_ref().and_then(|x| x.index)))
        .with("powerChain", json!(r.nilpotency.as_ref().map(|x| x.chain.clone())))
        .with("failure", failure))
}

fn ideal_audit(job: &Job) -> Result<Body, Error> {
    let j_gens: &[Matrix] = job.ideal.as_deref().unwrap_or(&job.generators);
    let a = semigroup_ideal_audit(&job.domain, job.n, &job.generators, j_gens, job.trials, job.cap, job.seed)?;
    let mut failures = Map::new();
    for (i, f) in a.failures.iter().enumerate() {
        failures.insert(ROMAN[i].into(), json!(f));
    }
    let zero: Vec<Value> = a.zero_checks.iter().map(|c| json!({"condition": c.condition.label(), "holds": c.holds})).collect();
    let first = a.first_sample.as_ref().map(|(m, checks)| {
        let cs: Vec<Value> = checks
            .iter()
            .map(|c| json!({"condition": c.condition.label(), "holds": c.holds, "witness": c.witness.as_ref().map(json::matrix)}))
            .collect();
        json!({"element": json::matrix(m), "checks": cs})
    });
    let summary = format!(
        "semigroup of {} elements, ideal of {}; A = 0 satisfies all six conditions, each of {} nonzero samples violates all six",
        a.semigroup_size, a.ideal_size, a.trials
    );
    Ok(Body::new(status_str(a.status), summary)
        .with("semigroupSize", json!(a.semigroup_size))
        .with("idealSize", json!(a.ideal_size))
        .with("algebraDim", json!(a.algebra_dim))
        .with("trials", json!(a.trials))
        .with("zeroChecks", Value::Array(zero))
        .with("failures", Value::Object(failures))
        .with("firstSample", json!(first)))
}

fn hyper_value(h: &matalg_core::module::Hyperinvariance) -> Value {
    json!({
        "hasNontrivial": h.has_nontrivial,
        "minPoly": json::poly(&h.min_poly),
        "minPolyIrreducible": h.min_poly_irreducible,
        "commutantDim": h.commutant_dim,
        "witness": h.witness.as_ref().map(json::subspace),
    })
}

fn hyper(job: &Job) -> Result<Body, Error> {
    let [a] = job.generators.as_slice() else {
        return Err(Error::InvalidInput("hyperinvariant needs exactly one matrix".into()));
    };
    let h = hyperinvariant_check(a, job.seed)?;
    let summary = match &h.witness {
        Some(w) => format!("{}; minimal polynomial {} is reducible", witness_summary(w).replace("invariant", "hyperinvariant"), h.min_poly),
        None => format!("no nontrivial hyperinvariant subspace; minimal polynomial {} is irreducible", h.min_poly),
    };
    let status = if h.has_nontrivial { "reducible" } else { "irreducible" };
    let mut body = Body::new(status, summary);
    for (k, v) in hyper_value(&h).as_object().unwrap() {
        body.fields.insert(k.clone(), v.clone());
    }
    Ok(body)
}
