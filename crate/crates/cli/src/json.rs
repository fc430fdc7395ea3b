//! Exact values to and from JSON. Every scalar is a string; quaternions
//! are `{"a","b","c","d"}` objects of rational strings.

use matalg_core::module::SubspaceChain;
use matalg_core::module::Certificate;
use matalg_core::module::{CertificateMethod, IrreducibilityVerdict};
use matalg_core::scalars::parse_rational;
use matalg_core::{Domain, Matrix, Poly, Quaternion, Scalar, Subspace};
use serde_json::{json, Map, Value};

use crate::job::{Job, JobError};

pub fn parse_scalar(d: &Domain, v: &Value, path: &str) -> Result<Scalar, JobError> {
    let text = |v: &Value, path: &str| -> Result<String, JobError> {
        match v {
            Value::String(s) => Ok(s.clone()),
            Value::Number(x) if x.is_i64() || x.is_u64() => Ok(x.to_string()),
            _ => Err(JobError::at(path, "expected a scalar string")),
        }
    };
    match (d, v) {
        (Domain::Quaternion, Value::Object(o)) => {
            if let Some(k) = o.keys().find(|k| !["a", "b", "c", "d"].contains(&k.as_str())) {
                return Err(JobError::at(format!("{path}.{k}"), "unknown quaternion component"));
            }
            let part = |k: &str| -> Result<_, JobError> {
                let sub = format!("{path}.{k}");
                match o.get(k) {
                    None => Ok(parse_rational("0").unwrap()),
                    Some(x) => parse_rational(&text(x, &sub)?).map_err(|e| JobError::at(sub, e.to_string())),
                }
            };
            Ok(Scalar::Quat(Quaternion::new(part("a")?, part("b")?, part("c")?, part("d")?)))
        }
        _ => d.parse_scalar(&text(v, path)?).map_err(|e| JobError::at(path, e.to_string())),
    }
}

/// `{"rows":r,"cols":c,"entries":[[…],…]}`; `rows`/`cols` may be omitted.
pub fn parse_matrix(d: &Domain, v: &Value, path: &str) -> Result<Matrix, JobError> {
    let obj = v.as_object().ok_or_else(|| JobError::at(path, "expected a matrix object"))?;
    if let Some(k) = obj.keys().find(|k| !["rows", "cols", "entries"].contains(&k.as_str())) {
        return Err(JobError::at(format!("{path}.{k}"), "unknown key"));
    }
    let rows_v = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| JobError::at(format!("{path}.entries"), "expected an array of rows"))?;
    let dim = |k: &str| -> Result<Option<usize>, JobError> {
        obj.get(k)
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| JobError::at(format!("{path}.{k}"), "expected an integer")))
            .transpose()
    };
    let rows = dim("rows")?.unwrap_or(rows_v.len());
    if rows != rows_v.len() {
        return Err(JobError::at(format!("{path}.entries"), format!("{} rows given, {rows} declared", rows_v.len())));
    }
    let cols = match dim("cols")? {
        Some(c) => c,
        None => rows_v.first().and_then(Value::as_array).map_or(0, Vec::len),
    };
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in rows_v.iter().enumerate() {
        let rp = format!("{path}.entries[{i}]");
        let row = row.as_array().ok_or_else(|| JobError::at(&rp, "expected an array"))?;
        if row.len() != cols {
            return Err(JobError::at(&rp, format!("{} entries, expected {cols}", row.len())));
        }
        for (j, x) in row.iter().enumerate() {
            entries.push(parse_scalar(d, x, &format!("{rp}[{j}]"))?);
        }
    }
    Matrix::new(d, rows, cols, entries).map_err(|e| JobError::at(path, e.to_string()))
}

pub fn scalar(s: &Scalar) -> Value {
    match s {
        Scalar::Quat(q) => {
            let [a, b, c, d] = q.coords();
            let r = |x| Value::String(matalg_core::scalars::format_rational(x));
            json!({"a": r(a), "b": r(b), "c": r(c), "d": r(d)})
        }
        other => Value::String(other.to_string()),
    }
}

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    let entries: Vec<Value> = m.to_rows().iter().map(|r| scalars(r)).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn matrices(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(matrix).collect())
}

/// Ascending coefficients plus a readable form.
pub fn poly(p: &Poly) -> Value {
    json!({"coeffs": scalars(p.coeffs()), "text": p.to_string()})
}

pub fn subspace(s: &Subspace) -> Value {
    json!({"dim": s.dim(), "ambient": s.ambient(), "basis": Value::Array(s.basis().iter().map(|v| scalars(v)).collect())})
}

pub fn chain(c: &SubspaceChain) -> Value {
    json!({"dims": c.dims(), "quotientDims": c.quotient_dims()})
}

pub fn field(d: &Domain) -> Value {
    match d {
        Domain::Rational => json!({"field": "Q"}),
        Domain::Quaternion => json!({"field": "H"}),
        Domain::Prime(p) => json!({"field": "GF", "p": p}),
        Domain::Ext { p, modulus } => json!({"field": "GFext", "p": p, "modulus": modulus}),
    }
}

pub fn certificate(c: &Certificate) -> Value {
    let mut out = Map::new();
    out.insert("seed".into(), json!(c.seed));
    out.insert("algebraDim".into(), json!(c.algebra_dim));
    out.insert("realified".into(), json!(c.realified));
    let method = match &c.method {
        CertificateMethod::FullAlgebra => json!({"kind": "full-algebra"}),
        CertificateMethod::OneDimensional => json!({"kind": "one-dimensional"}),
        CertificateMethod::Norton { trial, element, factor, kernel_vector, dual_vector } => json!({
            "kind": "norton",
            "trial": trial,
            "element": matrix(element),
            "factor": poly(factor),
            "kernelVector": scalars(kernel_vector),
            "dualVector": scalars(dual_vector),
        }),
        CertificateMethod::DoubleCentralizer { commutant_dim } => {
            json!({"kind": "double-centralizer", "commutantDim": commutant_dim})
        }
    };
    out.insert("method".into(), method);
    Value::Object(out)
}

pub fn irreducibility(v: &IrreducibilityVerdict) -> Value {
    match v {
        IrreducibilityVerdict::Irreducible(c) => json!({"verdict": "irreducible", "certificate": certificate(c)}),
        IrreducibilityVerdict::Reducible(w) => json!({"verdict": "reducible", "witness": subspace(w)}),
    }
}

/// The normalized job, independent of how its scalars were written.
pub fn canonical_job(job: &Job) -> Value {
    json!({
        "command": job.command.name(),
        "field": field(&job.domain),
        "n": job.n,
        "generators": matrices(&job.generators),
        "ideal": job.ideal.as_ref().map(|m| matrices(m)),
        "unital": job.unital,
        "seed": job.seed,
        "cap": job.cap,
        "trials": job.trials,
        "k": job.k,
        "closure": job.closure,
    })
}
