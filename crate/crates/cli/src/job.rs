//! Job files: field descriptor, generators and options, parsed into exact
//! values with path-qualified diagnostics.

use std::fmt;
use std::str::FromStr;

use matalg_core::{Domain, Matrix};
use serde_json::{Map, Value};

use crate::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Command {
    Closure,
    Irreducible,
    Triangularize,
    Commutant,
    Nilpotency,
    Burnside,
    FieldAudit,
    Counterexample,
    Wedderburn,
    IdealAudit,
    Hyperinvariant,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Closure,
        Command::Irreducible,
        Command::Triangularize,
        Command::Commutant,
        Command::Nilpotency,
        Command::Burnside,
        Command::FieldAudit,
        Command::Counterexample,
        Command::Wedderburn,
        Command::IdealAudit,
        Command::Hyperinvariant,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Closure => "closure",
            Command::Irreducible => "irreducible",
            Command::Triangularize => "triangularize",
            Command::Commutant => "commutant",
            Command::Nilpotency => "nilpotency",
            Command::Burnside => "burnside",
            Command::FieldAudit => "field-audit",
            Command::Counterexample => "counterexample",
            Command::Wedderburn => "wedderburn",
            Command::IdealAudit => "ideal-audit",
            Command::Hyperinvariant => "hyperinvariant",
        }
    }

    /// Short subcommand name.
    pub fn subcommand(&self) -> &'static str {
        match self {
            Command::Closure => "close",
            Command::Irreducible => "irr",
            Command::Triangularize => "tri",
            Command::Commutant => "comm",
            Command::Nilpotency => "nil",
            Command::Burnside => "burnside",
            Command::FieldAudit => "audit-field",
            Command::Counterexample => "counterexample",
            Command::Wedderburn => "wedderburn",
            Command::IdealAudit => "audit-ideal",
            Command::Hyperinvariant => "hyper",
        }
    }

    fn needs_generators(&self) -> bool {
        !matches!(self, Command::FieldAudit | Command::Counterexample)
    }
}

impl FromStr for Command {
    type Err = JobError;

    fn from_str(s: &str) -> Result<Self, JobError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s || c.subcommand() == s)
            .ok_or_else(|| JobError::at("command", format!("unknown command {s:?}")))
    }
}

/// A schema or value error, located by a JSON path such as
/// `generators[1].entries[0][2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobError {
    pub path: String,
    pub message: String,
}

impl JobError {
    pub fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        JobError { path: path.into(), message: message.into() }
    }
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            f.write_str(&self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for JobError {}

pub const DEFAULT_CAP: usize = matalg_core::algebra::SEMIGROUP_CAP;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub command: Command,
    pub domain: Domain,
    pub n: usize,
    pub generators: Vec<Matrix>,
    /// Ideal generators for the semigroup audit; the semigroup generators
    /// when absent.
    pub ideal: Option<Vec<Matrix>>,
    pub unital: bool,
    pub seed: u64,
    pub cap: usize,
    pub trials: usize,
    /// Degree for the counterexample construction.
    pub k: Option<usize>,
    /// Run the closed-algebra form of the Wedderburn check.
    pub closure: bool,
}

/// Values supplied on the command line; they override the job file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub field: Option<String>,
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub cap: Option<usize>,
    pub unital: bool,
}

/// Parses a job document. `command` wins over a `"command"` key.
pub fn parse_job(text: &str, command: Option<Command>, overrides: &Overrides) -> Result<Job, JobError> {
    let value: Value = if text.trim().is_empty() {
        Value::Object(Map::new())
    } else {
        serde_json::from_str(text)
            .map_err(|e| JobError::at(format!("line {} column {}", e.line(), e.column()), e.to_string()))?
    };
    let obj = value.as_object().ok_or_else(|| JobError::at("", "a job must be a JSON object"))?;
    const KEYS: [&str; 12] =
        ["command", "field", "n", "generators", "ideal", "unital", "seed", "cap", "trials", "k", "closure", "p"];
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str()) && k.as_str() != "modulus") {
        return Err(JobError::at(k.as_str(), "unknown key"));
    }
    let command = match command {
        Some(c) => c,
        None => match obj.get("command") {
            Some(Value::String(s)) => s.parse()?,
            Some(_) => return Err(JobError::at("command", "expected a string")),
            None => return Err(JobError::at("command", "no command given")),
        },
    };
    let domain = match &overrides.field {
        Some(s) => parse_field_flag(s)?,
        None => match obj.get("field") {
            Some(Value::Object(_)) => parse_field(&obj["field"], "field")?,
            Some(Value::String(s)) if ["Q", "H", "GF", "GFext"].contains(&s.as_str()) => parse_field(&value, "")?,
            Some(Value::String(s)) => parse_field_flag(s).map_err(|e| JobError::at("field", e.message))?,
            Some(_) => return Err(JobError::at("field", "expected a field descriptor")),
            None => return Err(JobError::at("field", "missing field descriptor")),
        },
    };
    let generators = match obj.get("generators") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, m)| json::parse_matrix(&domain, m, &format!("generators[{i}]")))
            .collect::<Result<Vec<_>, _>>()?,
        Some(_) => return Err(JobError::at("generators", "expected an array of matrices")),
        None => Vec::new(),
    };
    let n = match overrides.n {
        Some(n) => n,
        None => match obj.get("n") {
            Some(v) => as_usize(v, "n")?,
            None => generators.first().map(Matrix::rows).ok_or_else(|| JobError::at("n", "missing matrix size"))?,
        },
    };
    if n == 0 {
        return Err(JobError::at("n", "matrix size must be positive"));
    }
    for (i, g) in generators.iter().enumerate() {
        if g.rows() != n || g.cols() != n {
            return Err(JobError::at(
                format!("generators[{i}]"),
                format!("expected {n}x{n}, found {}x{}", g.rows(), g.cols()),
            ));
        }
    }
    if command.needs_generators() && generators.is_empty() {
        return Err(JobError::at("generators", "at least one generator is required"));
    }
    let ideal = match obj.get("ideal") {
        Some(Value::Array(items)) => Some(
            items
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let path = format!("ideal[{i}]");
                    let m = json::parse_matrix(&domain, m, &path)?;
                    if m.rows() != n || m.cols() != n {
                        return Err(JobError::at(path, format!("expected {n}x{n}")));
                    }
                    Ok(m)
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Some(_) => return Err(JobError::at("ideal", "expected an array of matrices")),
        None => None,
    };
    let flag = |key: &str| -> Result<bool, JobError> {
        match obj.get(key) {
            None => Ok(false),
            Some(Value::Bool(b)) => Ok(*b),
            Some(_) => Err(JobError::at(key, "expected a boolean")),
        }
    };
    let opt = |key: &str| obj.get(key).map(|v| as_u64(v, key)).transpose();
    let k = opt("k")?.map(|k| k as usize);
    Ok(Job {
        command,
        domain,
        n,
        generators,
        ideal,
        unital: overrides.unital || flag("unital")?,
        seed: overrides.seed.map_or_else(|| opt("seed").map(|s| s.unwrap_or(0)), Ok)?,
        cap: overrides.cap.map_or_else(|| opt("cap").map(|c| c.map_or(DEFAULT_CAP, |c| c as usize)), Ok)?,
        trials: overrides
            .trials
            .map_or_else(|| opt("trials").map(|t| t.map_or(matalg_core::theorems::DEFAULT_TRIALS, |t| t as usize)), Ok)?,
        k,
        closure: flag("closure")?,
    })
}

fn as_u64(v: &Value, path: &str) -> Result<u64, JobError> {
    match v {
        Value::Number(x) => x.as_u64().ok_or_else(|| JobError::at(path, "expected a non-negative integer")),
        Value::String(s) => s.trim().parse().map_err(|_| JobError::at(path, "expected a non-negative integer")),
        _ => Err(JobError::at(path, "expected a non-negative integer")),
    }
}

fn as_usize(v: &Value, path: &str) -> Result<usize, JobError> {
    as_u64(v, path).map(|x| x as usize)
}

/// `{"field":"Q"}`, `{"field":"H"}`, `{"field":"GF","p":7}` or
/// `{"field":"GFext","p":2,"modulus":[1,1,1]}`.
pub fn parse_field(v: &Value, path: &str) -> Result<Domain, JobError> {
    let sub = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    let kind = v.get("field").and_then(Value::as_str).ok_or_else(|| JobError::at(sub("field"), "missing field kind"))?;
    let prime = || -> Result<u64, JobError> {
        let p = v.get("p").ok_or_else(|| JobError::at(sub("p"), "missing prime"))?;
        as_u64(p, &sub("p"))
    };
    let core = |e: matalg_core::Error, k: &str| JobError::at(sub(k), e.to_string());
    match kind {
        "Q" => Ok(Domain::Rational),
        "H" => Ok(Domain::Quaternion),
        "GF" => Domain::prime(prime()?).map_err(|e| core(e, "p")),
        "GFext" => {
            let p = prime()?;
            let m = v.get("modulus").and_then(Value::as_array).ok_or_else(|| JobError::at(sub("modulus"), "missing modulus"))?;
            let coeffs = m
                .iter()
                .enumerate()
                .map(|(i, c)| as_u64(c, &format!("{}[{i}]", sub("modulus"))))
                .collect::<Result<Vec<_>, _>>()?;
            Domain::ext(p, &coeffs).map_err(|e| core(e, "modulus"))
        }
        other => Err(JobError::at(sub("field"), format!("unknown field kind {other:?}"))),
    }
}

/// `Q`, `H`, `GF(p)`, `GF(p)[c0,c1,...]` or a JSON descriptor.
pub fn parse_field_flag(s: &str) -> Result<Domain, JobError> {
    let s = s.trim();
    let err = |m: String| JobError::at("--field", m);
    if s.starts_with('{') {
        let v: Value = serde_json::from_str(s).map_err(|e| err(e.to_string()))?;
        return parse_field(&v, "--field");
    }
    match s {
        "Q" => return Ok(Domain::Rational),
        "H" => return Ok(Domain::Quaternion),
        _ => {}
    }
    let rest = s.strip_prefix("GF(").ok_or_else(|| err(format!("unrecognized field {s:?}")))?;
    let (p, tail) = rest.split_once(')').ok_or_else(|| err("unclosed GF(".into()))?;
    let p: u64 = p.trim().parse().map_err(|_| err(format!("not an integer: {p:?}")))?;
    if tail.is_empty() {
        return Domain::prime(p).map_err(|e| err(e.to_string()));
    }
    let inner = tail
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| err(format!("expected [modulus] after GF({p})")))?;
    let coeffs = inner
        .split(',')
        .map(|c| c.trim().parse::<u64>().map_err(|_| err(format!("bad modulus coefficient {c:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Domain::ext(p, &coeffs).map_err(|e| err(e.to_string()))
}
