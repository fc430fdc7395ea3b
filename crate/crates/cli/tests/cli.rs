use std::io::Write;
use std::process::{Command as Proc, Stdio};

use matalg::json::parse_matrix;
use matalg::{parse_job, run, Command, Overrides};
use matalg_core::linalg::companion;
use matalg_core::{Domain, Matrix, Poly};
use serde_json::{json, Value};

fn job(v: Value, command: Command) -> matalg::Job {
    parse_job(&v.to_string(), Some(command), &Overrides::default()).unwrap()
}

fn unit_job(p: u64) -> Value {
    json!({
        "field": {"field": "GF", "p": p},
        "generators": [
            {"rows": 2, "cols": 2, "entries": [["0", "1"], ["0", "0"]]},
            {"rows": 2, "cols": 2, "entries": [["0", "0"], ["1", "0"]]}
        ]
    })
}

fn exe(args: &[&str], stdin: &str) -> (String, String, i32) {
    let mut child = Proc::new(env!("CARGO_BIN_EXE_matalg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn minimal_closure_job() {
    let j = parse_job(
        r#"{"command":"closure","field":{"field":"GF","p":7},"n":2,"generators":[{"entries":[["1","2"],["3","4"]]}]}"#,
        None,
        &Overrides::default(),
    )
    .unwrap();
    assert_eq!((j.command, j.domain.clone(), j.n, j.seed), (Command::Closure, Domain::Prime(7), 2, 0));
    assert_eq!(j.generators[0], Matrix::from_i64(&Domain::Prime(7), 2, 2, &[1, 2, 3, 4]));
}

#[test]
fn fractions_are_canonicalized() {
    let j = job(json!({"field": {"field": "Q"}, "generators": [{"entries": [["2/4"]]}]}), Command::Closure);
    let out = run(&j);
    assert_eq!(out.report["basis"][0]["entries"][0][0], "1");
    let a = json::matrices_roundtrip(&j);
    assert_eq!(a[0].get(0, 0).to_string(), "1/2");
    let k = job(json!({"field": {"field": "Q"}, "generators": [{"entries": [["1/2"]]}]}), Command::Closure);
    assert_eq!(run(&k).report["jobHash"], out.report["jobHash"]);
}

mod json {
    pub fn matrices_roundtrip(j: &matalg::Job) -> Vec<matalg_core::Matrix> {
        let v = matalg::json::matrices(&j.generators);
        v.as_array().unwrap().iter().map(|m| super::parse_matrix(&j.domain, m, "m").unwrap()).collect()
    }
}

#[test]
fn input_errors_are_located() {
    let e = parse_job(r#"{"field":{"field":"GF","p":4},"generators":[]}"#, Some(Command::Closure), &Overrides::default())
        .unwrap_err();
    assert!(e.to_string().contains("not prime"), "{e}");
    let e = parse_job(
        r#"{"field":"Q","generators":[{"entries":[["1","0"],["x","1"]]}]}"#,
        Some(Command::Closure),
        &Overrides::default(),
    )
    .unwrap_err();
    assert_eq!(e.path, "generators[0].entries[1][0]");
    let e = parse_job("{\n  \"field\": \"Q\",\n  oops\n}", Some(Command::Closure), &Overrides::default()).unwrap_err();
    assert!(e.path.starts_with("line 3"), "{e}");
    let e = parse_job(
        r#"{"field":"Q","n":3,"generators":[{"entries":[["1","0"],["0","1"]]}]}"#,
        Some(Command::Closure),
        &Overrides::default(),
    )
    .unwrap_err();
    assert_eq!(e.path, "generators[0]");
}

#[test]
fn burnside_on_units_is_certified() {
    let out = run(&job(unit_job(2), Command::Burnside));
    assert_eq!((out.report["status"].as_str(), out.exit), (Some("certified"), 0));
    assert_eq!(out.report["closureDim"], 4);
    assert_eq!(out.report["matrixUnits"]["units"].as_array().unwrap().len(), 4);
}

#[test]
fn rotation_is_obstructed() {
    let c = companion(&Poly::from_i64(&Domain::Rational, &[1, 0, 1])).unwrap();
    let j = job(json!({"field": "Q", "generators": [matalg::json::matrix(&c)]}), Command::Triangularize);
    let out = run(&j);
    assert_eq!((out.report["status"].as_str(), out.exit), (Some("obstructed"), 0));
    assert_eq!(out.report["chainDims"], json!([0, 2]));
}

#[test]
fn triangularized_summary() {
    let j = job(
        json!({"field": "Q", "generators": [{"entries": [["1","1","0"],["0","2","1"],["0","0","3"]]}]}),
        Command::Triangularize,
    );
    let out = run(&j);
    assert_eq!(out.report["status"], "triangularized");
    assert!(out.summary.contains("chain 0<1<2<3; inner eigenvalues per generator: gen0 [1, 2, 3]"), "{}", out.summary);
}

#[test]
fn large_rational_irreducibility_is_inconclusive() {
    let mut coeffs = vec![0i64; 21];
    coeffs[0] = -2;
    coeffs[20] = 1;
    let c = companion(&Poly::from_i64(&Domain::Rational, &coeffs)).unwrap();
    let j = job(json!({"field": "Q", "generators": [matalg::json::matrix(&c)]}), Command::Irreducible);
    let out = run(&j);
    assert_eq!((out.report["status"].as_str(), out.exit), (Some("inconclusive"), 2));
}

#[test]
fn audit_summary_names_the_witness() {
    let j = parse_job("", Some(Command::FieldAudit), &Overrides { field: Some("Q".into()), n: Some(4), ..Default::default() })
        .unwrap();
    let out = run(&j);
    assert!(out.summary.contains("conditions (i)-(v): all fail; witness k=2"), "{}", out.summary);
    assert_eq!(out.report["conditions"]["v"], false);
}

#[test]
fn reducible_summary() {
    let j = job(json!({"field": "Q", "generators": [{"entries": [["1","0"],["0","0"]]}]}), Command::Irreducible);
    let out = run(&j);
    assert_eq!(out.report["status"], "reducible");
    assert!(out.summary.contains("invariant subspace of dim 1 found"));
}

#[test]
fn reports_roundtrip() {
    let out = run(&job(unit_job(3), Command::Burnside));
    let d = Domain::Prime(3);
    for m in out.report["matrixUnits"]["units"].as_array().unwrap() {
        let parsed = parse_matrix(&d, m, "u").unwrap();
        assert_eq!(&matalg::json::matrix(&parsed), m);
    }
}

#[test]
fn quaternion_entries() {
    let j = job(
        json!({"field": "H", "generators": [
            {"entries": [["0", {"a": "1", "c": "1/2"}], ["0", "0"]]},
            {"entries": [["0", "0"], ["1", "0"]]}
        ]}),
        Command::Closure,
    );
    let out = run(&j);
    let e = &out.report["basis"][0]["entries"];
    assert!(e.to_string().contains("\"a\""));
    let back = parse_matrix(&Domain::Quaternion, &out.report["basis"][0], "b").unwrap();
    assert_eq!(matalg::json::matrix(&back), out.report["basis"][0]);
}

#[test]
fn binary_is_deterministic() {
    let text = unit_job(5).to_string();
    let a = exe(&["burnside", "--in", "-", "--seed", "9"], &text);
    let b = exe(&["burnside", "--in", "-", "--seed", "9"], &text);
    assert_eq!(a, b);
    assert_eq!(a.2, 0);
    let v: Value = serde_json::from_str(&a.0).unwrap();
    assert_eq!((v["seed"].as_u64(), v["status"].as_str()), (Some(9), Some("certified")));
    assert!(a.1.contains("certified"));
}

#[test]
fn binary_exit_codes() {
    let (out, _, code) = exe(&["close", "--in", "-"], r#"{"field":{"field":"GF","p":4},"generators":[]}"#);
    assert_eq!(code, 1);
    assert!(out.contains("not prime"));
    let (out, err, code) = exe(&["audit-field", "--field", "GF(2)", "--n", "2"], "");
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["counterexample"]["dimension"], 2);
    let (_, _, code) = exe(&["counterexample", "--field", "GF(2)", "--n", "1"], "");
    assert_eq!(code, 1);
}

#[test]
fn ideal_audit_job() {
    let mut v = unit_job(2);
    let gens = v["generators"].as_array_mut().unwrap();
    gens.push(json!({"entries": [["1", "0"], ["0", "0"]]}));
    gens.push(json!({"entries": [["0", "0"], ["0", "1"]]}));
    v["trials"] = json!(10);
    let out = run(&job(v, Command::IdealAudit));
    assert_eq!(out.report["status"], "certified", "{}", out.render());
    assert_eq!(out.report["failures"]["iv"], 10);
}

#[test]
fn wedderburn_jobs() {
    let v = json!({"field": "Q", "generators": [
        {"entries": [["0","1","0"],["0","0","0"],["0","0","0"]]},
        {"entries": [["0","0","1"],["0","0","0"],["0","0","0"]]},
        {"entries": [["0","0","0"],["0","0","1"],["0","0","0"]]}
    ]});
    let out = run(&job(v.clone(), Command::Wedderburn));
    assert_eq!((out.report["status"].as_str(), out.report["index"].as_u64()), (Some("certified"), Some(3)));
    let mut w = v;
    w["closure"] = json!(true);
    let out = run(&job(w, Command::Wedderburn));
    assert_eq!(out.report["powerChain"], json!([3, 1, 0]));
    let out = run(&job(unit_job(2), Command::Wedderburn));
    assert_eq!(out.report["status"], "refuted-hypothesis");
    assert_eq!(out.report["failure"]["kind"], "not-an-algebra");
}

#[test]
fn hyperinvariant_job() {
    let c = companion(&Poly::from_i64(&Domain::Rational, &[1, 0, 1])).unwrap();
    let blocks = matalg_core::linalg::direct_sum(&Domain::Rational, &[c.clone(), c]).unwrap();
    let out = run(&job(json!({"field": "Q", "generators": [matalg::json::matrix(&blocks)]}), Command::Hyperinvariant));
    assert_eq!(out.report["hasNontrivial"], false);
    assert_eq!(out.report["commutantDim"], 8);
}
