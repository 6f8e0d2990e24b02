use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_alpha-polytope"));
    c.env_remove("ALPHA_POLYTOPE_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn headline_values() {
    let o = run(&["alpha", "--example", "gl2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("2/5\n"));

    let v = json(&["alpha", "--example", "gl2", "--json"]);
    assert_eq!(v["results"]["value"], "2/5");
    assert_eq!(v["results"]["witness"]["facet"], "l3");
    assert_eq!(v["results"]["witness"]["vertex"], serde_json::json!(["-1/2", "-1/2"]));

    assert_eq!(json(&["quantize-m0", "--example", "gl2", "--json"])["results"]["m0"], 2);
    assert_eq!(json(&["toric-alpha", "--json", "--example", "cp2-blowup2"])["summary"], "1/3");
    assert_eq!(json(&["alpha-mk", "--m", "1", "--k", "2", "--example", "cp2-blowup2", "--json"])["summary"], "1/2");
    assert_eq!(json(&["t", "--point", "-1,0", "--example", "cp2-blowup2", "--json"])["summary"], "1/2");
    let c = json(&["conjecture", "--k", "2", "--max-m", "10", "--example", "cp2-blowup2", "--json"]);
    assert_eq!(c["results"]["verdict"], "fails");
    let c = json(&["conjecture", "--k", "3", "--example", "cp1xcp1", "--json"]);
    assert_eq!(c["results"]["verdict"], "holds");
    assert_eq!(c["results"]["m_k"], 1);
    let f = json(&["min-faces", "--example", "cp2", "--json"]);
    assert_eq!(f["summary"], "3 vertices");
}

#[test]
fn alpha_pi_reads_weights_file() {
    let dir = tempfile::tempdir().unwrap();
    let w = write(dir.path(), "w.json", r#"{"weights": [["-1", "-1"]]}"#);
    let v = json(&["alpha-pi", "--m", "2", "--weights", &w, "--example", "gl2", "--json"]);
    assert_eq!(v["summary"], "2/5");
    assert_eq!(v["results"]["method"], "fano_lp");
}

#[test]
fn input_file_and_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(
        dir.path(),
        "square.json",
        r#"{"schema_version": 1, "rank": 2, "fano": true,
            "polytope": {"vertices": [["1","1"],["1","-1"],["-1","1"],["-1","-1"]]}}"#,
    );
    let out = dir.path().join("r.json");
    let o = run(&["report-all", &doc, "--json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["results"]["toric_alpha"]["value"], "1/2");
    assert_eq!(v["results"]["alpha_delcroix"]["value"], "1/2");
}

#[test]
fn threads_env_and_timing() {
    let a = bin()
        .args(["alpha-mk", "--m", "2", "--k", "3", "--example", "cp2-blowup2", "--json"])
        .env("ALPHA_POLYTOPE_THREADS", "4")
        .output()
        .unwrap();
    let b = run(&["alpha-mk", "--m", "2", "--k", "3", "--example", "cp2-blowup2", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let t = json(&["alpha", "--example", "gl2", "--json", "--timing"]);
    assert!(t["timing_ms"].is_u64());
    assert!(json(&["alpha", "--example", "gl2", "--json"]).get("timing_ms").is_none());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // usage
    assert_eq!(run(&["alpha-mk", "--example", "gl2"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    // malformed input
    let bad = write(dir.path(), "bad.json", "{ not json");
    assert_eq!(run(&["alpha", &bad]).status.code(), Some(2));
    let unknown = write(dir.path(), "unknown.json", r#"{"schema_version": 1, "rank": 2, "colour": "red"}"#);
    assert_eq!(run(&["alpha", &unknown]).status.code(), Some(2));
    assert_eq!(run(&["alpha", "--example", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["alpha", "/nonexistent/doc.json"]).status.code(), Some(2));
    // the triangle conv{(0,0),(2,0),(0,1)} is not symmetric under swapping coordinates
    let skew = write(
        dir.path(),
        "skew.json",
        r#"{"schema_version": 1, "rank": 2, "fano": false,
            "root_system": {"types": [{"type": "A", "n": 1}]},
            "polytope": {"vertices": [[0,0],[2,0],[0,1]]}}"#,
    );
    assert_eq!(run(&["alpha", &skew]).status.code(), Some(3));
    // domain errors
    assert_eq!(run(&["toric-alpha", "--example", "gl2"]).status.code(), Some(4));
    assert_eq!(run(&["t", "--point", "5,5", "--example", "cp2"]).status.code(), Some(4));
    let o = run(&["alpha-mk", "--m", "1", "--k", "1000", "--example", "gl2"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn emit_goldens_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(run(&["emit-goldens", d]).status.code(), Some(0));
    let read = |name: &str| std::fs::read(dir.path().join(name)).unwrap();
    let reports: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().ends_with(".report.json"))
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .collect();
    assert!(reports.len() >= 4, "{reports:?}");
    let first: Vec<Vec<u8>> = reports.iter().map(|r| read(r)).collect();
    assert_eq!(run(&["emit-goldens", d]).status.code(), Some(0));
    let second: Vec<Vec<u8>> = reports.iter().map(|r| read(r)).collect();
    assert_eq!(first, second);

    // every emitted input reproduces its report
    for r in &reports {
        let input = dir.path().join(r.replace(".report.json", ".input.json"));
        let o = run(&["report-all", input.to_str().unwrap(), "--json"]);
        assert_eq!(o.stdout, read(r), "{r}");
    }
}

#[test]
fn cpn_generator() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(run(&["emit-goldens", d, "--cpn", "4"]).status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&std::fs::read(dir.path().join("cp4.input.json")).unwrap()).unwrap();
    let rows = doc["polytope"]["inequalities"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4]["normal"], serde_json::json!(["-1", "-1", "-1", "-1"]));
    let report: Value = serde_json::from_slice(&std::fs::read(dir.path().join("cp4.report.json")).unwrap()).unwrap();
    assert_eq!(report["results"]["toric_alpha"]["value"], "1/5");
}
