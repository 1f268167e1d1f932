use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use finfree::finfree::MonicPoly;
use finfree::oracle::McReport;
use finfree::symgroup::CharacterTableJson;
use finfree::weingarten::{ClassFunction, ClassFunctionJson};
use tempfile::TempDir;

fn finfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn conv_examples() {
    let dir = TempDir::new().unwrap();
    let x2 = write(&dir, "x2.json", r#"{"d":2,"a":["1","0","0"]}"#);
    let p = write(&dir, "p.json", r#"{"d":2,"a":["1","0","-1"]}"#);
    let x1sq = write(&dir, "x1.json", r#"{"d":2,"a":["1","2","1"]}"#);
    let cases = [("add", &x2, &p, "x^2 - 1"), ("mul", &x1sq, &p, "x^2 - 1"), ("sub", &p, &p, "x^2 - 2")];
    for (op, a, b, expected) in cases {
        let out = finfree(&["conv", op, s(a), s(b)]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).lines().next().unwrap(), expected, "{op}");
    }
    let out = finfree(&["conv", "sub", s(&p), s(&p)]);
    assert!(stdout(&out).contains("a = [1, 0, -2]"));
}

#[test]
fn poly_json_round_trips_through_conv() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", r#"{"d":3,"a":["1","1/2","-3","7/4"]}"#);
    let out = finfree(&["--format", "json", "conv", "add", s(&p), s(&p)]);
    assert!(out.status.success());
    let first = stdout(&out);
    let parsed: MonicPoly = serde_json::from_str(&first).unwrap();
    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value["signed"], parsed.to_string());
    // emitted JSON is valid input again
    let q = write(&dir, "q.json", &first);
    let x3 = write(&dir, "x3.json", r#"{"d":3,"a":["1","0","0","0"]}"#);
    let again = finfree(&["--format", "json", "conv", "add", s(&q), s(&x3)]);
    assert_eq!(stdout(&again), first);
    let z = finfree(&["--format", "json", "zpoly", "--d", "3"]);
    let zp: MonicPoly = serde_json::from_str(&stdout(&z)).unwrap();
    assert_eq!(serde_json::to_value(&zp).unwrap()["a"][2], "27/8");
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let p2 = write(&dir, "p2.json", r#"{"d":2,"a":["1","0","-1"]}"#);
    let p1 = write(&dir, "p1.json", r#"{"d":1,"a":["1","0"]}"#);
    let bad = write(&dir, "bad.json", r#"{"d":2,"a":["1","0.5","-1"]}"#);
    assert_eq!(finfree(&["conv", "add", s(&p2), s(&p1)]).status.code(), Some(2));
    assert_eq!(finfree(&["conv", "add", s(&p2), s(&bad)]).status.code(), Some(2));
    assert_eq!(finfree(&["conv", "add", s(&p2), "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(finfree(&["zpoly", "--d", "0"]).status.code(), Some(2));
    assert_eq!(finfree(&["verify", "nonsense"]).status.code(), Some(2));
    let a = write(&dir, "a.json", r#"["1","-1"]"#);
    let b = write(&dir, "b.json", r#"["1","2","3"]"#);
    assert_eq!(finfree(&["commutator", s(&a), s(&b)]).status.code(), Some(2));
    let out = finfree(&["--cap-partition-k", "3", "character", "--k", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn commutator_exact() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", r#"["1","-1"]"#);
    let out = finfree(&["commutator", s(&a), s(&a)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next().unwrap(), "x^2 + 8/3");
    let scalar = write(&dir, "s.json", r#"["5","5","5"]"#);
    let b = write(&dir, "b.json", r#"["1","-2","1/3"]"#);
    let out = finfree(&["commutator", s(&scalar), s(&b)]);
    assert_eq!(stdout(&out).lines().next().unwrap(), "x^3");
}

#[test]
fn commutator_monte_carlo() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", r#"["1","-1"]"#);
    let args = ["--format", "json", "commutator", s(&a), s(&a), "--mc", "200000", "--seed", "7", "--chunk", "5000"];
    let first = finfree(&args);
    assert!(first.status.success());
    let second = finfree(&args);
    assert_eq!(first.stdout, second.stdout, "MC reports must be byte-identical");
    let value: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let report: McReport = serde_json::from_value(value["mc"].clone()).unwrap();
    assert_eq!((report.n, report.seed, report.chunk_size), (200_000, 7, 5000));
    assert_eq!(serde_json::to_value(&report).unwrap(), value["mc"]);
    for check in value["checks"].as_array().unwrap() {
        assert!(check["z"].as_f64().unwrap().abs() < 4.0);
        assert_eq!(check["pass"], true);
    }
    let other = finfree(&["--format", "json", "commutator", s(&a), s(&a), "--mc", "200000", "--seed", "8", "--chunk", "5000"]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn weingarten_json() {
    let out = finfree(&["--format", "json", "weingarten", "--k", "2", "--d", "3"]);
    assert!(out.status.success());
    let json: ClassFunctionJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json.d, Some(3));
    let wg = ClassFunction::from_json(&json).unwrap();
    assert_eq!(wg.get(&"1,1".parse().unwrap()).to_string(), "1/8");
    assert_eq!(serde_json::to_string_pretty(&wg.to_json(Some(3))).unwrap() + "\n", stdout(&out));
    let pretty = stdout(&finfree(&["weingarten", "--k", "2", "--d", "1"]));
    assert!(pretty.contains("1/4"));
}

#[test]
fn immanants() {
    let dir = TempDir::new().unwrap();
    let delta = write(&dir, "m.json", r#"[["0","2"],["-2","0"]]"#);
    let out = finfree(&["immanant", "--lambda", "2", s(&delta)]);
    assert_eq!(stdout(&out).trim(), "Imm^(2) = -4");
    let out = finfree(&["immanant", "--lambda", "2", "--method", "gj", s(&delta)]);
    assert_eq!(stdout(&out).trim(), "Imm^(2) = -4");
    let x = write(&dir, "x.json", r#"["3","1"]"#);
    let out = finfree(&["--format", "json", "immanant", "--lambda", "1,1", "--method", "delta-minus", s(&x)]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], "4");
    assert_eq!(v["lambda"], serde_json::json!([1, 1]));
    let ragged = write(&dir, "r.json", r#"[["1","2"],["3"]]"#);
    assert_eq!(finfree(&["immanant", "--lambda", "2", s(&ragged)]).status.code(), Some(2));
}

#[test]
fn characters_and_kostka() {
    let out = finfree(&["character", "--lambda", "3,1", "--rho", "4"]);
    assert_eq!(stdout(&out).trim(), "χ^(3,1)((4)) = -1");
    let out = finfree(&["--format", "json", "character", "--k", "4"]);
    let table: CharacterTableJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table.values["2,1,1|4"], 1);
    assert_eq!(table.values.len(), 25);
    let out = finfree(&["kostka", "--lambda", "3,2", "--mu", "2,2,1"]);
    assert_eq!(stdout(&out).trim(), "K((3,2), (2,2,1)) = 2");
    let out = finfree(&["--format", "json", "kostka", "--k", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["values"], serde_json::json!([[1, 1, 1], [0, 1, 2], [0, 0, 1]]));
}

#[test]
fn verify_suites() {
    let out = finfree(&["verify", "immanant"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 failed"));
    let out = finfree(&["verify", "identities"]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn corrupted_weingarten_table_fails_verification() {
    let dir = TempDir::new().unwrap();
    // Wg_{2,2} with the transposition value off by a factor of two
    let bad = write(
        &dir,
        "wg.json",
        r#"{"k":2,"d":2,"values":[{"cycle_type":[2],"rational":"-1/12"},{"cycle_type":[1,1],"rational":"1/3"}]}"#,
    );
    let out = finfree(&["verify", "all", "--mc", "20000", "--wg-table", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    assert!(text.lines().any(|l| l.starts_with("commutator") && l.contains("FAIL")));
    let good = write(
        &dir,
        "ok.json",
        r#"{"k":2,"d":2,"values":[{"cycle_type":[2],"rational":"-1/6"},{"cycle_type":[1,1],"rational":"1/3"}]}"#,
    );
    let out = finfree(&["verify", "weingarten", "--mc", "20000", "--wg-table", s(&good)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
