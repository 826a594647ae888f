use std::process::{Command, Output};

use binrec_core::charlab::CharPoly;
use binrec_core::exactalg::{BiPoly, JsonPoly, PolyJson};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binrec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn pk_newton_text() {
    let o = run(&["pk", "--n", "5", "--m", "2", "--source", "newton"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "x^5 - 5*x^3*s + 5*x*s^2");
}

#[test]
fn pk_sources_agree() {
    let out: Vec<String> = ["newton", "oracle"]
        .iter()
        .map(|src| stdout(&run(&["pk", "--n", "9", "--m", "4", "--source", src])))
        .collect();
    assert_eq!(out[0], out[1]);
    assert_eq!(out[0].lines().count(), 3);
    let closed = stdout(&run(&["pk", "--n", "9", "--m", "4", "--source", "closed"]));
    let lines: Vec<&str> = out[0].lines().collect();
    assert_eq!(closed.lines().collect::<Vec<_>>(), [lines[0], lines[2]]);
}

#[test]
fn pk_json_round_trips() {
    let o = run(&["pk", "--n", "7", "--m", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["provenance"], "newton");
    for item in v["polys"].as_array().unwrap() {
        let pj: PolyJson = serde_json::from_value(item["poly"].clone()).unwrap();
        let from_json = BiPoly::from_json(&pj).unwrap();
        let from_text: BiPoly = item["text"].as_str().unwrap().parse().unwrap();
        assert_eq!(from_json, from_text);
    }
}

#[test]
fn charpoly_listed_cell() {
    let o = run(&["charpoly", "--m", "5", "--k", "4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.trim(), "z^5 - (x^4 + x^3)*z - x^4");
    let parsed: CharPoly = text.trim().parse().unwrap();
    assert_eq!(parsed.to_string(), text.trim());
}

#[test]
fn vfactors_text_and_csv() {
    let o = run(&["vfactors", "--m", "3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("v[3, 0] = z - 1"), "{text}");
    assert!(text.contains("v[3, 3] = z + x"), "{text}");
    let csv = stdout(&run(&["vfactors", "--m", "4", "-f", "csv"]));
    assert_eq!(csv.lines().next(), Some("k,degree,v"));
    assert!(!csv.lines().any(|l| l.starts_with("2,")), "no middle factor for even m");
}

#[test]
fn verify_schur_passes() {
    let o = run(&["verify", "--check", "schur", "--n-max", "30"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("1 passed, 0 failed"));
}

#[test]
fn verify_json_and_markdown() {
    let o = run(&["verify", "--check", "gf", "--check", "oeis", "--n-max", "12", "-f", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 13);
    assert!(arr[..12].iter().all(|r| r["status"] == "pass" && r.get("witness").is_none()));
    assert_eq!(arr[12]["status"], "report-only");
    let md = stdout(&run(&["verify", "--check", "schur", "-f", "markdown"]));
    assert!(md.starts_with("| check | parameters | status | detail |"));
}

#[test]
fn conjectures_small_range() {
    let o = run(&["conjectures", "--m-range", "2..4", "-f", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    let md = stdout(&run(&["conjectures", "--m-range", "3..3"]));
    assert!(md.starts_with("| m | k |"));
}

#[test]
fn gf_and_seq_tables() {
    let o = run(&["gf", "--family", "mod2-minus-one", "--i", "5", "--terms", "7", "-f", "csv"]);
    let vals: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(vals, ["1", "1", "2", "3", "5", "8", "13"]);
    let o = run(&["seq", "--i", "5", "-l", "0", "--m", "2", "--at-minus-one", "--n-max", "10", "-f", "csv"]);
    assert_eq!(stdout(&o).lines().last(), Some("10,89"));
    let o = run(&["seq", "--table", "binom-floor", "--m", "3", "--n-max", "1", "-f", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 3 + 6);
}

#[test]
fn paths_weight() {
    let o = run(&["paths", "--n", "6", "--m", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("weight: t^3 + 6*t^2 + 5*t + 1"), "{}", stdout(&o));
    let o = run(&["paths", "--n", "4", "--m", "2", "--list", "-f", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["paths"].as_array().unwrap().len(), 5);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["pk", "--n", "3", "--m", "1"])), 2);
    assert_eq!(code(&run(&["pk", "--n", "3", "--m", "3", "--bogus"])), 2);
    assert_eq!(code(&run(&["verify", "--check", "nope"])), 2);
    assert_eq!(code(&run(&["conjectures", "--m-range", "2..7"])), 2);
    assert_eq!(code(&run(&["conjectures", "--m-range", "x"])), 2);
    assert_eq!(code(&run(&["gf", "--family", "mod2-minus-one", "--i", "4"])), 2);
    assert_eq!(code(&run(&["charpoly", "--m", "3", "--k", "3"])), 2);
}

#[test]
fn resource_cap_exits_3() {
    let o = run(&["paths", "--n", "30", "--m", "3", "--cap", "1000"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--check", "paths", "--n-max", "10", "-f", "json"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}
