use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pivotlab")).args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn golden_pivots() {
    let o = run(&["pivots", "--alpha-plus", "golden", "--depth", "5"]);
    assert!(o.status.success());
    let v = json(&o);
    let slopes: Vec<&str> = v["pivots"].as_array().unwrap().iter().map(|p| p["slope"].as_str().unwrap()).collect();
    assert_eq!(slopes, ["1/0", "1/1", "2/1", "3/2", "5/3"]);
    assert_eq!(strs(&v["widths"]), ["1"; 5]);
    assert_eq!(v["cf_offset"], -1);
}

#[test]
fn periodic_three_has_constant_widths() {
    let v = json(&run(&["pivots", "--alpha-plus", "[0; (3)]", "--depth", "8"]));
    assert_eq!(strs(&v["widths"]), ["3"; 8]);
}

#[test]
fn equal_endpoints_are_bad_input() {
    let o = run(&["pivots", "--alpha-minus", "2/1", "--alpha-plus", "[2]"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "equal_endpoints");
    assert!(!o.stderr.is_empty());
}

#[test]
fn unparsable_slope_is_bad_input() {
    let o = run(&["trace-poly", "--target", "1/x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(json(&o)["error"]["message"].as_str().unwrap().contains("1/x"));
}

#[test]
fn trace_polynomials() {
    for (target, poly, length) in [("0/1", "X", "1"), ("1/0", "Y", "1"), ("2/1", "YZ - X", "2")] {
        let v = json(&run(&["trace-poly", "--target", target]));
        assert_eq!(v["poly"], poly, "{target}");
        assert_eq!(v["length"], length, "{target}");
    }
    let v = json(&run(&["trace-poly", "--target", "3/1"]));
    assert_eq!(v["length"], "3");
    assert_eq!(v["total_degree"], 3);
}

#[test]
fn monomial_budget_exhaustion() {
    let o = run(&["trace-poly", "--target", "89/55", "--monomial-budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["error"]["kind"], "budget_exceeded");
}

#[test]
fn algebraic_sets_and_index_limit() {
    let dir = tempfile::tempdir().unwrap();
    let c = path_str(dir.path());
    assert_eq!(json(&run(&["algset", "--index", "1", "--cache", c]))["size"], 1);
    assert_eq!(json(&run(&["algset", "--index", "2", "--cache", c]))["size"], 5);
    let o = run(&["algset", "--index", "9"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn construct_then_approx_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    let w = dir.path().join("w.json");
    let o = run(&["construct", "--max-stage", "2", "--output", path_str(&t), "--widths-out", path_str(&w)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let tv: Value = serde_json::from_str(&std::fs::read_to_string(&t).unwrap()).unwrap();
    assert_eq!(tv["stages"].as_array().unwrap().len(), 2);
    assert_eq!(strs(&tv["widths"]), ["3", "3"]);

    let a = json(&run(&["approx", "--widths", path_str(&w), "--terms", "4"]));
    assert_eq!(strs(&a["terms"]), ["3", "3", "1", "1"]);
    assert_eq!(strs(&a["enclosure"]), ["10/3", "13/4"]);

    let ok = run(&["check", "--transcript", path_str(&t), "--triple", "0;1;i"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["gap_at_least_m"], true);
}

#[test]
fn construct_without_stages_gives_filler() {
    let v = json(&run(&["construct", "--max-stage", "0", "--tail", "4", "--filler", "2"]));
    assert_eq!(v["stages"].as_array().unwrap().len(), 0);
    assert_eq!(strs(&v["widths"]), ["2"; 4]);
}

#[test]
fn reruns_are_byte_identical() {
    let a = run(&["construct", "--max-stage", "2"]);
    let b = run(&["construct", "--max-stage", "2", "--threads", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn config_file_with_override() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("run.conf");
    std::fs::write(&f, "command = pivots\nalpha-plus = golden\ndepth = 3\n").unwrap();
    let v = json(&run(&["pivots", "--config", path_str(&f), "--depth", "4"]));
    assert_eq!(v["pivots"].as_array().unwrap().len(), 4);

    let printed = run(&["pivots", "--config", path_str(&f), "--print-config"]);
    let text = String::from_utf8(printed.stdout).unwrap();
    assert!(text.contains("depth = 3") && text.contains("alpha-plus = golden"));
    let g = dir.path().join("again.conf");
    std::fs::write(&g, &text).unwrap();
    let again = run(&["pivots", "--config", path_str(&g), "--print-config"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);

    std::fs::write(&f, "command = verify\n").unwrap();
    assert_eq!(run(&["pivots", "--config", path_str(&f)]).status.code(), Some(2));
}

#[test]
fn verify_catches_injected_defect() {
    let o = run(&["verify", "--samples", "10", "--flips", "200", "--inject-defect", "flip"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["pass"], false);
    let failed: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["pass"] == false)
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["flip-invariance"]);
}
