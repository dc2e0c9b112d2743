use std::fs;
use std::process::{Command, Output};

use antiramsey::Coloring;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiramsey")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = run(&all);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

#[test]
fn formula_values() {
    let o = run(&["formula", "--theorem", "petersen", "-n", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "43");
    let o = run(&["formula", "--theorem", "1.4", "-n", "10", "-p", "2"]);
    assert_eq!(stdout(&o).trim(), "26");
    let (code, v) = json(&["formula", "--theorem", "1.8i", "-n", "14", "-p", "2", "-k", "3", "-q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["theorem"], "1.8i");
    assert!(v["value"].is_u64());
    assert_eq!(v["params"]["q"], 2);
}

#[test]
fn formula_usage_errors() {
    assert_eq!(run(&["formula", "--theorem", "9.9", "-n", "12"]).status.code(), Some(2));
    assert_eq!(run(&["formula", "--theorem", "1.8i", "-n", "12", "-p", "2", "-k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["formula", "--theorem", "petersen", "-n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["formula"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn ar_exact_small_triangle() {
    let o = run(&["ar-exact", "-n", "4", "--expr", "K3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
    assert!(String::from_utf8_lossy(&o.stderr).contains("best so far"));

    let (code, v) = json(&["ar-exact", "-n", "5", "--expr", "K3", "--quiet"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["value"], 4);
    assert_eq!(v["lower"], 4);
    assert_eq!(v["upper"], 4);
    assert_eq!(v["witness"]["n"], 5);
    assert!(v["nodes_explored"].is_u64());
    let witness = Coloring::from_json(&v["witness"].to_string()).unwrap();
    assert_eq!(witness.num_colors(), 4);
}

#[test]
fn ar_exact_resource_exits() {
    let o = run(&["ar-exact", "-n", "7", "--expr", "K3", "--budget", "100", "--quiet"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("budget exhausted"));
    assert_eq!(run(&["ar-exact", "-n", "9", "--expr", "K3"]).status.code(), Some(3));
    assert_eq!(run(&["ar-exact", "-n", "4", "--expr", "K"]).status.code(), Some(2));
    assert_eq!(run(&["ar-exact", "-n", "4"]).status.code(), Some(2));
}

#[test]
fn decompose_emits_graph6_and_json() {
    let o = run(&["decompose", "--expr", "fan(3)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2, "{text}");

    let o = run(&["decompose", "--expr", "fan(3)", "--emit", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["p"], 2);
    let mut names: Vec<&str> = v["members"].as_array().unwrap().iter().map(|m| m["name"].as_str().unwrap()).collect();
    names.sort_unstable();
    assert_eq!(names, ["M6", "S4"]);
    for m in v["members"].as_array().unwrap() {
        assert!(m["graph6"].is_string() && m["n"].is_u64() && m["edges"].is_array());
    }
}

#[test]
fn decompose_reads_graph6_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("family.g6");
    // K4 and 2K3
    fs::write(&path, "C~\nEwCW\n").unwrap();
    let (code, v) = json(&["decompose", "--family", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut names: Vec<&str> = v["members"].as_array().unwrap().iter().map(|m| m["name"].as_str().unwrap()).collect();
    names.sort_unstable();
    assert_eq!(names, ["K3", "M4"]);

    fs::write(&path, "not graph6 at all\n").unwrap();
    assert_eq!(run(&["decompose", "--family", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--family", "/nonexistent/file.g6"]).status.code(), Some(2));
}

#[test]
fn sequence_of_k5() {
    let o = run(&["sequence", "--expr", "K5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("p(F0) = 4"), "{text}");
    let (code, v) = json(&["sequence", "--expr", "K5", "--stages", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["p0"], 4);
    assert_eq!(v["status"], "complete");
    let stages = v["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 2);
    assert_eq!(stages[0]["decomposition"][0]["name"], "K2");
    assert!(stages[0]["p"].is_u64() && stages[0]["family_size"].is_u64());

    let (_, frozen) = json(&["sequence", "--expr", "K5", "--frozen-p", "--stages", "3"]);
    assert!(frozen["stages"].as_array().unwrap().iter().all(|s| s["p"] == 4));
    assert_eq!(run(&["sequence", "--expr", "K5", "--frozen-p", "--reeval-p"]).status.code(), Some(2));
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    let o = run(&["construct", "--theorem", "petersen", "-n", "12", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let c = Coloring::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(c.num_colors(), 43);

    let o = run(&["verify", "--coloring", p, "--expr", "petersen", "--colors", "43"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let (code, v) = json(&["verify", "--coloring", p, "--expr", "petersen"]);
    assert_eq!(code, 0);
    assert_eq!(v["colors"], 43);
    assert_eq!(v["free"], true);
    assert!(v["rainbow"].is_null());

    assert_eq!(run(&["verify", "--coloring", p, "--expr", "petersen", "--colors", "44"]).status.code(), Some(1));
    // cross edges are rainbow, so any path across the classes is a rainbow P4
    let (code, v) = json(&["verify", "--coloring", p, "--expr", "P4"]);
    assert_eq!(code, 1);
    assert_eq!(v["free"], false);
    assert_eq!(v["rainbow"]["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn construct_prints_json_to_stdout() {
    let o = run(&["construct", "--theorem", "1.4", "-n", "6", "-p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let c = Coloring::from_json(&stdout(&o)).unwrap();
    assert_eq!(c.num_colors(), 10);
    let o = run(&["construct", "--theorem", "1.8i", "-n", "12", "-p", "2", "-k", "3", "--labels", "0,1"]);
    assert_eq!(Coloring::from_json(&stdout(&o)).unwrap().num_colors(), 43);
    assert_eq!(run(&["construct", "--theorem", "1.8i", "-n", "12", "-k", "3", "-q", "5"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--theorem", "exceptional", "-n", "11"]).status.code(), Some(2));
    let o = run(&["construct", "--theorem", "exceptional", "-n", "10"]);
    assert_eq!(Coloring::from_json(&stdout(&o)).unwrap().num_colors(), 31);
}

#[test]
fn verify_rejects_bad_coloring_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"n\": 3, \"edges\": [[0, 1, 0]]}").unwrap();
    assert_eq!(run(&["verify", "--coloring", path.to_str().unwrap(), "--expr", "K3"]).status.code(), Some(2));
}

#[test]
fn theorem_reports() {
    let o = run(&["theorem", "--theorem", "1.4", "-n", "8", "-p", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("PASS"));
    let (code, v) = json(&["theorem", "--theorem", "1.8i", "-n", "14", "-p", "2", "-k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["theorem"], "h-prime");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    assert_eq!(v["expected"], v["actual"]);
    // {K4} is not of the form K_{p+2} for p = 3
    let o = run(&["theorem", "--theorem", "1.4", "-n", "8", "-p", "3", "--expr", "K4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).trim_end().ends_with("FAIL"));
}

#[test]
fn qmax_for_petersen() {
    let (code, v) = json(&["qmax", "-p", "2", "-k", "3", "--expr", "petersen"]);
    assert_eq!(code, 0);
    assert_eq!(v["at_n"]["q"], 2);
    assert_eq!(v["at_n_plus_p"]["q"], 2);
    assert_eq!(v["stable"], true);
    assert_eq!(v["slots"], 2);
    let o = run(&["qmax", "-n", "12", "-p", "2", "-k", "3", "--expr", "petersen"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("stable"));
}

#[test]
fn k5_check_reports_m2() {
    let o = run(&["k5-check"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(1), "{text}");
    assert!(text.contains("FAIL  M2"), "{text}");
    assert!(text.contains("PASS  F0=K5"), "{text}");
    let o = run(&["k5-check", "--rule", "color-reduction"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("PASS"));
    let (code, v) = json(&["k5-check"]);
    assert_eq!(code, 1);
    assert_eq!(v["pass"], false);
    assert_eq!(v["sequence"]["stages"].as_array().unwrap().len(), 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "ar-exact", "-n", "5", "--expr", "K4", "--quiet"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["--json", "sequence", "--expr", "fan(2)"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
