use std::process::{Command, Output};

use serde_json::Value;

fn knotsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotsig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = knotsig(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let v: Value = serde_json::from_str(&stdout(args)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn signature_at_a_half() {
    assert_eq!(stdout(&["sig", "eval", "torus(2,3)", "--at", "1/2"]).trim(), "-2");
}

#[test]
fn values_at_jumps_are_averaged() {
    // T(2,3) jumps from 0 to −2 at 1/6; T(3,4) is −3 there by the lattice count
    assert_eq!(stdout(&["sig", "eval", "torus(2,3)", "--at", "1/6"]).trim(), "-1");
    let v = json(&["sig", "eval", "sum(torus(2,3),torus(3,4))", "--at", "1/6", "--json"]);
    assert_eq!(v["signature"], "-4");
    assert_eq!(v["nullity"], 2);
    assert_eq!(v["is_jump"], true);
}

#[test]
fn coset_conditions_for_the_cable() {
    let v = json(&["cond", "cable(2,-3,torus(2,3))", "--m", "1", "--p", "73"]);
    let r = &v["report"];
    assert_eq!(r["verdict"], "pass");
    let sums = r["sums"].as_array().unwrap();
    assert_eq!(sums.len(), 8);
    assert!(sums.iter().all(|s| s == "0"));
}

#[test]
fn condition_ranges_report_failures() {
    let v = json(&["cond", "torus(2,3)", "--m", "1", "--pmax", "9"]);
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["failures"], serde_json::json!([3, 5, 7, 9]));
}

#[test]
fn determinant_of_order_five() {
    assert_eq!(stdout(&["dcrit", "--d", "5"]).trim(), "-2/5");
}

#[test]
fn scans_agree_across_job_counts() {
    let serial = stdout(&["dcrit", "--scan", "41", "--jobs", "1"]);
    let parallel = stdout(&["dcrit", "--scan", "41", "--jobs", "4"]);
    assert_eq!(serial, parallel);
    let v: Value = serde_json::from_str(&serial).unwrap();
    assert_eq!(v["zeros"], serde_json::json!([]));
    assert_eq!(v["rows"].as_array().unwrap().len(), 20);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["sig", "plot", "cable(2,-3,torus(2,3))", "--denominator", "24"][..],
        &["cover", "seifert([[-1,1],[0,2]])", "--q", "3", "--p", "7"],
        &["tau", "wh(cable(2,-3,torus(2,3)),2)"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn plot_csv_and_svg() {
    let dir = std::env::temp_dir().join(format!("knotsig-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("figure.svg");
    let csv = stdout(&[
        "sig",
        "plot",
        "cable(2,-3,torus(2,3))",
        "--denominator",
        "12",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "x,value");
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[1], "0,0");
    assert_eq!(lines[7], "1/2,2");
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert!(text.contains(r#"version="1.1""#));
    assert_eq!(text.matches("<circle").count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn alexander_arf_and_fox_milnor() {
    assert_eq!(stdout(&["alex", "torus(2,3)"]).trim(), "t^-1 - 1 + t");
    assert_eq!(stdout(&["arf", "torus(2,3)"]).trim(), "1");
    assert_eq!(stdout(&["arf", "seifert([[1,1],[0,2]])"]).trim(), "0");
    let v = json(&["foxmilnor", "cable(2,-3,torus(2,3))"]);
    assert_eq!(v["report"]["verdict"], "fail");
    assert_eq!(v["report"]["determinant"], "3");
    let v = json(&["foxmilnor", "wh(torus(2,3),2)"]);
    assert_eq!(v["report"]["verdict"], "pass");
    let v = json(&["avg", "torus(2,3)", "--m", "1", "--pmax", "5"]);
    assert_eq!(v["report"]["failures"], serde_json::json!([3, 5]));
    assert_eq!(v["report"]["entries"][1]["sum"], "-8");
    let v = json(&["cond", "torus(2,3)", "--m", "1", "--p", "5"]);
    assert_eq!(v["report"]["sums"], serde_json::json!(["-8"]));
}

#[test]
fn covers_report() {
    let v = json(&["cover", "seifert([[-1,1],[0,2]])", "--q", "3", "--p", "7"]);
    assert_eq!(v["invariant_factors"], serde_json::json!(["7", "7"]));
    assert_eq!(v["order"], "49");
    assert_eq!(v["deck_eigenvalues"], serde_json::json!([2, 4]));
    assert_eq!(v["metabolizers"]["metabolizer_count"], 2);
    let v = json(&["cover", "torus(2,3)", "--q", "2"]);
    assert_eq!(v["invariant_factors"], serde_json::json!(["3"]));
}

#[test]
fn tau_and_prime_sets() {
    let v = json(&["tau", "cable(2,-3,sum(torus(2,3),wh(torus(2,3),0)))"]);
    assert_eq!(v["tau"]["value"], 3);
    let v = json(&["primeset", "--m", "1", "--thm", "8", "--qmax", "7"]);
    assert_eq!(v["primes"], serde_json::json!(["7", "31", "127"]));
    let v = json(&["primeset", "--m", "1", "--thm", "7", "--qmax", "5", "--bound", "40"]);
    assert_eq!(v["primes"], serde_json::json!(["3", "5", "7", "31"]));
}

#[test]
fn averaging_report() {
    let v = json(&["avg", "cable(2,-3,torus(2,3))", "--m", "1", "--pmax", "15"]);
    assert_eq!(v["report"]["verdict"], "pass");
    let v = json(&["avg", "torus(2,3)", "--m", "1", "--pmax", "5"]);
    assert_eq!(v["report"]["failures"], serde_json::json!([3, 5]));
    assert_eq!(v["report"]["entries"][1]["sum"], "-8");
    let v = json(&["cond", "torus(2,3)", "--m", "1", "--p", "5"]);
    assert_eq!(v["report"]["sums"], serde_json::json!(["-8"]));
}

#[test]
fn exit_codes() {
    // malformed expression
    assert_eq!(knotsig(&["sig", "eval", "torus(2,3", "--at", "1/2"]).status.code(), Some(2));
    // malformed flag value
    assert_eq!(knotsig(&["sig", "eval", "torus(2,3)", "--at", "half"]).status.code(), Some(2));
    // missing flag
    assert_eq!(knotsig(&["cond", "torus(2,3)", "--m", "1"]).status.code(), Some(2));
    // mathematical preconditions
    let out = knotsig(&["cover", "seifert([[-1,1],[0,2]])", "--q", "3", "--p", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not divide"));
    assert_eq!(knotsig(&["cond", "torus(2,3)", "--m", "1", "--p", "4"]).status.code(), Some(3));
    assert_eq!(knotsig(&["dcrit", "--d", "4"]).status.code(), Some(3));
    assert_eq!(knotsig(&["sig", "eval", "torus(2,3)", "--at", "3/2"]).status.code(), Some(3));
    assert_eq!(knotsig(&["sig", "eval", "torus(2,2)", "--at", "1/2"]).status.code(), Some(3));
}
