use std::process::{Command, Output};

fn repcur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repcur")).args(args).output().unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn passing_check_exits_zero() {
    let o = repcur(&[
        "verify",
        "schur-weyl",
        "--n",
        "2",
        "--k",
        "2",
        "--points",
        "0,1",
        "--tau",
        "1,2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(String::from_utf8_lossy(&o.stdout).contains("PASS schur-weyl"));
}

#[test]
fn failing_check_exits_one_unless_expected() {
    let o = repcur(&["verify", "irreducibility", "--points", "0,0,0"]);
    assert_eq!(o.status.code(), Some(1));
    let o = repcur(&["verify", "irreducibility", "--points", "0,0,0", "--expect-fail"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two_with_diagnostic() {
    let o = repcur(&["verify", "schur-weyl", "--points", "0,0", "--tau", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("points must be pairwise distinct"));
    let o = repcur(&["verify", "span", "--weights", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("weight not dominant: '1,2'"));
    let o = repcur(&["verify", "span", "--points", "0,abc"]);
    assert!(stderr(&o).contains("'abc'"));
    let o = repcur(&["verify", "span", "--family", "g2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("'g2'"));
    assert_eq!(repcur(&["verify"]).status.code(), Some(2));
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = repcur(&[
        "verify",
        "casimir",
        "--weights",
        "1,0;1,0",
        "--points",
        "0,1",
        "--polys",
        "0,1;1,1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["config"]["command"], "casimir");
    assert!(v["config"]["degree_cap"].as_str().unwrap().starts_with("1 (auto"));
    let check = &v["checks"][0];
    assert_eq!(check["status"], "pass");
    assert_eq!(check["actual"], "(2,0): 5; (1,1): 3");
    assert!(check["runtime_ms"].is_u64());
    for key in ["check_name", "parameters", "expected", "actual"] {
        assert!(!check[key].is_null(), "{key}");
    }
}

#[test]
fn dimension_cap_is_enforced() {
    let o = Command::new(env!("CARGO_BIN_EXE_repcur"))
        .args(["verify", "evaluation", "--n", "3", "--k", "3"])
        .env("REPCUR_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("REPCUR_MAX_DIM"), "{}", stderr(&o));
}

#[test]
fn quick_profile_report_to_stdout() {
    let o = repcur(&["verify", "all", "--profile", "quick", "--seed", "5", "--output", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().len() >= 20);
    assert_eq!(v["config"]["profile"], "quick");
}
