//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

fn graphvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphvar"))
        .args(args)
        .env_remove("GRAPHVAR_MAX_EDGES")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

#[test]
fn mcd_cycle_seven_all_methods() {
    let out = graphvar(&["mcd", "--gen", "cycle:7", "--method", "all"]);
    let v = stdout_json(&out);
    assert_eq!(v["mcd"], 7);
    assert_eq!(v["method"], "all");
    assert_eq!(v["witness"]["type"], "edge_set");
}

#[test]
fn components_of_k4_at_three() {
    let out = graphvar(&["components", "--gen", "complete:4", "-d", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["count"], 6);
    assert_eq!(v["exact"], true);
    assert_eq!(v["components"].as_array().unwrap().len(), 6);
}

#[test]
fn irreducible_range_of_c4() {
    let out = graphvar(&["irreducible", "--gen", "cycle:4", "--d-max", "6"]);
    let v = stdout_json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for row in rows {
        let d = row["d"].as_u64().unwrap();
        assert_eq!(row["irreducible"], d <= 3, "d = {d}");
    }
}

#[test]
fn gen_emits_colors_for_multipartite() {
    let out = graphvar(&["gen", "multipartite:2,2"]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 4);
    assert_eq!(v["colors"], serde_json::json!([0, 0, 1, 1]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);

    let out = graphvar(&["gen", "cycle:5"]);
    let v = stdout_json(&out);
    assert!(v.get("colors").is_none());
}

#[test]
fn girth_of_forest_is_infinity() {
    let out = graphvar(&["girth", "--gen", "path:4"]);
    assert_eq!(stdout_json(&out)["girth"], "infinity");
}

#[test]
fn inline_json_input() {
    let out = graphvar(&[
        "tutte",
        "--input",
        r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(
        v["terms"],
        serde_json::json!([[0, 1, "1"], [1, 0, "1"], [2, 0, "1"]])
    );
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join("graphvar-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k23.json");
    std::fs::write(&path, r#"{"n":5,"edges":[[0,2],[0,3],[0,4],[1,2],[1,3],[1,4]]}"#).unwrap();
    let out = graphvar(&["mcd", "--input", path.to_str().unwrap()]);
    assert_eq!(stdout_json(&out)["mcd"], 3);
}

#[test]
fn output_is_deterministic() {
    let a = graphvar(&["order", "--gen", "cycle:4", "-d", "3"]);
    let b = graphvar(&["order", "--gen", "cycle:4", "-d", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let a = graphvar(&["check", "onion"]);
    let b = graphvar(&["check", "onion"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn domain_errors_exit_one_with_json_object_and_empty_stdout() {
    let out = graphvar(&["poincare", "--input", r#"{"n":2,"edges":[]}"#, "-d", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = stderr_json(&out);
    assert_eq!(err["error"]["kind"], "hypothesis_violation");

    let out = graphvar(&["components", "--gen", "multipartite:2,2", "-d", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["error"]["kind"], "hypothesis_violation");
}

#[test]
fn usage_errors_exit_two() {
    // Unknown subcommand.
    let out = graphvar(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_json(&out);
    assert_eq!(err["error"]["kind"], "usage");

    // Missing required input group.
    let out = graphvar(&["mcd"]);
    assert_eq!(out.status.code(), Some(2));

    // Both input sources at once.
    let out = graphvar(&["mcd", "--gen", "cycle:3", "--input", "x.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_lowers_size_guards() {
    let out = Command::new(env!("CARGO_BIN_EXE_graphvar"))
        .args(["mcd", "--gen", "cycle:7", "--method", "brute"])
        .env("GRAPHVAR_MAX_EDGES", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["error"]["kind"], "size_limit");

    // It may lower but never raise: a value above the builtin leaves the
    // builtin limit in force.
    let out = Command::new(env!("CARGO_BIN_EXE_graphvar"))
        .args(["mcd", "--gen", "complete:8", "--method", "brute"])
        .env("GRAPHVAR_MAX_EDGES", "999")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_onion_passes() {
    let out = graphvar(&["check", "onion"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v[0]["suite"], "onion");
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn text_format_renders_polynomials() {
    let out = graphvar(&["tutte", "--gen", "cycle:4", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), "T(x, y) = x^3 + x^2 + x + y");
}

#[test]
fn rejects_colors_that_do_not_match_edges() {
    let out = graphvar(&[
        "components",
        "--input",
        r#"{"n":3,"edges":[[0,1],[1,2],[0,2]],"colors":[0,0,1]}"#,
        "-d",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["error"]["kind"], "invalid_input");
}
