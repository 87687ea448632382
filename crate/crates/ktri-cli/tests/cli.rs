//! End-to-end tests against the compiled binary.

use std::process::{Command, Output};

fn ktri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn count_methods_agree_on_examples() {
    for (n, k, method, expected) in [
        ("5", "1", "det", "5"),
        ("8", "2", "enumerate", "84"),
        ("7", "3", "product", "1"),
        ("6", "1", "schubert", "14"),
        ("9", "2", "det", "594"),
    ] {
        let out = ktri(&["count", "--n", n, "--k", k, "--method", method]);
        assert!(out.status.success(), "{}", stderr(&out));
        assert_eq!(stdout(&out), format!("{expected}\n"), "{n} {k} {method}");
    }
}

#[test]
fn count_json_output() {
    let out = ktri(&[
        "count", "--n", "8", "--k", "2", "--method", "det", "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["n"], 8);
    assert_eq!(value["k"], 2);
    assert_eq!(value["method"], "det");
    assert_eq!(value["count"], "84");
}

#[test]
fn enumerate_is_sorted_and_deterministic() {
    let first = ktri(&["enumerate", "--n", "5", "--k", "1"]);
    let second = ktri(&["enumerate", "--n", "5", "--k", "1"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 5);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    assert!(lines.contains(&"1-3,1-4"));
}

#[test]
fn enumerate_json_counts() {
    let out = ktri(&["enumerate", "--n", "8", "--k", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["count"], 84);
    assert_eq!(value["triangulations"].as_array().unwrap().len(), 84);
}

#[test]
fn map_golden_example() {
    let out = ktri(&["map", "--n", "8", "--k", "2", "2-5,2-6,2-7,3-6,3-8,5-8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pipe dream: JJJ+JJ/JJ++J/+JJJ/+JJ/+J/J"));
    assert!(text.contains("word: 4,5,4,3,4,5"));
    assert!(text.contains("permutation: 1,2,6,5,4,3"));

    let out = ktri(&[
        "map",
        "--n",
        "8",
        "--k",
        "2",
        "2-5,2-6,2-7,3-6,3-8,5-8",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["word"], serde_json::json!([4, 5, 4, 3, 4, 5]));
    assert_eq!(value["permutation"], serde_json::json!([1, 2, 6, 5, 4, 3]));
    assert_eq!(
        value["pipe_dream"]["crosses"],
        serde_json::json!([[1, 4], [2, 3], [2, 4], [3, 1], [4, 1], [5, 1]])
    );
}

#[test]
fn map_empty_triangulation() {
    let out = ktri(&["map", "--n", "7", "--k", "3", ""]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("word: \n"), "{text}");
    assert!(text.contains("permutation: 1,2,3,4"));
}

#[test]
fn map_rejects_crossing_input() {
    let out = ktri(&["map", "--n", "5", "--k", "1", "1-3,2-4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("crossing"), "{}", stderr(&out));
}

#[test]
fn map_rejects_wrong_size() {
    let out = ktri(&["map", "--n", "5", "--k", "1", "1-3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("expected 2 diagonals"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn verify_all_passes_on_pentagon() {
    let out = ktri(&["verify", "--n", "5", "--k", "1", "--checks", "all"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    for name in [
        "counts",
        "bijection",
        "dimension",
        "stars",
        "sphere",
        "decomposable",
    ] {
        assert!(text.contains(&format!("check {name}: pass")), "{text}");
    }
    assert!(text.ends_with("result: pass\n"));
}

#[test]
fn verify_subset_of_checks() {
    let out = ktri(&[
        "verify",
        "--n",
        "8",
        "--k",
        "2",
        "--checks",
        "counts,bijection,stars",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("check ").count(), 3);
}

#[test]
fn verify_json_report() {
    let out = ktri(&["verify", "--n", "6", "--k", "2", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], true);
    assert_eq!(value["checks"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_rejects_bad_parameters() {
    let out = ktri(&["verify", "--n", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ktri(&["verify", "--n", "6", "--k", "2", "--checks", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guard_blocks_large_enumeration() {
    let out = ktri(&["count", "--n", "13", "--k", "6", "--method", "enumerate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("guard"), "{}", stderr(&out));
    let out = ktri(&[
        "count",
        "--n",
        "13",
        "--k",
        "6",
        "--method",
        "enumerate",
        "--limit",
        "13",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn formula_counts_have_no_guard() {
    let out = ktri(&["count", "--n", "30", "--k", "5", "--method", "det"]);
    assert!(out.status.success());
    let det = stdout(&out);
    let out = ktri(&["count", "--n", "30", "--k", "5", "--method", "product"]);
    assert_eq!(stdout(&out), det);
}

#[test]
fn schubert_for_explicit_permutation() {
    let out = ktri(&["schubert", "--perm", "1,4,3,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("value at 1: 5"));

    let out = ktri(&["schubert", "--n", "5", "--k", "1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["permutation"], serde_json::json!([1, 4, 3, 2]));
    assert_eq!(value["value_at_ones"], "5");
    assert_eq!(value["terms"].as_array().unwrap().len(), 5);
}

#[test]
fn schubert_requires_some_input() {
    let out = ktri(&["schubert"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_arguments_exit_2() {
    let out = ktri(&["count", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("ktri-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("count.json");
    let out = ktri(&[
        "count",
        "--n",
        "5",
        "--k",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.contains("\"count\":\"5\""));
    std::fs::remove_file(&path).ok();
}
