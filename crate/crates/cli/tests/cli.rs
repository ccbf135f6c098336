use std::process::{Command, Output};

use serde_json::Value;

fn exnil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exnil")).args(args).output().expect("spawn exnil")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn schubert_text() {
    let o = exnil(&["schubert", "--n", "3", "--perm", "s1 s2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x1*x2");
    let o = exnil(&["dual-schubert", "--n", "3", "--images", "1,2,3"]);
    assert_eq!(stdout(&o).trim(), "-x2*x3^2");
}

#[test]
fn schubert_json() {
    let o = exnil(&["--format", "json", "schubert", "--n", "3", "--perm", "s2 s1"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nvars"], 3);
    assert_eq!(v["terms"][0]["exponents"], serde_json::json!([2, 0, 0]));
    assert_eq!(v["terms"][0]["num"], "1");
}

#[test]
fn grassmannian_cohomology() {
    let o = exnil(&["cohomology", "--n", "2", "--N", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("poincare: 1 + q^2 + q^4"), "{}", out);
    assert!(out.contains("matches reference: true"));
}

#[test]
fn verify_suite_and_caps() {
    let o = exnil(&["verify", "--suite", "relations", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("3/3 passed"));
    assert_eq!(exnil(&["verify", "--suite", "relations", "--max-n", "5"]).status.code(), Some(3));
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(exnil(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(exnil(&["member", "--n", "2", "--expr", "x1 +* 2"]).status.code(), Some(2));
    assert_eq!(exnil(&["cohomology", "--n", "2", "--N", "4", "--cap", "1"]).status.code(), Some(3));
    assert_eq!(exnil(&["--help"]).status.code(), Some(0));
}

#[test]
fn nh_json_round_trip() {
    let o = exnil(&["--format", "json", "nh-mul", "--n", "2", "w1", "d1", "x1"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("exnil-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("elem.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let back = exnil(&["diff", "--n", "2", "--N", "3", "--input", path.to_str().unwrap()]);
    let direct = exnil(&["diff", "--n", "2", "--N", "3", "--expr", "w1*d1*x1"]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(stdout(&back), stdout(&direct));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn member_agrees() {
    let o = exnil(&["member", "--n", "2", "--expr", "w1 - x2*w2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = exnil(&["--format", "json", "member", "--n", "2", "--expr", "x1"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kernel_test"], v["coefficient_test"]);
    assert_eq!(v["member"], false);
}

#[test]
fn verify_is_deterministic() {
    let a = exnil(&["verify", "--suite", "identities", "--seed", "11"]);
    let b = exnil(&["verify", "--suite", "identities", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
