//! End-to-end runs of the `tcheb` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn tcheb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcheb"))
        .args(args)
        .env_remove("TCHEB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Writes `text` to a file unique to this test process and `tag`.
fn file(tag: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("tcheb-cli-{}-{tag}.poset", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn generated(family: &str, n: &str) -> String {
    let o = tcheb(&["gen", "--family", family, "--n", n]);
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn index_in_every_basis() {
    let b3 = file("b3", &generated("boolean", "3"));
    let o = tcheb(&["index", b3.to_str().unwrap(), "--basis", "cd"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "1*cc + 1*d"));

    let c1 = file("c1", "cover 0 1\n");
    let o = tcheb(&["index", c1.to_str().unwrap(), "--basis", "ab"]);
    assert_eq!(stdout(&o).trim(), "1*1");

    let b2 = file("b2", &generated("boolean", "2"));
    let o = tcheb(&["index", b2.to_str().unwrap(), "--basis", "qsym"]);
    assert_eq!(stdout(&o).trim(), "1*M[2] + 2*M[1,1]");
    let o = tcheb(&["index", b2.to_str().unwrap(), "--basis", "bqsym"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("M[1]"));
}

#[test]
fn index_error_codes() {
    let chain2 = file("chain2", &generated("chain", "2"));
    let o = tcheb(&["index", chain2.to_str().unwrap(), "--basis", "cd"]);
    assert_eq!(o.status.code(), Some(3));

    let broken = file("broken", "cover 0 x\ncover x 1\ncover 0 1\n");
    let o = tcheb(&["index", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = tcheb(&["index", "/nonexistent/poset/file"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn transforms() {
    let o = tcheb(&["transform", "1*a"]);
    assert_eq!(stdout(&o).trim(), "1*a + 1*b");
    let o = tcheb(&["transform", "1*a", "--kind", "second"]);
    assert_eq!(stdout(&o).trim(), "3*a + 1*b");

    let b1 = file("b1", &generated("boolean", "1"));
    let o = tcheb(&["transform", b1.to_str().unwrap(), "--level", "poset"]);
    assert!(o.status.success());
    let segment = file("segment", &stdout(&o));
    let o = tcheb(&["index", segment.to_str().unwrap(), "--basis", "ab"]);
    assert_eq!(stdout(&o).trim(), "1*a + 1*b");

    let point = file("point", &generated("boolean", "0"));
    let o = tcheb(&["transform", point.to_str().unwrap(), "--level", "poset"]);
    assert_eq!(o.status.code(), Some(4));
    let o = tcheb(&["transform", b1.to_str().unwrap(), "--level", "poset", "--kind", "second"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tcheb(&["transform", "1*ax"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generated_families() {
    assert_eq!(generated("boolean", "2").lines().filter(|l| l.starts_with("elem")).count(), 4);
    let cross = file("cross2", &generated("crosspolytope", "2"));
    let o = tcheb(&["index", cross.to_str().unwrap(), "--basis", "cd"]);
    assert_eq!(stdout(&o).trim(), "1*cc + 2*d");
    assert_eq!(generated("crosspolytope", "2").lines().filter(|l| l.starts_with("elem")).count(), 10);

    let seeded = |seed: &str| stdout(&tcheb(&["gen", "--family", "random", "--n", "4", "--seed", seed]));
    assert_eq!(seeded("9"), seeded("9"));
    let from_env = Command::new(env!("CARGO_BIN_EXE_tcheb"))
        .args(["gen", "--family", "random", "--n", "4"])
        .env("TCHEB_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(stdout(&from_env), seeded("9"));
}

#[test]
fn verify_and_spectrum() {
    let o = tcheb(&["verify", "--check", "spectrum", "--max-rank", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = tcheb(&["verify", "--check", "no-such-check"]);
    assert_eq!(o.status.code(), Some(2));

    let o = tcheb(&["verify", "--check", "spectrum", "--json"]);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["check", "instance", "ms", "status", "witness"]);
        assert_eq!(v["status"], "pass");
    }

    let o = tcheb(&["spectrum", "--n", "3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["trace"], "54");

    let o = tcheb(&["checks"]);
    assert!(stdout(&o).lines().any(|l| l == "spectrum"));
}
