use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circbundle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn reduce_relator() {
    let o = run(&["reduce", "-g2", "-k3", "a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "trivial; z^3");
}

#[test]
fn reduce_empty_and_nontrivial() {
    assert_eq!(
        stdout(&run(&["reduce", "-g2", "-k3", ""])).trim(),
        "trivial; z^0"
    );
    let o = run(&["reduce", "-g2", "-k3", "a1"]);
    assert!(stdout(&o).starts_with("nontrivial"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn reduce_negative_euler_and_json() {
    let o = run(&[
        "reduce",
        "-g",
        "2",
        "-k",
        "-2",
        "--json",
        "a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2 z",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["trivial"], true);
    assert_eq!(v["z_exponent"], -1);
}

#[test]
fn reduce_exit_codes() {
    assert_eq!(
        run(&["reduce", "-g2", "-k1", "a1 x7"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["reduce", "-g2", "-k1", "a3"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "-g1", "-k0", "a1"]).status.code(), Some(3));
}

#[test]
fn info_reports_divisibility() {
    let o = run(&["info", "-g3", "-k4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2g-2 = 4 divides k = 4"));
    assert!(
        stdout(&run(&["info", "-g2", "-k1"])).contains("2g-2 = 2 does not divide 1: no splitting")
    );
    let o = run(&["info", "-g1", "-k0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(1, 0)"));
}

#[test]
fn verify_push_identity() {
    let o = run(&[
        "verify", "prop-3-3", "-g2", "-k1", "--trials", "100", "--seed", "7",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_splitting_genus_three() {
    let o = run(&["verify", "splitting", "-g3", "-k5", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_oracle() {
    let o = run(&[
        "verify",
        "word-problem-oracle",
        "-g2",
        "--max-word-len",
        "12",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_unknown_statement() {
    assert_eq!(run(&["verify", "prop-9-9"]).status.code(), Some(2));
}

#[test]
fn verify_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = run(&[
            "verify",
            "theorem-A",
            "-g2",
            "-k2",
            "--trials",
            "20",
            "--seed",
            "3",
            "--json",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let ta = fs::read(&a).unwrap();
    assert_eq!(ta, fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    for key in [
        "statement",
        "g",
        "k",
        "seed",
        "trials",
        "passed",
        "failed",
        "counterexamples",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["statement"], "theorem-A");
    assert_eq!(v["convention"], "left");
    assert_eq!(v["failed"], 0);
}

#[test]
fn every_statement_passes_small_runs() {
    for st in [
        "splitting",
        "kernel-tau",
        "cor-3-4",
        "k-linearity",
        "push-identity",
    ] {
        let o = run(&["verify", st, "-g2", "-k3", "--trials", "10"]);
        assert_eq!(o.status.code(), Some(0), "{st}: {}", stdout(&o));
    }
}

#[test]
fn push_and_apply_round_trip() {
    let o = run(&["push", "-g2", "a1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let endo = &v["push"];
    assert!(endo["a1"].is_string() && endo["b2"].is_string());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("endo.json");
    fs::write(
        &path,
        r#"{"a1": "A1 z", "b1": "B1", "a2": "A2", "b2": "B2", "z": "z"}"#,
    )
    .unwrap();
    let o = run(&[
        "apply",
        "-g2",
        "-k1",
        "--endo",
        path.to_str().unwrap(),
        "A1 A1 B1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let got = circbundle::BundleElement::parse(out.trim()).unwrap();
    let ctx = circbundle::BundleContext::new(2, 1).unwrap();
    assert!(ctx.elem_eq(
        &got,
        &circbundle::BundleElement::parse("A1 A1 B1 z z").unwrap()
    ));
}

#[test]
fn fixtures_check_passes_on_repo_corpus() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let o = run(&["fixtures", "--dir", dir, "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
