use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn updown(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_updown"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = updown(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn act_example() {
    assert_eq!(
        stdout_of(&["act", "--word", "d3 u2", "--partition", "3,1"]),
        "2,2\n"
    );
    assert_eq!(
        stdout_of(&["act", "--word", "d1 d3 u2", "--partition", "3,1"]),
        "0\n"
    );
    let json: Value = serde_json::from_str(&stdout_of(&[
        "act",
        "--word",
        "u1",
        "--partition",
        "",
        "--json",
    ]))
    .unwrap();
    assert_eq!(json["result"], "1");
}

#[test]
fn fingerprint_text_and_json() {
    let w = "u1 u1 d3 d3 d2 u3 u2 d1 u2 u1";
    assert_eq!(
        stdout_of(&["fingerprint", "--word", w]),
        "w: {1: 2, 2: 1, 3: -1}; alpha: {1: 2, 3: 1}\n"
    );
    let json: Value =
        serde_json::from_str(&stdout_of(&["fingerprint", "--word", w, "--json"])).unwrap();
    assert_eq!(json["alpha"]["1"], 2);
    assert_eq!(json["weight"]["3"], -1);
}

#[test]
fn equiv_exit_codes() {
    let (code, out, _) = updown(&["equiv", "--x", "d2 u2", "--y", "u1 d1"]);
    assert_eq!((code, out.as_str()), (0, "equivalent\n"));
    let (code, out, _) = updown(&["equiv", "--x", "u1", "--y", "u2"]);
    assert_eq!((code, out.as_str()), (1, "not-equivalent\n"));
}

#[test]
fn parse_errors_exit_2() {
    let (code, _, err) = updown(&["equiv", "--x", "u1 q2", "--y", "u1"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 1"), "{err}");
    assert_eq!(updown(&["act", "--word", "u1", "--partition", "1,3"]).0, 2);
    assert_eq!(updown(&["bogus"]).0, 2);
    assert_eq!(
        updown(&["chain", "--t", "2", "--rho", "1", "--word", "u2"]).0,
        2
    );
    assert_eq!(updown(&["graph", "--t", "2", "--word", "u3"]).0, 2);
}

fn write_and_verify(dir: &Path, args: &[&str]) -> String {
    let path = dir.join("trace.json");
    let p = path.to_str().unwrap();
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--trace", p]);
    stdout_of(&full);
    assert_eq!(
        stdout_of(&["verify-trace", "--file", p]).split(':').next(),
        Some("ok")
    );
    fs::read_to_string(&path).unwrap()
}

#[test]
fn normalize_certificate_verifies_in_a_separate_process() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout_of(&["normalize", "--word", "d2 u2"]), "u1 d1\n");
    for w in ["d2 u2", "u1 d2 u3 d1", "d1 d2 u1", ""] {
        let text = write_and_verify(dir.path(), &["normalize", "--word", w]);
        let json: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(json["start"], w);
    }
}

#[test]
fn certify_agrees_with_equiv_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    for (x, y) in [
        ("u1 u3", "u3 u1"),
        ("u1 u2 u1", "u2 u1 u1"),
        ("d2 u2", "u1 d1"),
        ("u1", "u2"),
        ("u2 u1", "u1 u2"),
        ("d1 u1", ""),
    ] {
        let equiv = updown(&["equiv", "--x", x, "--y", y]).0;
        let oracle = updown(&["oracle-check", "--x", x, "--y", y]).0;
        let certify = updown(&["certify", "--x", x, "--y", y, "--trace", p]).0;
        assert_eq!(equiv, oracle, "{x} / {y}");
        assert_eq!(equiv, certify, "{x} / {y}");
        if certify == 0 {
            assert_eq!(updown(&["verify-trace", "--file", p]).0, 0);
            fs::remove_file(&path).unwrap();
        }
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let p = path.to_str().unwrap();
    stdout_of(&[
        "certify", "--x", "u1 u2 u1", "--y", "u2 u1 u1", "--trace", p,
    ]);
    let mut json: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let steps = json["steps"].as_array_mut().unwrap();
    let k = steps.len() / 2;
    let pos = steps[k]["pos"].as_u64().unwrap();
    steps[k]["pos"] = Value::from(pos + 1);
    fs::write(&path, json.to_string()).unwrap();

    let (code, out, _) = updown(&["verify-trace", "--file", p]);
    assert_eq!(code, 1);
    assert!(out.contains(&format!("step {k}")), "{out}");

    // side condition
    fs::write(
        &path,
        r#"{"start": "u2 u3", "end": "u3 u2", "steps": [{"family": "COMM_UU", "i": 2, "j": 3, "pos": 0, "dir": "F"}]}"#,
    )
    .unwrap();
    let (code, out, _) = updown(&["verify-trace", "--file", p]);
    assert_eq!(code, 1);
    assert!(out.contains("step 0"), "{out}");

    // unknown field and garbage are format errors
    fs::write(
        &path,
        r#"{"start": "", "end": "", "steps": [], "extra": 1}"#,
    )
    .unwrap();
    assert_eq!(updown(&["verify-trace", "--file", p]).0, 2);
    fs::write(&path, "not json").unwrap();
    assert_eq!(updown(&["verify-trace", "--file", p]).0, 2);
}

#[test]
fn chain_and_graph() {
    let chain = |args: &[&str]| {
        let mut full = vec!["chain", "--t", "2"];
        full.extend_from_slice(args);
        updown(&full)
    };
    assert_eq!(
        chain(&["--rho", "1", "--word", "u2 u2", "--pos", "0"]).1,
        "0\n"
    );
    assert_eq!(
        chain(&["--rho", "2", "--word", "d2 u2", "--pos", "0"]).1,
        "pos=0\n"
    );
    assert_eq!(
        chain(&["--rho", "3", "--word", "u2 u2 u2 u2", "--annihilates"]),
        (0, "yes\n".into(), String::new())
    );
    assert_eq!(
        chain(&["--rho", "3", "--word", "u2 u2 u2", "--annihilates"]).0,
        1
    );

    let out = stdout_of(&["graph", "--t", "2", "--word", "u2 u2 d2 d2 d2 d2 u2 u2 u2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.contains(&"(-3, 3)"));
    assert!(lines.contains(&"(-7, -1)"));
    assert_eq!(lines[9], "(-9, 1)");
    assert_eq!(
        lines[10],
        "peak=3 valley=-1 endpoint=1 alpha[t-1]=3 alpha[t]=1 w[t]=1"
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["normalize", "--word", "u3 d1 u2", "--json"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}
