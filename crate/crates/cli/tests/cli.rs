use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gradsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn emit_check_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let emitted = gradsym(&["emit", "--constructor", "cyclic_algebra", "--param", "p=3"]);
    assert_eq!(emitted.status.code(), Some(0));
    let spec = write(
        dir.path(),
        "cyclic3.json",
        std::str::from_utf8(&emitted.stdout).unwrap(),
    );
    assert_eq!(stdout_json(&emitted)["dim"], 9);

    let again = gradsym(&["emit", "--constructor", "cyclic_algebra", "--param", "p=3"]);
    assert_eq!(again.stdout, emitted.stdout);

    let cert = dir.path().join("cert.json");
    let checked = gradsym(&[
        "check",
        &spec,
        "--mode",
        "graded-symmetric",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(checked.status.code(), Some(0));
    assert_eq!(stdout_json(&checked)["status"], "yes");

    let verified = gradsym(&["verify", &spec, cert.to_str().unwrap()]);
    assert_eq!(verified.status.code(), Some(0));
    assert_eq!(stdout_json(&verified)["passed"], true);
}

#[test]
fn certificate_for_another_algebra_fails() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        r#"{"constructor":"group_algebra","field":{"char":3},"group":{"kind":"cyclic","n":3}}"#,
    );
    let b = write(
        dir.path(),
        "b.json",
        r#"{"constructor":"group_algebra","field":{"char":3},"group":{"kind":"cyclic","n":2}}"#,
    );
    let cert = dir.path().join("cert.json");
    assert_eq!(
        gradsym(&["check", &a, "--out", cert.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let o = gradsym(&["verify", &b, cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["hash_matches"], false);
}

#[test]
fn refutation_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "z.json",
        r#"{"constructor":"center","of":{"constructor":"trivial_extension","of":{"constructor":"sweedler_algebra","field":{"char":5}}}}"#,
    );
    let o = gradsym(&["check", &spec, "--mode", "frobenius"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["refutation"], "gram-det-identically-zero");
}

#[test]
fn parse_and_validation_errors_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", "{\"dim\": ");
    let o = gradsym(&["check", &broken]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));

    let bad_grading = write(
        dir.path(),
        "grading.json",
        r#"{"field":{"char":2},"group":{"kind":"cyclic","n":2},"dim":2,"degrees":[0,1],"unit":[1,0],
            "sc":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,1,1]]}"#,
    );
    let o = gradsym(&["invariants", &bad_grading]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(1, 1, 1)"));

    assert_eq!(
        gradsym(&["check", &broken, "--mode", "nonsense"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(gradsym(&["replicate"]).status.code(), Some(3));
    assert_eq!(
        gradsym(&["replicate", "--name", "no-such-criterion"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn invariants_report() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "h.json",
        r#"{"constructor":"quaternion_algebra","field":{"char":0},"a":"-1/1","b":"-1/1"}"#,
    );
    let o = gradsym(&["invariants", &spec]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["center"]["dim"], 1);
    assert_eq!(v["graded_division"]["status"], "yes");
    assert_eq!(v["support"].as_array().unwrap().len(), 4);
}

#[test]
fn hunt_checkpoint_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let cp = cp.to_str().unwrap();
    let first = gradsym(&[
        "hunt",
        "--char",
        "2",
        "--max-group",
        "2",
        "--max-ext",
        "2",
        "--budget",
        "3",
        "--checkpoint",
        cp,
    ]);
    assert_eq!(first.status.code(), Some(2));
    assert_eq!(stdout_json(&first)["budget_exhausted"], true);
    let rest = gradsym(&["hunt", "--resume", cp, "--budget", "100"]);
    assert_eq!(rest.status.code(), Some(0));
    let full = gradsym(&[
        "hunt",
        "--char",
        "2",
        "--max-group",
        "2",
        "--max-ext",
        "2",
        "--budget",
        "100",
    ]);
    let (mut a, mut b) = (stdout_json(&rest), stdout_json(&full));
    a["parameters"]["budget"] = Value::Null;
    b["parameters"]["budget"] = Value::Null;
    assert_eq!(a, b);

    let mut tampered: Value = serde_json::from_str(&std::fs::read_to_string(cp).unwrap()).unwrap();
    tampered["report"]["next_index"] = Value::from("0");
    let bad = write(dir.path(), "bad.json", &tampered.to_string());
    assert_eq!(gradsym(&["hunt", "--resume", &bad]).status.code(), Some(3));
}

#[test]
fn replicate_one_criterion() {
    let o = gradsym(&["replicate", "--name", "matrix-commutators"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["passed"], 1);
    assert_eq!(v["criteria"][0]["outcome"], "pass");
}
