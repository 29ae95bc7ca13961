use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_noncomm"));
    cmd.env_remove("NONCOMM_SEED");
    cmd
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

#[test]
fn suite_report_is_reproducible() {
    let args = ["suite", "--suite", "bn-invariants", "--n", "2", "--seed", "1", "--trials", "20", "--format", "json"];
    let a = run(bin().args(args));
    let b = run(bin().args(args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["suite"], "bn-invariants");
    assert_eq!(report["passed"], true);
}

#[test]
fn text_report_lines() {
    let out = run(bin().args(["suite", "--suite", "idempotents", "--n", "3"]));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "CHECK projectors m=3 PASS\n");
}

#[test]
fn seed_variable_overrides_flag() {
    let args = ["suite", "--suite", "weyl-involutions", "--n", "1", "--trials", "3", "--format", "json"];
    let with_env = run(bin().args(args).args(["--seed", "5"]).env("NONCOMM_SEED", "9"));
    let with_flag = run(bin().args(args).args(["--seed", "9"]));
    assert_eq!(with_env.stdout, with_flag.stdout);
    let bad = run(bin().args(args).env("NONCOMM_SEED", "many"));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(bin().args(["suite", "--suite", "unknown"])).status.code(), Some(2));
    assert_eq!(run(bin().args(["suite", "--suite", "dn-invariants", "--n", "7"])).status.code(), Some(2));
    assert_eq!(run(bin().args(["suite"])).status.code(), Some(2));
    let malformed = run(bin().args(["decompose", "--group", "B2"]).arg("--input").arg(data("malformed.json")));
    assert_eq!(malformed.status.code(), Some(2));
    let wrong_rank = run(bin().args(["decompose", "--group", "B3"]).arg("--input").arg(data("constant_input.json")));
    assert_eq!(wrong_rank.status.code(), Some(2));
}

#[test]
fn non_invariant_input_exits_one() {
    let out = run(bin().args(["decompose", "--group", "B2"]).arg("--input").arg(data("not_invariant.json")));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offending monomial"));
}

#[test]
fn shipped_examples_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (group, stem) in [("B2", "b2_minus"), ("B2", "constant"), ("D2", "d2")] {
        let out_path = dir.path().join(format!("{stem}.json"));
        let out = run(bin()
            .args(["decompose", "--group", group, "--sign", "minus"])
            .arg("--input")
            .arg(data(&format!("{stem}_input.json")))
            .arg("--output")
            .arg(&out_path));
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert!(String::from_utf8_lossy(&out.stdout).starts_with("CERTIFICATE"));
        let expected = std::fs::read(data(&format!("{stem}_expected.json"))).unwrap();
        assert_eq!(std::fs::read(&out_path).unwrap(), expected, "{stem}");

        let back = run(bin().arg("expand").arg("--input").arg(data(&format!("{stem}_expected.json"))));
        assert_eq!(back.status.code(), Some(0));
        let input = std::fs::read(data(&format!("{stem}_input.json"))).unwrap();
        assert_eq!(back.stdout, input, "{stem}");
    }
}

#[test]
fn decompose_text_output() {
    let out = run(bin()
        .args(["decompose", "--group", "B", "--n", "2", "--format", "text"])
        .arg("--input")
        .arg(data("b2_minus_input.json")));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "s1^2 - 2*s2 + 4\n");
}

#[test]
fn reynolds_command() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("x1.json");
    std::fs::write(&input, r#"{"nvars":2,"terms":[{"exp":[1,0],"coef":"1"}]}"#).unwrap();
    let out = run(bin()
        .args(["reynolds", "--group", "B2", "--variant", "torus-minus", "--format", "text"])
        .arg("--input")
        .arg(&input));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1/4*x1 + 1/4*x2 - 1/4*x2^-1 - 1/4*x1^-1\n"
    );
}
