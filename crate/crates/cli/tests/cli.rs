use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bracketforge"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn generate_pretzel_emits_a_corpus_line() {
    let (code, out, _) = run(&["generate", "pretzel", "-c", "-2,3,7"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("# generated: pretzel P(-2,3,7)"));
    let entries = bracketforge_core::corpus::parse_corpus(&out).unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0].name, "P(-2,3,7)");
    assert_eq!(entries[0].diagram.crossing_count(), 12);
}

#[test]
fn generate_rejects_links() {
    let (code, _, err) = run(&["generate", "pretzel", "-c", "2,4"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
}

#[test]
fn generated_satellites_round_trip_through_audit() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sat.pd");
    let mut text = String::new();
    for args in [
        vec!["generate", "whitehead", "--companion", "3_1"],
        vec!["generate", "cable", "--companion", "3_1*", "-n", "2", "-m", "1"],
        vec!["generate", "rational", "-a", "2,2"],
    ] {
        let (code, out, _) = run(&args);
        assert_eq!(code, 0);
        text.push_str(&out);
    }
    std::fs::write(&file, text).unwrap();
    let f = file.to_str().unwrap();
    let (code, out, _) =
        run(&["audit", "--corpus", f, "--no-timestamp", "--no-cache", "--claims", "kauffman-murasugi,o-equals-u"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["records"], 3);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v.get("generated_unix").is_none());
}

#[test]
fn audit_is_deterministic_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("knots.pd");
    std::fs::write(
        &corpus,
        "3_1 : X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\n4_1 : X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)\n",
    )
    .unwrap();
    let c = corpus.to_str().unwrap();
    let args = ["audit", "--corpus", c, "--no-timestamp", "--format", "csv"];
    let (code1, first, _) = run(&args);
    assert!(dir.path().join("knots.pd.cache.jsonl").exists());
    let (code2, second, _) = run(&args);
    let (code3, third, _) =
        run(&["--jobs", "1", "audit", "--corpus", c, "--no-timestamp", "--format", "csv", "--no-cache"]);
    assert_eq!((code1, code2, code3), (0, 0, 0));
    assert_eq!(first, second);
    assert_eq!(first, third);
    assert_eq!(first.lines().next().unwrap(), bracketforge_core::harness::CSV_HEADER.join(","));
}

#[test]
fn audit_exits_nonzero_on_failure_and_report_rerenders() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("pretzel.json");
    let (code, _, _) = run(&[
        "audit",
        "--families-only",
        "--claims",
        "pretzel-span",
        "--no-timestamp",
        "--output",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let (code, text, _) = run(&["report", json.to_str().unwrap(), "--format", "text"]);
    assert_eq!(code, 1);
    assert!(text.lines().last().unwrap().contains(" fail"));
    let (code, again, _) = run(&["report", json.to_str().unwrap(), "--format", "json", "--no-timestamp"]);
    assert_eq!(code, 1);
    assert_eq!(again, std::fs::read_to_string(&json).unwrap());
}

#[test]
fn unknown_claim_is_rejected() {
    let (code, _, err) = run(&["audit", "--claims", "no-such-claim"]);
    assert_eq!(code, 2);
    assert!(err.contains("no-such-claim"));
}

#[test]
fn invariants_and_skeleton_emit_json() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("k.pd");
    let gen = run(&["generate", "pretzel", "-c", "3,-3,3"]).1;
    std::fs::write(&corpus, gen).unwrap();
    let c = corpus.to_str().unwrap();
    let (code, out, _) = run(&["invariants", "--corpus", c, "--no-cache"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["name"], "P(3,-3,3)");
    assert_eq!(v[0]["o_length"], 2);
    let dot = dir.path().join("dot");
    let (code, out, _) = run(&["skeleton", c, "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["edges"], 4);
    assert!(std::fs::read_to_string(dot.join("P(3,-3,3).dot")).unwrap().contains("graph skeleton"));
}
