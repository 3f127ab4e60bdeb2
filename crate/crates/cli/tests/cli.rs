use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ocdom(args: &[&str], out_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ocdom"));
    cmd.args(args).env_remove("OCDOM_OUT_DIR");
    if let Some(dir) = out_dir {
        cmd.env("OCDOM_OUT_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_path() {
    let text = stdout(&ocdom(&["compute", "path:4", "--kind", "gamma-oc"], None));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["graph6"], "Ch");
    assert_eq!(v["certificates"][0]["value"], 2);
    assert_eq!(v["certificates"][0]["witness"], serde_json::json!([0, 3]));
}

#[test]
fn compute_reports_isolated_vertex_as_data() {
    let text = stdout(&ocdom(
        &["compute", "@", "--kind", "gamma-t", "--format", "jsonl"],
        None,
    ));
    let v: Value = serde_json::from_str(text.trim()).unwrap();
    assert!(v["error"].as_str().unwrap().contains("isolated"));
}

#[test]
fn product_formats() {
    let g6 = stdout(&ocdom(
        &[
            "product",
            "--kind",
            "lex",
            "--g",
            "complete:2",
            "--h",
            "complete:2",
            "--format",
            "graph6",
        ],
        None,
    ));
    assert_eq!(g6.trim(), "C~");
    let json = stdout(&ocdom(
        &["product", "--kind", "direct", "--orders", "2,2,2"],
        None,
    ));
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["size"], 4);
    assert_eq!(v["index_map"][7], serde_json::json!([1, 1, 1]));
    let dot = stdout(&ocdom(
        &[
            "product", "--kind", "corona", "--g", "K:1", "--h", "K:1", "--format", "dot",
        ],
        None,
    ));
    assert!(dot.contains("0 -- 1"));
}

#[test]
fn predict_corona() {
    let text = stdout(&ocdom(
        &[
            "predict",
            "--theorem",
            "corona",
            "--g",
            "path:2",
            "--h",
            "path:3",
        ],
        None,
    ));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["witness"], serde_json::json!([3, 6]));
    assert_eq!(v["relation"], "equality");
}

#[test]
fn predict_refuses_unmet_precondition() {
    let o = ocdom(
        &[
            "predict",
            "--theorem",
            "direct-diagonal",
            "--orders",
            "2,2,2",
        ],
        None,
    );
    assert!(!o.status.success());
}

#[test]
fn verify_discrepancy_exits_zero() {
    let text = stdout(&ocdom(
        &[
            "verify", "--check", "thm5", "--graph", "K:1", "--graph", "star:4",
        ],
        None,
    ));
    let v: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["verdict"], "discrepancy");
    assert_eq!(v["class"], "implicit-precondition");
}

#[test]
fn verify_corpus_persists_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify",
        "--check",
        "thm1-bound,thm5",
        "--corpus",
        "exhaustive:3",
    ];
    let first: Value = serde_json::from_str(&stdout(&ocdom(&args, Some(dir.path())))).unwrap();
    assert_eq!(first["records"], 6 + 36);
    let records = std::fs::read(dir.path().join("records.jsonl")).unwrap();
    let second: Value = serde_json::from_str(&stdout(&ocdom(&args, Some(dir.path())))).unwrap();
    assert_eq!(second["resumed"], 42);
    assert_eq!(
        std::fs::read(dir.path().join("records.jsonl")).unwrap(),
        records
    );
}

#[test]
fn corpus_listing() {
    let text = stdout(&ocdom(&["corpus", "exhaustive:3"], None));
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        ["@", "A_", "Bo", "Bg", "BW", "Bw"]
    );
    let text = stdout(&ocdom(
        &[
            "corpus",
            "exhaustive:4",
            "--min-order",
            "4",
            "--format",
            "jsonl",
        ],
        None,
    ));
    assert_eq!(text.lines().count(), 38);
}

#[test]
fn bad_input_fails() {
    assert!(!ocdom(&["compute", "not-a-graph"], None).status.success());
    assert!(
        !ocdom(&["verify", "--check", "nope", "--graph", "K:2"], None)
            .status
            .success()
    );
}
