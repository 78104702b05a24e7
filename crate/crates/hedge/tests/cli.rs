//! End-to-end runs of the command-line binary: exit codes, payload
//! shapes, corpus determinism, and the compute/verify round trip.

use std::process::{Command, Output};

fn hedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hedge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn corpus_is_deterministic_and_writes_files() {
    let a = hedge(&["corpus", "gnp", "10", "0.3", "--seed", "7"]);
    let b = hedge(&["corpus", "gnp", "10", "0.3", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "same seed must give identical bytes");
    let c = hedge(&["corpus", "gnp", "10", "0.3", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout, "different seed should change the graph");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w8.g6");
    let out = hedge(&["corpus", "wheel", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let piped = hedge(&["corpus", "wheel", "8"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&piped));

    // bad family parameters are configuration errors
    assert_eq!(hedge(&["corpus", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(hedge(&["corpus", "gnp", "5", "1.5"]).status.code(), Some(2));
}

#[test]
fn compute_reports_decision_and_witness() {
    let c5 = stdout(&hedge(&["corpus", "cycle", "5"]));
    let out = hedge(&[
        "compute", "--class", "bip", "--kind", "ed", "-k", "1", "--g6", c5.trim(), "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(payload["decision"], true);
    assert_eq!(payload["branch"], "brute-force");
    assert_eq!(payload["witness"]["x"][0], 0);
    assert_eq!(payload["witness"]["value"], 1);

    // a no instance still exits 0; the decision lives in the payload
    let k5 = stdout(&hedge(&["corpus", "clique", "5"]));
    let out = hedge(&[
        "compute", "--class", "bip", "--kind", "ed", "-k", "2", "--g6", k5.trim(), "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(payload["decision"], false);
    assert_eq!(payload["witness"], serde_json::Value::Null);

    // above the exact-solver cap: size-cap exit code
    let big = stdout(&hedge(&["corpus", "gnp", "30", "0.2", "--seed", "1"]));
    let out = hedge(&["compute", "--class", "bip", "--kind", "ed", "-k", "1", "--g6", big.trim()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compute_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("w8.g6");
    hedge(&["corpus", "wheel", "8", "--out", graph_path.to_str().unwrap()]);
    let out = hedge(&[
        "compute", "--class", "bip", "--kind", "tw", "-k", "1",
        graph_path.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();

    let witness_path = dir.path().join("witness.json");
    std::fs::write(&witness_path, payload["witness"].to_string()).unwrap();
    let out = hedge(&[
        "verify", "--class", "bip", "--witness", witness_path.to_str().unwrap(),
        graph_path.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(verdict["valid"], true);

    // tampering with the claimed value must be caught
    let mut tampered = payload["witness"].clone();
    tampered["value"] = serde_json::json!(99);
    std::fs::write(&witness_path, tampered.to_string()).unwrap();
    let out = hedge(&[
        "verify", "--class", "bip", "--witness", witness_path.to_str().unwrap(),
        graph_path.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(verdict["valid"], false);
    assert_eq!(verdict["witness_ok"], true);

    // a vertex outside the graph is a malformed report
    tampered["x"] = serde_json::json!([99]);
    std::fs::write(&witness_path, tampered.to_string()).unwrap();
    let out = hedge(&[
        "verify", "--class", "bip", "--witness", witness_path.to_str().unwrap(),
        graph_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_prints_reference_values() {
    let k4 = stdout(&hedge(&["corpus", "clique", "4"]));
    let out = hedge(&["oracle", "--class", "bip", "--g6", k4.trim()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ed=2, tw=1, cross-check:ok\n");

    let c4 = stdout(&hedge(&["corpus", "cycle", "4"]));
    let out = hedge(&["oracle", "--class", "bip", "--g6", c4.trim()]);
    assert_eq!(stdout(&out), "ed=0, tw=-1, cross-check:ok\n");

    let out = hedge(&["oracle", "--class", "triangle-free", "--g6", k4.trim(), "--format", "json"]);
    let payload: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(payload["ed"], 2);
    assert_eq!(payload["cross_check"], "ok");
}

#[test]
fn obstruction_file_class_and_dimacs_input() {
    let dir = tempfile::tempdir().unwrap();
    let obs_path = dir.path().join("triangles.g6");
    // K3 as the only obstruction, with a comment line
    std::fs::write(&obs_path, "# forbid triangles\nBw\n").unwrap();
    let class = format!("file:{}", obs_path.to_str().unwrap());

    let dimacs_path = dir.path().join("k4.col");
    std::fs::write(&dimacs_path, "c complete graph\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
        .unwrap();
    let out = hedge(&["oracle", "--class", &class, dimacs_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ed=2, tw=1, cross-check:ok\n");

    // unreadable obstruction file is a configuration error
    let out = hedge(&["oracle", "--class", "file:/no/such/file.g6", "--g6", "Bw"]);
    assert_eq!(out.status.code(), Some(2));
}
