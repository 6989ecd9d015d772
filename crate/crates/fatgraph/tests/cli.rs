//! End-to-end checks of the command-line interface: exit codes, output
//! determinism, JSON error shape, and piping between subcommands.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fatgraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write to stdin");
    child.wait_with_output().expect("binary exits")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "`{args:?}` failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("fatgraph-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("write temp file");
    path
}

#[test]
fn report_describes_constructed_graph() {
    let theta = stdout_of(&["construct", "theta"]);
    let path = temp_file("theta.json", &theta);
    let report = stdout_of(&["report", path.to_str().unwrap()]);
    assert!(report.contains("vertices"), "report names the vertex count");
    assert!(report.contains("boundary walks"), "report names the walks");

    let json = stdout_of(&["--json", "report", path.to_str().unwrap()]);
    let value: serde_json::Value = serde_json::from_str(&json).expect("report is JSON");
    for key in ["invariants", "walks", "curves", "filling"] {
        assert!(value.get(key).is_some(), "report JSON carries `{key}`");
    }
    std::fs::remove_file(path).ok();
}

#[test]
fn validate_accepts_every_construction() {
    for family in [
        vec!["construct", "theta"],
        vec!["construct", "theta-bar"],
        vec!["construct", "fig8"],
        vec!["construct", "gamma"],
        vec!["construct", "g2", "--k", "4"],
        vec!["construct", "g3", "--k", "2"],
        vec!["construct", "pair", "--genus", "3", "--k", "2"],
    ] {
        let graph = stdout_of(&family);
        let out = run_with_stdin(&["validate", "-"], &graph);
        assert!(
            out.status.success(),
            "{family:?} should validate: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn export_json_is_the_identity_on_canonical_files() {
    let graph = stdout_of(&["construct", "g2", "--k", "3"]);
    let path = temp_file("g2.json", &graph);
    let exported = stdout_of(&["export", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(graph, exported, "canonical JSON survives a round trip");
    std::fs::remove_file(path).ok();
}

#[test]
fn export_dot_draws_edges() {
    let graph = stdout_of(&["construct", "theta"]);
    let path = temp_file("theta-dot.json", &graph);
    let dot = stdout_of(&["export", path.to_str().unwrap(), "--format", "dot"]);
    assert!(dot.starts_with("graph"), "dot output opens a graph block");
    assert!(dot.contains("--"), "dot output draws undirected edges");
    std::fs::remove_file(path).ok();
}

#[test]
fn iso_reports_verdicts_without_failing() {
    let a = temp_file("iso-a.json", &stdout_of(&["construct", "theta"]));
    let b = temp_file("iso-b.json", &stdout_of(&["construct", "theta-bar"]));
    let plain = run(&["iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(plain.status.success(), "iso reports through stdout, not the exit code");
    assert_eq!(String::from_utf8_lossy(&plain.stdout).trim(), "not isomorphic");

    let same = run(&["iso", a.to_str().unwrap(), a.to_str().unwrap()]);
    assert!(same.status.success());
    assert_eq!(String::from_utf8_lossy(&same.stdout).trim(), "isomorphic");

    let canon_a = stdout_of(&["canon", a.to_str().unwrap()]);
    let canon_b = stdout_of(&["canon", b.to_str().unwrap()]);
    assert_ne!(canon_a, canon_b, "the two embeddings canonicalize differently");
    std::fs::remove_file(a).ok();
    std::fs::remove_file(b).ok();
}

#[test]
fn reflection_flag_equates_a_chiral_graph_with_its_mirror() {
    // A three-vertex map with no orientation-reversing symmetry, and the
    // same map with every rotation reversed.
    let chiral = temp_file(
        "chiral.json",
        r#"{ "edges": ["g1", "g2", "g3", "g4", "g5", "g6"],
             "vertices": [["g1+", "g1-", "g2+", "g3+"],
                          ["g2-", "g4+", "g5+", "g6-"],
                          ["g3-", "g4-", "g6+", "g5-"]] }"#,
    );
    let mirrored = temp_file(
        "mirrored.json",
        r#"{ "edges": ["g1", "g2", "g3", "g4", "g5", "g6"],
             "vertices": [["g3+", "g2+", "g1-", "g1+"],
                          ["g6-", "g5+", "g4+", "g2-"],
                          ["g5-", "g6+", "g4-", "g3-"]] }"#,
    );
    let plain = run(&["iso", chiral.to_str().unwrap(), mirrored.to_str().unwrap()]);
    assert!(plain.status.success());
    assert_eq!(String::from_utf8_lossy(&plain.stdout).trim(), "not isomorphic");

    let reflected = run(&[
        "iso",
        chiral.to_str().unwrap(),
        mirrored.to_str().unwrap(),
        "--reflection",
    ]);
    assert!(reflected.status.success());
    assert_eq!(String::from_utf8_lossy(&reflected.stdout).trim(), "isomorphic");
    std::fs::remove_file(chiral).ok();
    std::fs::remove_file(mirrored).ok();
}

#[test]
fn enumerate_output_is_deterministic() {
    let first = stdout_of(&["enumerate", "--vertices", "2"]);
    let second = stdout_of(&["enumerate", "--vertices", "2"]);
    assert_eq!(first, second);
    let parallel = stdout_of(&["enumerate", "--vertices", "2", "--jobs", "4"]);
    assert_eq!(first, parallel, "job count must not change the lines");

    let table = stdout_of(&["classify", "--vertices", "2"]);
    let again = stdout_of(&["classify", "--vertices", "2", "--jobs", "4"]);
    assert_eq!(table, again);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["enumerate"]);
    assert_eq!(out.status.code(), Some(2), "missing --vertices is a usage error");
    let out = run(&["construct", "g2"]);
    assert_eq!(out.status.code(), Some(2), "missing --k is a usage error");
}

#[test]
fn domain_errors_exit_one_with_structured_json() {
    let path = temp_file(
        "broken.json",
        r#"{ "edges": ["e", "f"], "vertices": [["e+", "e-", "f+"]] }"#,
    );
    let plain = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(plain.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&plain.stderr);
    assert!(
        stderr.starts_with("error[UnpairedDart]"),
        "diagnostic names the kind: {stderr}"
    );

    let json = run(&["--json", "validate", path.to_str().unwrap()]);
    assert_eq!(json.status.code(), Some(1));
    let value: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&json.stderr).trim())
            .expect("stderr is structured JSON");
    assert_eq!(value["error"]["kind"], "UnpairedDart");
    assert!(value["error"]["message"].is_string());
    std::fs::remove_file(path).ok();

    let missing = run(&["report", "/no/such/file.json"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn census_ceiling_is_configurable() {
    let out = bin()
        .env("FATGRAPH_ENUM_LIMIT", "2")
        .args(["--json", "enumerate", "--vertices", "3"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim())
            .expect("stderr is structured JSON");
    assert_eq!(value["error"]["kind"], "TooLarge");

    let out = bin()
        .env("FATGRAPH_ENUM_LIMIT", "3")
        .args(["enumerate", "--vertices", "3", "--curves", "4", "--boundaries", "1"])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "a raised ceiling admits the run");
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).lines().count(),
        1,
        "exactly one minimal four-curve class"
    );
}

#[test]
fn subcommands_read_stdin_dashes() {
    let pair = stdout_of(&["construct", "pair", "--genus", "2", "--k", "2"]);
    let report = run_with_stdin(&["--json", "report", "-"], &pair);
    assert!(report.status.success());
    let value: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&report.stdout).trim()).unwrap();
    assert_eq!(value["invariants"]["vertices"], 4);
    assert_eq!(value["invariants"]["genus"], 2);
}

#[test]
fn sum_splices_a_handle_onto_a_pair() {
    let pair = stdout_of(&["construct", "pair", "--genus", "2", "--k", "2"]);
    let path = temp_file("sum-input.json", &pair);
    let summed = stdout_of(&["sum", path.to_str().unwrap(), "--at", "0"]);
    let report = run_with_stdin(&["--json", "report", "-"], &summed);
    assert!(report.status.success());
    let value: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&report.stdout).trim()).unwrap();
    assert_eq!(value["invariants"]["vertices"], 8);
    assert_eq!(value["invariants"]["genus"], 4);
    assert_eq!(
        value["invariants"]["boundary_components"],
        serde_json::json!(2),
        "splicing preserves the two boundary walks"
    );
    std::fs::remove_file(path).ok();
}
