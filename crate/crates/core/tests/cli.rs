//! Black-box tests of the command-line interface: output shapes, exit codes,
//! and the generate/analyze pipeline.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rough-lattice"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn analyze_renders_the_directed_example_as_a_two_by_three_grid() {
    let out = bin().arg("analyze").arg(fixture("directed3.json")).output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("universe size        3"), "{text}");
    assert!(text.contains("rough pairs          6"));
    assert!(text.contains("the rough pairs already form the completion"));
    assert!(text.contains("2 x 3"));
    assert!(text.contains("clinker  holds"));
}

#[test]
fn analyze_emits_machine_readable_reports() {
    let out = bin()
        .arg("analyze")
        .arg(fixture("covering4.json"))
        .args(["--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["completion_size"], 12);
    assert_eq!(doc["rough_pairs"], 12);
    assert_eq!(doc["completion_chain_product"], serde_json::json!([2, 2, 3]));
    assert_eq!(doc["relation"]["universe_size"], 4);
    let conditions = doc["conditions"].as_array().unwrap();
    assert!(conditions
        .iter()
        .all(|c| c["holds"].as_bool().unwrap()));
}

#[test]
fn dot_export_writes_a_cover_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("completion.dot");
    let out = bin()
        .arg("analyze")
        .arg(fixture("directed3.json"))
        .arg("--dot")
        .arg(&dot_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("digraph completion {"), "{dot}");
    assert!(dot.contains(" -> "));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn generated_equivalences_analyze_as_equivalences() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("equivalence.json");
    let out = bin()
        .args(["generate", "--kind", "equivalence", "--size", "5", "--seed", "9"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let out = bin().arg("analyze").arg(&path).output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("relation class       equivalence"));
}

#[test]
fn analyze_reads_standard_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = bin()
        .args(["analyze", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let doc = std::fs::read(fixture("kernel4.json")).unwrap();
    child.stdin.take().unwrap().write_all(&doc).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("universe size        4"));
}

#[test]
fn verify_succeeds_on_the_exhaustive_prefix() {
    let out = bin()
        .args(["verify", "--n-max", "3", "--samples", "0", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["all_hold"], true);
    assert_eq!(doc["total_relations"], 69);
}

#[test]
fn verify_accepts_a_theorem_subset() {
    let out = bin()
        .args([
            "verify", "--n-max", "2", "--samples", "0", "--theorems", "T3,T6", "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["theorems"].as_array().unwrap().len(), 2);
}

#[test]
fn missing_inputs_exit_with_the_usage_code() {
    let out = bin().args(["analyze", "/no/such/file.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "not json").unwrap();
    let out = bin().arg("analyze").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn unknown_theorem_names_exit_with_the_usage_code() {
    let out = bin()
        .args(["verify", "--n-max", "2", "--samples", "0", "--theorems", "T42"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn caps_map_to_their_own_exit_code() {
    let out = bin()
        .arg("analyze")
        .arg(fixture("covering4.json"))
        .args(["--max-elements", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(stderr(&out).contains("exceeding the cap"));

    let out = bin()
        .arg("analyze")
        .arg(fixture("covering4.json"))
        .env("ROUGH_LATTICE_MAX_ELEMENTS", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}

#[test]
fn shrink_rejects_relations_that_do_not_fail() {
    let out = bin()
        .arg("shrink")
        .arg(fixture("directed3.json"))
        .args(["--theorem", "T1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nothing to minimize"));
}

#[test]
fn information_systems_induce_inclusion_relations() {
    let out = bin()
        .args(["generate", "--kind", "information-system", "--beta", "0.0"])
        .arg("--table")
        .arg(fixture("plants.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["universe_size"], 3);
    assert_eq!(
        doc["neighborhoods"],
        serde_json::json!([[0, 1], [1], [2]])
    );
}
