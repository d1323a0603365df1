use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn braidalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidalg"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Runs with `--json-out` and returns exit code and the parsed report.
fn with_json(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = Command::new(env!("CARGO_BIN_EXE_braidalg"))
        .args(args)
        .arg("--json-out")
        .arg(&out)
        .output()
        .unwrap();
    let doc = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    (o.status.code().unwrap(), doc)
}

#[test]
fn validate_builtin() {
    let o = braidalg(&["validate-r", "--builtin", "sl:2", "--show-minimal-poly"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("minimal polynomial: (x - q)(x + q^-1)"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn validate_flip_fixture() {
    let (code, doc) = with_json(&["validate-r", "--input", fixture("flip.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["minimal_poly_factored"], "(x - 1)(x + 1)");
    assert_eq!(doc["braid_equation"]["holds"], true);
}

#[test]
fn truncated_fixture_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("truncated.json");
    let full = std::fs::read_to_string(fixture("flip.json")).unwrap();
    std::fs::write(&path, &full[..full.len() / 2]).unwrap();
    let o = braidalg(&["validate-r", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fixture error"));
}

#[test]
fn non_braided_matrix_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"kind": "rmatrix", "dim": 2,
            "entries": [[1,1,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]}"#,
    )
    .unwrap();
    let (code, doc) = with_json(&["validate-r", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(doc["braid_equation"]["holds"], false);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(braidalg(&["validate-r"]).status.code(), Some(2));
    assert_eq!(
        braidalg(&["validate-r", "--builtin", "so:3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        braidalg(&["chi", "--builtin", "sl:2", "--poly", "x +"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(braidalg(&["chi", "--builtin", "sl:2"]).status.code(), Some(2));
    let sp4 = fixture("sp4.json");
    assert_eq!(
        braidalg(&["check", "--rep", sp4.to_str().unwrap(), "relations"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn chi_quantum_plane_relations() {
    let o = braidalg(&["chi", "--builtin", "sl:3", "--poly", "x - q", "--show-relations"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for rel in ["x_1x_2 = q x_2x_1", "x_1x_3 = q x_3x_1", "x_2x_3 = q x_3x_2"] {
        assert!(text.contains(rel), "{text}");
    }
    assert!(text.contains("relations: 3"));
}

#[test]
fn chi_exterior_hilbert() {
    let (code, doc) = with_json(&[
        "chi",
        "--builtin",
        "sl:2",
        "--poly",
        "x + q^-1",
        "--hilbert",
        "--max-degree",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["hilbert"]["dims"], serde_json::json!([1, 2, 1, 0, 0]));
}

#[test]
fn chi_invertible_poly_warns() {
    let (code, doc) = with_json(&["chi", "--builtin", "sl:2", "--poly", "x - q^5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["rank"], 4);
    let warnings = doc["warnings"].as_array().unwrap();
    assert!(warnings
        .iter()
        .any(|w| w.as_str().unwrap().contains("invertible")));
}

#[test]
fn chi_relations_fixture() {
    let (code, doc) = with_json(&[
        "chi",
        "--input",
        fixture("sp4.json").to_str().unwrap(),
        "--hilbert",
        "--max-degree",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["hilbert"]["dims"], serde_json::json!([1, 4, 10, 20, 35]));
    assert_eq!(doc["completion"]["confluent"], true);
}

#[test]
fn chi_adjoint_shows_printed_relations() {
    let o = braidalg(&[
        "chi",
        "--builtin",
        "adjoint:sl2",
        "--poly",
        "x + q^-2",
        "--show-relations",
        "--hilbert",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("x_2x_2 = (q - q^-3) x_3x_1"), "{text}");
    assert!(text.contains("as printed"));
    assert!(text.contains("hilbert: 1, 3, 3, 1"));
}

#[test]
fn check_builtin_passes() {
    let o = braidalg(&["check", "--rep", "sl:2", "relations", "admissible"]);
    assert_eq!(o.status.code(), Some(0));
    let o = braidalg(&["check", "--rep", "sl:2", "ideal", "--poly", "x - q"]);
    assert_eq!(o.status.code(), Some(0));
    let (code, doc) = with_json(&[
        "check",
        "--rep",
        fixture("sl2.json").to_str().unwrap(),
        "relations",
        "admissible",
        "ideal",
        "measuring",
        "antipode",
        "faithful",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["all_pass"], true);
    assert_eq!(doc["checks"]["measuring"]["exhaustive"], true);
}

#[test]
fn check_mutated_fails_with_residual() {
    let o = braidalg(&[
        "check",
        "--rep",
        fixture("mutated.json").to_str().unwrap(),
        "admissible",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("[FAIL] E_1"), "{text}");
    assert!(text.contains("residual"));
}

#[test]
fn check_admissible_needs_rmatrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let mut doc: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("sl2.json")).unwrap()).unwrap();
    doc.as_object_mut().unwrap().remove("rmatrix");
    std::fs::write(&path, doc.to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        braidalg(&["check", "--rep", p, "relations"]).status.code(),
        Some(0)
    );
    assert_eq!(
        braidalg(&["check", "--rep", p, "admissible"]).status.code(),
        Some(2)
    );
}

#[test]
fn frt_sl2() {
    let (code, doc) = with_json(&["frt", "--builtin", "sl:2", "--max-degree", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["frt"]["relation_count"], 6);
    assert_eq!(doc["frt"]["coideal"]["all_pass"], true);
    assert_eq!(doc["frt"]["hilbert"]["dims"], serde_json::json!([1, 4, 10, 20]));
}

#[test]
fn frt_pairing_reports_orientation() {
    let o = braidalg(&["frt", "--builtin", "sl:2", "--pair-with", "sl:2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("orientation: plain"), "{text}");
    assert!(text.contains("duality: pass"));
}

#[test]
fn frt_pairing_with_mutation_fails() {
    let o = braidalg(&[
        "frt",
        "--builtin",
        "sl:2",
        "--pair-with",
        fixture("mutated.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn frt_one_dimensional() {
    let o = braidalg(&["frt", "--input", fixture("n1.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("empty relation set"));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "check",
        "--rep",
        "sl:4",
        "measuring",
        "--samples",
        "20",
        "--seed",
        "11",
        "--max-degree",
        "5",
    ];
    let dir = tempfile::tempdir().unwrap();
    let read = |name: &str| {
        let out = dir.path().join(name);
        let o = Command::new(env!("CARGO_BIN_EXE_braidalg"))
            .args(args)
            .arg("--json-out")
            .arg(&out)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        std::fs::read(out).unwrap()
    };
    let (a, b) = (read("a.json"), read("b.json"));
    assert_eq!(a, b);
    let doc: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(doc["checks"]["measuring"]["exhaustive"], false);
}
