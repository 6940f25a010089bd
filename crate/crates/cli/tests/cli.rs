use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn coorbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coorbit"))
        .args(args)
        .output()
        .expect("run coorbit")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

const H3: &str = r#"{"format_version": "1", "dim": 3, "basis": ["e0", "e1", "e2"],
  "brackets": [{"i": 1, "j": 2, "coeffs": {"0": "1"}}]}"#;

#[test]
fn validate_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("h3.json");
    fs::write(&good, H3).unwrap();
    let out = coorbit(&["validate", path_str(&good)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim 3"));

    let malformed = dir.path().join("bad.json");
    fs::write(&malformed, "{\"format_version\": \"1\", \"dim\": ").unwrap();
    let out = coorbit(&["validate", path_str(&malformed)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line"));

    let same_index = dir.path().join("ii.json");
    fs::write(&same_index, H3.replace("\"i\": 1", "\"i\": 2")).unwrap();
    assert_eq!(coorbit(&["validate", path_str(&same_index)]).status.code(), Some(1));

    let broken = dir.path().join("jacobi.json");
    fs::write(
        &broken,
        r#"{"format_version": "1", "dim": 3, "basis": ["a", "b", "c"], "brackets": [
            {"i": 0, "j": 1, "coeffs": {"1": "1"}},
            {"i": 0, "j": 2, "coeffs": {"2": "1"}},
            {"i": 1, "j": 2, "coeffs": {"0": "1"}}]}"#,
    )
    .unwrap();
    let out = coorbit(&["validate", path_str(&broken)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("(0, 1, 2)"));

    let missing = dir.path().join("missing.json");
    assert_eq!(coorbit(&["validate", path_str(&missing)]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(coorbit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        coorbit(&["analyze", "catalog:aff_real", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(coorbit(&[]).status.code(), Some(2));
    assert_eq!(coorbit(&["analyze", "catalog:nope"]).status.code(), Some(2));
    assert_eq!(
        coorbit(&["analyze", "catalog:exF", "--n", "3", "--theta", "1/2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        coorbit(&["analyze", "catalog:exF", "--theta", "1/2", "--theta-irrational", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        coorbit(&["analyze", "catalog:exF", "--theta", "one"]).status.code(),
        Some(2)
    );
    assert_eq!(coorbit(&["analyze", "catalog:exF"]).status.code(), Some(2));
    assert_eq!(
        coorbit(&["analyze", "catalog:aff_real", "--c", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn catalog_list_and_build() {
    let out = coorbit(&["catalog", "list"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).lines().collect::<Vec<_>>(),
        ["heisenberg", "aff_real", "aff_complex", "exF", "abelian_extension"]
    );

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h1.json");
    assert!(
        coorbit(&["catalog", "build", "heisenberg", "--n", "1", "-o", path_str(&file)])
            .status
            .success()
    );
    let text = fs::read_to_string(&file).unwrap();
    assert!(text.contains("\"format_version\": \"1\""));
    assert!(text.contains("\"0\": \"1\""));

    let matrix = dir.path().join("a.json");
    fs::write(&matrix, r#"[[0, 1], [-1, 0]]"#).unwrap();
    let ext = dir.path().join("ext.json");
    let out = coorbit(&[
        "catalog",
        "build",
        "abelian_extension",
        "--matrix",
        path_str(&matrix),
        "-o",
        path_str(&ext),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("dim 3"));
}

#[test]
fn save_to_unwritable_location_fails() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("no-such-dir").join("g.json");
    let out = coorbit(&["catalog", "build", "aff_real", "-o", path_str(&target)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("i/o error"));
}

#[test]
fn analyze_heisenberg() {
    let out = coorbit(&["analyze", "catalog:heisenberg", "--n", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("index: 1"));
    assert!(text.contains("nonconstant found up to degree 4: ξ0"));
    assert!(text.contains("overall: not_factor"));
}

#[test]
fn analyze_machine_format() {
    let out = coorbit(&[
        "analyze",
        "catalog:exF",
        "--n",
        "4",
        "--theta-irrational",
        "sqrt2",
        "--c",
        "1",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 10);
    assert_eq!(v["overall"], "frobenius_type_I");
    assert_eq!(v["casimir_verdict"]["kind"], "all_constant_up_to");
    assert_eq!(v["spectral"]["type1_obstruction"], true);
    assert_eq!(v["spectral"]["sa_generators"], serde_json::json!(["1", "sqrt2"]));
}

#[test]
fn analyze_from_file_matches_catalog_constants() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("aff.json");
    assert!(coorbit(&["catalog", "build", "aff_complex", "-o", path_str(&file)])
        .status
        .success());
    let from_file = coorbit(&["analyze", path_str(&file), "--format", "machine"]);
    let from_catalog = coorbit(&["analyze", "catalog:aff_complex", "--format", "machine"]);
    let a: serde_json::Value = serde_json::from_slice(&from_file.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&from_catalog.stdout).unwrap();
    assert_eq!(a["fingerprint"], b["fingerprint"]);
    assert_eq!(a["overall"], b["overall"]);
}

#[test]
fn casimir_command() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h3.json");
    fs::write(&file, H3).unwrap();
    let out = coorbit(&["casimir", path_str(&file), "--degree", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["polynomial Casimirs of degree <= 2: 2", "ξ0", "ξ0^2"]);
    assert_eq!(coorbit(&["casimir", path_str(&file)]).status.code(), Some(2));
}

#[test]
fn spectral_command() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a.json");
    fs::write(
        &file,
        r#"[[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, "1/2"], [0, 0, "-1/2", 0]]"#,
    )
    .unwrap();
    let out = coorbit(&["spectral", "--matrix", path_str(&file)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("characteristic polynomial: t^4 + 5/4*t^2 + 1/4"));
    assert!(text.contains("S_A generators: {1/2, 1}"));
    assert!(text.contains("S_A closedness: closed (exact)"));

    fs::write(&file, r#"[[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -2, 0]]"#).unwrap();
    let out = coorbit(&["spectral", "--matrix", path_str(&file), "--format", "machine"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["closedness"], "not_closed");
    assert_eq!(v["type1_obstruction"], true);

    fs::write(&file, r#"[[1, 2, 3]]"#).unwrap();
    assert_eq!(
        coorbit(&["spectral", "--matrix", path_str(&file)]).status.code(),
        Some(1)
    );
}
