use std::path::PathBuf;
use std::process::{Command, Output};

fn cutnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutnum")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .display()
        .to_string()
}

fn error_code(out: &Output) -> String {
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"]["code"].as_str().unwrap().to_string()
}

#[test]
fn certify_writes_identical_json() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = cutnum(&[
            "harvey",
            "certify",
            "--m",
            "4",
            "--n",
            "1,1,1,1",
            "--json",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = std::fs::read(&a).unwrap();
    assert_eq!(text, std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&text).unwrap();
    let cert = &v["certificate"];
    assert_eq!(cert["params"]["N"], 1);
    assert_ne!(cert["detA1"], "0");
    assert!(cert["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert!(cert["conclusions"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["citation"].is_string()));
    assert!(cert["tool_version"].as_str().unwrap().starts_with("cutnum"));
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cutnum"))
        .args(["harvey", "f4", "--m", "3", "--n", "1,2,3", "--json", "f4.json"])
        .env("CUTNUM_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("f4.json")).unwrap()).unwrap();
    assert_eq!(v["kind"], "f4_obstruction");
    assert_eq!(v["nilpotent_module"]["annihilator_exponent"], 3);
}

#[test]
fn non_primitive_character_is_rejected() {
    let out = cutnum(&["harvey", "certify", "--m", "2", "--n", "2,2"]);
    assert_ne!(out.status.code(), Some(0));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_code(&out), "phi_not_primitive");
    assert!(out.stdout.is_empty());
}

#[test]
fn torus_rank_zero() {
    let out = cutnum(&["alex", "rank", "--pres", &data("torus.txt"), "--phi", "1,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("phi = (1,0,0): rank 0"));
}

#[test]
fn sampled_ranks_record_the_seed() {
    let out = cutnum(&[
        "alex",
        "rank",
        "--pres",
        &data("model_m2.txt"),
        "--sample",
        "4",
        "--seed",
        "3",
        "--json",
        "-",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["sample"]["kind"], "sampled");
    assert_eq!(v["sample"]["seed"], 3);
    assert!(v["ranks"].as_array().unwrap().iter().all(|r| r["alexander_rank"] == 0));
}

#[test]
fn inconsistent_character_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    std::fs::write(&path, "gens x y\nrel x y^-2\n").unwrap();
    let out = cutnum(&["alex", "rank", "--pres", path.to_str().unwrap(), "--phi", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_code(&out), "phi_inconsistent");
}

#[test]
fn malformed_presentation_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "gens x y\nrel [x,y\n").unwrap();
    let out = cutnum(&["alex", "rank", "--pres", path.to_str().unwrap(), "--phi", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_code(&out), "parse_error");
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(
        (v["error"]["line"].as_u64(), v["error"]["column"].as_u64()),
        (Some(2), Some(9))
    );
}

#[test]
fn four_generator_matrix_is_printed_symbolically() {
    let out = cutnum(&["harvey", "matrix", "--m", "4", "--N", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pairs: 12 13 14 23 24 34"));
    assert!(text.contains("[t^{n_1}-1          0          0  1-t^{n_3}  1-t^{n_4}          0]"));
}

#[test]
fn group_check_exit_codes() {
    assert_eq!(
        cutnum(&["group", "check", "--lhs", "[[x,y],[x,z]]", "--modulo", "metabelian"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        cutnum(&["group", "check", "--lhs", "[x,y]", "--modulo", "metabelian"])
            .status
            .code(),
        Some(2)
    );
    let out = cutnum(&[
        "group",
        "check",
        "--lhs",
        "x y",
        "--rhs",
        "y x",
        "--gens",
        "x,y",
        "--modulo",
        "nilpotent:1",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    let out = cutnum(&["harvey", "certify", "--m", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_code(&out), "usage");
    let out = cutnum(&["alex", "rank", "--pres", &data("torus.txt"), "--phi", "1,x"]);
    assert_eq!(error_code(&out), "usage");
}
