use std::process::Command;

use qsu2::cli::{run, EXIT_FAILURE, EXIT_INVALID, EXIT_OK, EXIT_RESOURCE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["qsu2"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn cached(args: &[&str], dir: &tempfile::TempDir) -> (i32, String, String) {
    let mut v = args.to_vec();
    v.extend_from_slice(&["--cache-dir", dir.path().to_str().unwrap()]);
    call(&v)
}

#[test]
fn ring_info() {
    let (code, out, _) = call(&["ring-info", "--p", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("degree               16"));
    assert!(out.contains("epsilon              +1"));
    let (_, out, _) = call(&["ring-info", "--p", "3", "--format", "machine"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["gauss_sum_valuation"], 1);
    assert_eq!(v["u"], 1);
    assert_eq!(call(&["ring-info", "--p", "4"]).0, EXIT_INVALID);
}

#[test]
fn invariant_unknot_two() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, err) = cached(&["invariant", "--input", "unknot", "--framings", "2", "--p", "3", "--format", "machine"], &dir);
    assert_eq!(code, EXIT_OK, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r["verdict"] == true));
    assert!(err.contains("computing theta"));
}

#[test]
fn invariant_borromean_counts_classes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = cached(&["invariant", "--input", "borromean", "--p", "3", "--route", "both", "--format", "machine"], &dir);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 8);
    let (code, out, _) = cached(&["invariant", "--input", "borromean", "--p", "3", "--theta", "1,3"], &dir);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("{1,3}"));
}

#[test]
fn invariant_rejects_hopf_and_bad_theta() {
    let (code, _, err) = call(&["invariant", "--input", "hopf", "--p", "3"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("not algebraically split"));
    let (code, _, _) = call(&["invariant", "--input", "unknot", "--framings", "3", "--p", "3"]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = call(&["invariant", "--input", "unknot", "--framings", "1", "--p", "3", "--theta", "1"]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = call(&["invariant", "--input", "nosuchlink", "--p", "3"]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = call(&["invariant", "--input", "unknot"]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn invariant_inline_document_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let doc = r#"{"pd": [[1,5,2,4],[3,1,4,6],[5,3,6,2]], "framings": [2], "p": 3}"#;
    let (code, out, _) = cached(&["invariant", "--input", doc, "--format", "machine"], &dir);
    assert_eq!(code, EXIT_OK);
    let path = dir.path().join("trefoil.json");
    std::fs::write(&path, doc).unwrap();
    let (code, out2, _) = cached(&["invariant", "--input", path.to_str().unwrap(), "--format", "machine"], &dir);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, out2);
    let (code, _, _) = call(&["invariant", "--input", r#"{"pd": [[1,1,2]]}"#, "--p", "3"]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn machine_output_is_deterministic_across_threads() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = ["invariant", "--input", "trefoil", "--framings", "2", "--p", "5", "--route", "km", "--format", "machine"];
    let mut one = args.to_vec();
    one.extend_from_slice(&["--threads", "1"]);
    let mut four = args.to_vec();
    four.extend_from_slice(&["--threads", "4"]);
    let (c1, o1, _) = cached(&one, &a);
    let (c4, o4, _) = cached(&four, &b);
    assert_eq!((c1, c4), (EXIT_OK, EXIT_OK));
    assert_eq!(o1, o4);
    // a warm cache gives the same bytes
    assert_eq!(cached(&one, &a).1, o1);
}

#[test]
fn width_limit_gives_resource_exit() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) =
        cached(&["invariant", "--input", "trefoil", "--framings", "1", "--p", "5", "--width-limit", "6"], &dir);
    assert_eq!(code, EXIT_RESOURCE);
    assert!(err.contains("exceeds the limit 6"));
}

#[test]
fn verify_suite_and_negative_control() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, err) = cached(&["verify", "--p", "3"], &dir);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains(", 0 failed"));
    let (code, out, _) = cached(&["verify", "--p", "3", "--bound-offset", "1"], &dir);
    assert_eq!(code, EXIT_FAILURE);
    assert!(out.contains("FAIL"));
}

#[test]
fn bracket_command() {
    let (code, out, _) = call(&["bracket", "--input", "unknot"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "1"));
    let (_, out, _) = call(&["bracket", "--input", "hopf"]);
    assert_eq!(out.trim(), "-A^4 - A^-4");
    let (code, _, _) = call(&["bracket", "--input", "{\"pd\": [[1,2,3,4]]}"]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn catalog_listing() {
    let (code, out, _) = call(&["catalog"]);
    assert_eq!(code, EXIT_OK);
    for name in ["unknot", "hopf", "trefoil", "figure8", "whitehead", "borromean"] {
        assert!(out.contains(name), "{name}");
    }
    let (_, out, _) = call(&["catalog", "--format", "machine"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let hopf = v.as_array().unwrap().iter().find(|e| e["name"] == "hopf").unwrap();
    assert_eq!(hopf["split"], false);
}

#[test]
fn cache_dir_flag_wins_over_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_qsu2");
    let status = Command::new(bin)
        .args(["bracket", "--input", "trefoil"])
        .env("QSU2_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    assert_eq!(std::fs::read_dir(env_dir.path()).unwrap().count(), 1);
    let status = Command::new(bin)
        .args(["bracket", "--input", "figure8", "--cache-dir", flag_dir.path().to_str().unwrap()])
        .env("QSU2_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    assert_eq!(std::fs::read_dir(env_dir.path()).unwrap().count(), 1);
    assert_eq!(std::fs::read_dir(flag_dir.path()).unwrap().count(), 1);
}

#[test]
fn default_cache_dir_is_relative() {
    let cwd = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_qsu2"))
        .args(["bracket", "--input", "trefoil"])
        .env_remove("QSU2_CACHE_DIR")
        .current_dir(cwd.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(cwd.path().join(".bracket-cache").is_dir());
}
