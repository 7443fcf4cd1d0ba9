use std::path::Path;
use std::process::Command;

fn run_with(args: &[&str], envs: &[(&str, &Path)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_brousseau"));
    cmd.args(args).env_remove("BROUSSEAU_CACHE_DIR");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with(args, &[])
}

fn stdout_ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn coeffs_examples() {
    let csv = stdout_ok(&["coeffs", "--max-k", "4", "--format", "csv"]);
    assert!(csv.starts_with("k,A,B\n"));
    assert!(csv.trim_end().ends_with("4,257,416"));
    assert_eq!(stdout_ok(&["coeffs", "--max-k", "0"]), "0,1,1\n");
    assert!(stdout_ok(&["coeffs", "--max-k", "5"]).lines().any(|l| l == "5,2671,4322"));
    let latex = stdout_ok(&["coeffs", "--max-k", "2", "--format", "latex"]);
    assert!(latex.contains("2 & 5 & 8 \\\\"));
}

#[test]
fn coeffs_json_schema() {
    let json = stdout_ok(&["coeffs", "--max-k", "25", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema_version"], 1);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 26);
    assert_eq!(rows[4], serde_json::json!({"k": 4, "A": "257", "B": "416"}));
    // Values beyond 64 bits stay exact as strings.
    assert_eq!(rows[25]["A"].as_str().unwrap().parse::<num_bigint::BigInt>().unwrap(),
        brousseau::CoeffTable::recursion(25).a()[25]);
}

#[test]
fn formula_examples() {
    assert_eq!(
        stdout_ok(&["formula", "--kind", "sum", "--power", "3", "--format", "latex"]).trim(),
        "(n^3-3n^2+15n-31)F_n + (n^3-6n^2+24n-50)F_{n+1} + 50"
    );
    assert_eq!(stdout_ok(&["formula", "--kind", "convolution", "--power", "0"]).trim(), "F_n + F_{n+1} - 1");
    assert_eq!(stdout_ok(&["formula", "--kind", "sum", "--power", "1"]).trim(), "(n-1)F_n + (n-2)F_{n+1} + 2");
    let json = stdout_ok(&["formula", "--kind", "convolution", "--power", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["free"], serde_json::json!(["-8", "-4", "-1"]));
    let csv = stdout_ok(&["formula", "--kind", "sum", "--power", "1", "--format", "csv"]);
    assert!(csv.contains("F_n,1,1\nF_n,0,-1\n"));
}

#[test]
fn oracle_examples() {
    assert_eq!(stdout_ok(&["oracle", "--kind", "sum", "--power", "3", "--n", "4"]), "255\n");
    assert_eq!(stdout_ok(&["oracle", "--kind", "convolution", "--power", "3", "--n", "0"]), "0\n");
    assert_eq!(stdout_ok(&["oracle", "--kind", "sum", "--power", "0", "--n", "10"]), "143\n");
    assert_eq!(run(&["oracle", "--kind", "sum", "--n", "4"]).0, 2);
}

#[test]
fn series_subcommand() {
    let out = stdout_ok(&["series", "--which", "b", "--max-k", "4", "--format", "csv"]);
    assert_eq!(out, "k,B\n0,1\n1,2\n2,8\n3,50\n4,416\n");
}

#[test]
fn verify_examples() {
    let (code, out, _) = run(&["verify", "--suite", "theorem3", "--max-p", "10", "--max-n", "200"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["verify", "--suite", "general", "--a", "3", "--b", "2", "--max-n", "40"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("a=3, b=2"));
    assert_eq!(run(&["verify", "--suite", "general", "--a", "3"]).0, 2);
    let (code, out, _) = run(&["verify", "--suite", "egf", "--max-k", "10", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "verified");
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn seeded_spot_checks_are_deterministic() {
    let args = ["verify", "--suite", "theorem2", "--max-p", "6", "--max-n", "30", "--seed", "42"];
    let a = stdout_ok(&args);
    assert!(a.contains("theorem2:sampled"));
    assert_eq!(a, stdout_ok(&args));
}

#[test]
fn conjecture_examples() {
    let out = stdout_ok(&["conjecture", "--max-k", "50", "--stride", "10"]);
    let progress: Vec<&str> = out.lines().filter(|l| l.starts_with("k <=")).collect();
    assert_eq!(progress, ["k <= 10: verified", "k <= 20: verified", "k <= 30: verified", "k <= 40: verified", "k <= 50: verified"]);
    assert_eq!(run(&["conjecture", "--max-k", "2"]).0, 0);
    assert_eq!(run(&["conjecture", "--max-k", "20", "--stride", "0"]).0, 2);
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = stdout_ok(&["coeffs", "--max-k", "15", "--format", "json"]);
    let miss = stdout_ok(&["coeffs", "--max-k", "15", "--format", "json", "--cache-dir", d]);
    let hit = stdout_ok(&["coeffs", "--max-k", "15", "--format", "json", "--cache-dir", d]);
    let smaller = stdout_ok(&["coeffs", "--max-k", "15", "--format", "json", "--cache-dir", d]);
    assert_eq!(plain, miss);
    assert_eq!(plain, hit);
    assert_eq!(plain, smaller);
    let cache: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("coeffs.json")).unwrap()).unwrap();
    assert_eq!(cache["schema_version"], 1);
    assert_eq!(cache["k_max"], 15);
    assert_eq!(cache["A"][3], "31");
}

#[test]
fn cache_dir_env_alias_and_flag_precedence() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run_with(&["coeffs", "--max-k", "6"], &[("BROUSSEAU_CACHE_DIR", env_dir.path())]);
    assert_eq!(code, 0);
    assert!(env_dir.path().join("coeffs.json").exists());

    let env_dir2 = tempfile::tempdir().unwrap();
    let (code, _, _) = run_with(
        &["coeffs", "--max-k", "6", "--cache-dir", flag_dir.path().to_str().unwrap()],
        &[("BROUSSEAU_CACHE_DIR", env_dir2.path())],
    );
    assert_eq!(code, 0);
    assert!(flag_dir.path().join("coeffs.json").exists());
    assert!(!env_dir2.path().join("coeffs.json").exists());
}

#[test]
fn corrupt_cache_prefix_is_replaced() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    stdout_ok(&["coeffs", "--max-k", "10", "--cache-dir", d]);
    let path = dir.path().join("coeffs.json");
    let text = std::fs::read_to_string(&path).unwrap().replacen("\"31\"", "\"32\"", 1);
    std::fs::write(&path, text).unwrap();
    let (code, out, err) = run(&["coeffs", "--max-k", "10", "--cache-dir", d]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "3,31,50"));
    assert!(err.contains("cache refreshed"));
    assert!(std::fs::read_to_string(&path).unwrap().contains("\"31\""));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("coeffs") && out.contains("conjecture"));
}

#[test]
fn in_process_entry_point_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = brousseau::cli::run(["brousseau", "coeffs", "--max-k", "3", "--format", "csv"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), stdout_ok(&["coeffs", "--max-k", "3", "--format", "csv"]));
}
