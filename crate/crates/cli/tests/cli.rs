use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use treesym::AbgdExpr;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_treesym"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens/v1")
}

#[test]
fn goldens_are_bit_exact() {
    let bless = std::env::var_os("TREESYM_BLESS").is_some();
    let mut cases: Vec<PathBuf> = std::fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "args"))
        .collect();
    cases.sort();
    assert!(cases.len() >= 20);
    let mut mismatched = Vec::new();
    for case in cases {
        let args = std::fs::read_to_string(&case).unwrap();
        let args: Vec<&str> = args.split_whitespace().collect();
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{}: {}", case.display(), String::from_utf8_lossy(&out.stderr));
        let expected_path = case.with_extension("out");
        if bless {
            std::fs::write(&expected_path, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&expected_path).unwrap_or_default();
        if expected != out.stdout {
            mismatched.push(case.file_stem().unwrap().to_string_lossy().into_owned());
        }
    }
    assert!(mismatched.is_empty(), "golden mismatch: {mismatched:?}");
}

#[test]
fn b3_row_matches_reference_polynomial() {
    let out = stdout(&run(&["tables", "--target", "B", "--n", "3"]));
    let row = out.lines().find(|l| l.starts_with("B_3 = ")).unwrap();
    let got: AbgdExpr = row.trim_start_matches("B_3 = ").parse().unwrap();
    let want: AbgdExpr = "δ² + 4βδ + β² + 3α + 3γ".parse().unwrap();
    assert_eq!(got, want);
    for term in ["δ²", "4βδ", "β²", "3α", "3γ"] {
        assert!(row.contains(term), "{row}");
    }
}

#[test]
fn documented_examples() {
    assert!(stdout(&run(&["tables", "--target", "G", "--n", "1"])).contains("r_1"));
    assert!(stdout(&run(&["tables", "--target", "G", "--n", "2"])).contains("δ r_11 + β r_2"));
    assert_eq!(stdout(&run(&["expand", "--expr", "semiorder", "--n", "3", "--basis", "h"])), "h_3 + 2h_21 + 2h_111\n");
    assert_eq!(stdout(&run(&["expand", "--expr", "G", "--n", "1", "--basis", "m"])), "m_1\n");
    let uu = stdout(&run(&["expand", "--expr", "G_canopy", "--n", "3", "--canopy", "UU", "--basis", "r"]));
    assert_eq!(uu.matches("r_").count(), 4);
}

#[test]
fn verify_suites_exit_zero() {
    for (suite, n) in [("functional", "4"), ("bijection", "5"), ("positivity", "4"), ("gamma", "5"), ("arrangements", "4")] {
        let out = run(&["--format", "json", "verify", "--suite", suite, "--n", n]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["pass"], true);
        assert!(v["first_failure"].is_null());
        assert!(!v["checks"].as_array().unwrap().is_empty());
    }
    let pos = stdout(&run(&["verify", "--suite", "positivity", "--n", "4"]));
    assert!(pos.contains("G_4 = ") && pos.contains("s_"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["tables", "--target", "B", "--n", "7"],
        &["tables", "--target", "X", "--n", "3"],
        &["expand", "--expr", "G", "--n", "3", "--basis", "q"],
        &["expand", "--expr", "linial", "--n", "3", "--basis", "r"],
        &["expand", "--expr", "G_canopy", "--n", "3", "--canopy", "U"],
        &["verify", "--suite", "everything"],
        &["--max-degree", "0", "tables", "--target", "B", "--n", "1"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["--max-degree", "7", "tables", "--target", "B", "--n", "7"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "verify", "--suite", "bijection", "--n", "4", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--format", "json", "verify", "--suite", "bijection", "--n", "4", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let plain = run(&["expand", "--expr", "G", "--n", "4", "--basis", "s"]);
    let miss = run(&["--cache-dir", cache, "expand", "--expr", "G", "--n", "4", "--basis", "s"]);
    let hit = run(&["--cache-dir", cache, "expand", "--expr", "G", "--n", "4", "--basis", "s"]);
    assert_eq!(plain.stdout, miss.stdout);
    assert_eq!(miss.stdout, hit.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let json = run(&["--cache-dir", cache, "--format", "json", "expand", "--expr", "G", "--n", "4", "--basis", "s"]);
    assert_eq!(json.status.code(), Some(0));
    // Output format is not part of the key.
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    run(&["--cache-dir", cache, "expand", "--expr", "G", "--n", "3", "--basis", "s"]);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn cached_failure_maps_to_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["--cache-dir", cache, "gamma", "--n", "3"];
    assert_eq!(run(&args).status.code(), Some(0));
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let mut v: serde_json::Value = serde_json::from_slice(&std::fs::read(&entry).unwrap()).unwrap();
    v["pass"] = serde_json::Value::Bool(false);
    std::fs::write(&entry, v.to_string()).unwrap();
    assert_eq!(run(&args).status.code(), Some(1));
}
