use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookspecht")).args(args).env("NO_COLOR", "1").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/../hookspecht/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn grdim_examples() {
    let g = |k: &str, n: &str, m: &str| stdout(&["grdim", "--e", "3", "--kappa", k, "--n", n, "--m", m]);
    assert_eq!(g("0,0", "5", "4"), "2v^3+v^2+2v  EQUAL\n");
    assert_eq!(g("0,1", "4", "2"), "2v+2+2v^-1  EQUAL\n");
    assert_eq!(g("0,0", "5", "0"), "1  EQUAL\n");
}

#[test]
fn grdim_subset_json() {
    let out = stdout(&[
        "grdim",
        "--e",
        "3",
        "--kappa",
        "0,2",
        "--n",
        "6",
        "--m",
        "3",
        "--constraint",
        "1-in-leg+n-at-foot",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["poly"], "v^3+2v^2+v");
    assert_eq!(v["shape"], "((3),(1^3))");
    assert_eq!(v["constraint"], "1-in-leg+n-at-foot");
    assert_eq!(v["schema"], 1);
}

#[test]
fn matrix_json_matches_golden() {
    let out = stdout(&["matrix", "--e", "3", "--kappa", "0,2", "--n", "6", "--format", "json"]);
    assert_eq!(out, golden("e3_k02_n6_graded.json") + "\n");
    let out = stdout(&["matrix", "--e", "3", "--kappa", "0,0", "--n", "6", "--format", "json", "--ungraded"]);
    assert_eq!(out, golden("e3_k00_n6_ungraded.json") + "\n");
}

#[test]
fn matrix_identity_band_and_trivial() {
    let out = stdout(&["matrix", "--e", "3", "--kappa", "0,0", "--n", "6", "--ungraded", "--format", "csv"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    for (m, row) in rows.iter().enumerate() {
        let mut cells: Vec<&str> = row.rsplit(',').take(7).collect();
        cells.reverse();
        let want: Vec<&str> = (0..7).map(|j| if j == m { "1" } else { "0" }).collect();
        assert_eq!(cells, want, "row {m}");
    }
    let out = stdout(&["matrix", "--e", "3", "--kappa", "0,0", "--n", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"], serde_json::json!([[{"0": 1}]]));
}

#[test]
fn matrix_out_file() {
    let path = std::env::temp_dir().join(format!("hookspecht-cli-test-{}.tex", std::process::id()));
    let out = stdout(&[
        "matrix",
        "--e",
        "3",
        "--kappa",
        "0,0",
        "--n",
        "7",
        "--format",
        "tex",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.is_empty());
    let tex = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(tex.starts_with("\\begin{blockarray}"));
}

#[test]
fn labels_rows() {
    let out = stdout(&["labels", "--e", "3", "--kappa", "0,2", "--n", "6", "--m", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[1].starts_with("mu_{6,6}=((4,1^2),∅)  v^3  "), "{out}");
    assert!(lines[2].starts_with("mu_{6,7}=((4),(1^2))  v^2  "), "{out}");
    assert_eq!(lines.len(), 5);
    let out = stdout(&["labels", "--e", "3", "--kappa", "0,0", "--n", "7", "--m", "1"]);
    assert!(out.contains("mu_{7,0}=((7),∅)  v  "), "{out}");
    assert!(out.contains("mu_{7,1}=((6),(1))  1  "), "{out}");
    let out = stdout(&["labels", "--e", "3", "--kappa", "0,0", "--n", "5", "--m", "0"]);
    assert!(out.contains("trivial=((5),∅)  1  "), "{out}");
}

#[test]
fn labels_signature_inspection() {
    let out = stdout(&["labels", "--e", "3", "--kappa", "0,0", "--lambda", "((7,4,4),(4))", "--i", "0"]);
    assert!(out.contains("signature -++-  reduced -+  good (1,7,1)  cogood (2,5,1)"), "{out}");
}

#[test]
fn tableaux_listing() {
    let out = stdout(&["tableaux", "--e", "3", "--kappa", "0,0", "--n", "5", "--m", "4"]);
    let degs: Vec<&str> = out.lines().map(|l| l.rsplit(' ').next().unwrap()).collect();
    assert_eq!(degs, ["3", "1", "2", "3", "1"]);
}

#[test]
fn verify_small_range() {
    let out = stdout(&["verify", "--e", "3", "--max-n", "4"]);
    assert!(out.starts_with("PASS: ") && out.ends_with(" checks\n"), "{out}");
    assert_eq!(out, stdout(&["verify", "--e", "3", "--max-n", "4", "--sequential"]));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--e", "2", "--max-n", "3"][..],
        &["grdim", "--e", "2", "--kappa", "0,0", "--n", "1", "--m", "0"],
        &["grdim", "--e", "3", "--kappa", "0,0", "--n", "1", "--m", "3"],
        &["grdim", "--e", "3", "--kappa", "0", "--n", "1", "--m", "0"],
        &["grdim", "--e", "3", "--kappa", "0,0", "--n", "4", "--m", "4", "--constraint", "1-in-arm"],
        &["grdim", "--e", "3", "--kappa", "0,0", "--n", "4", "--m", "2", "--constraint", "elsewhere"],
        &["labels", "--e", "3", "--kappa", "0,0", "--lambda", "((2,3),∅)"],
        &["matrix", "--e", "3", "--kappa", "0,0"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["matrix", "--e", "4", "--kappa", "1,0", "--n", "9", "--format", "csv"];
    assert_eq!(stdout(&args), stdout(&args));
}
