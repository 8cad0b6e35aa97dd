use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn wigner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wigner"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn state_file(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn value(report: &str, key: &str) -> f64 {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("{key} missing in {report}"))
        .parse()
        .unwrap()
}

#[test]
fn entropy_of_vacuum() {
    let dir = TempDir::new().unwrap();
    let f = state_file(&dir, "vac.json", r#"{"fock_probs": [1.0]}"#);
    let out = wigner(&["entropy", &f, "--renyi", "2", "--renyi", "inf"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!((value(&text, "h(W)") - 2.144_729_885_849_4).abs() < 1e-9);
    assert!((value(&text, "h_2(W)") - (2.0 * std::f64::consts::PI).ln()).abs() < 1e-9);
    assert!((value(&text, "h_inf(W)") - std::f64::consts::PI.ln()).abs() < 1e-9);
    assert!(value(&text, "margin").abs() < 1e-9);
    assert_eq!(value(&text, "purity"), 1.0);
}

#[test]
fn entropy_of_sigma_one_zero() {
    let dir = TempDir::new().unwrap();
    let f = state_file(&dir, "s.json", r#"{"fock_probs": [0.5, 0.5]}"#);
    let out = wigner(&["entropy", &f]);
    assert_eq!(out.status.code(), Some(0));
    assert!((value(&stdout(&out), "h(W)") - 2.721_946).abs() < 1e-6);
}

#[test]
fn entropy_of_gaussian_file() {
    let dir = TempDir::new().unwrap();
    let f = state_file(
        &dir,
        "g.json",
        r#"{"gaussian": {"mean": [1.0, -2.0], "cov": [[1.5, 0.0], [0.0, 1.5]]}}"#,
    );
    let out = wigner(&["entropy", &f, "--renyi", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!((value(&text, "h(W)") - ((3.0 * std::f64::consts::PI).ln() + 1.0)).abs() < 1e-12);
    assert!((value(&text, "purity") - 1.0 / 3.0).abs() < 1e-14);
}

#[test]
fn entropy_csv_output() {
    let dir = TempDir::new().unwrap();
    let f = state_file(&dir, "vac.json", r#"{"fock_probs": [1.0]}"#);
    let csv = dir.path().join("out.csv");
    let out = wigner(&["entropy", &f, "--out", csv.to_str().unwrap(), "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# seed=7, tol=1e-10, version="));
    assert_eq!(lines[1], "quantity,value");
    assert!(lines[2].starts_with("h(W),2.144729885849"));
}

#[test]
fn negative_state_exits_with_three() {
    let dir = TempDir::new().unwrap();
    let f = state_file(&dir, "one.json", r#"{"fock_probs": [0, 1]}"#);
    let out = wigner(&["entropy", &f]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("min W = -3.183098862e-1"), "{err}");
    assert!(err.contains("r = 0.000000"), "{err}");
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    for body in ["{", r#"{"fock_probs": [0.3]}"#, "{}", r#"{"gaussian": {"mean": [0], "cov": [[1,0],[0,1]]}}"#] {
        let f = state_file(&dir, "bad.json", body);
        assert_eq!(wigner(&["entropy", &f]).status.code(), Some(2), "{body}");
    }
    let missing = dir.path().join("missing.json");
    assert_eq!(wigner(&["entropy", missing.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(wigner(&["entropy"]).status.code(), Some(2));
    assert_eq!(wigner(&["entropy", "x", "--renyi", "0"]).status.code(), Some(2));
    assert_eq!(wigner(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn sigma_table_small() {
    let out = wigner(&["sigma-table", "--max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# seed=42"));
    assert_eq!(&lines[1..], ["m,n,entropy", "0,0,2.14472988584939"]);

    let out = wigner(&["sigma-table", "--max", "2"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2 + 9);
    let row = text.lines().find(|l| l.starts_with("1,0,")).unwrap();
    let h: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
    assert!((h - 2.721_946).abs() < 1e-6);
    let rows: Vec<(String, String, f64)> = text
        .lines()
        .skip(2)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].to_string(), f[1].to_string(), f[2].parse().unwrap())
        })
        .collect();
    for (m, n, h) in &rows {
        let mirror = rows.iter().find(|r| &r.0 == n && &r.1 == m).unwrap();
        assert_eq!(*h, mirror.2);
    }
}

#[test]
fn sigma_table_guard() {
    assert_eq!(wigner(&["sigma-table", "--max", "31"]).status.code(), Some(2));
}

#[test]
fn sigma_table_is_deterministic_across_thread_counts() {
    let a = wigner(&["sigma-table", "--max", "6", "--jobs", "1"]);
    let b = wigner(&["sigma-table", "--max", "6", "--jobs", "4"]);
    let c = wigner(&["sigma-table", "--max", "6"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn sigma_table_to_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("t.csv");
    let out = wigner(&["sigma-table", "--max", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(Path::new(&path)).unwrap().lines().count(), 6);
}

#[test]
fn region2_rows() {
    let out = wigner(&["region2", "--samples", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap() == "kind,param,p1,p2,tangency_t,coef_p1,coef_p2,coef_1");
    assert!(text.lines().any(|l| l == "arc,1,0,0.5,2,,,"));
    assert!(text.lines().any(|l| l == "arc,0,0.5,0.25,0,,,"));
    // W(0) >= 0 gives p1 <= 1/2
    assert!(text.lines().any(|l| l == "tangent,0,,,0,-2,0,1"));
    assert_eq!(wigner(&["region2", "--samples", "15"]).status.code(), Some(2));
    let again = wigner(&["region2", "--samples", "16"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn region2_tangent_at_one() {
    let out = wigner(&["region2", "--samples", "51"]);
    let text = stdout(&out);
    // r = 1 appears at index 20 of the 51-point grid on [0, 2.5]
    assert!(text.lines().any(|l| l == "tangent,1,,,2,0,-2,1"), "{text}");
}

#[test]
fn verify_exit_codes() {
    let out = wigner(&["verify", "--suite", "identity38"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("identity38: PASS"));
    let out = wigner(&["verify", "--suite", "eq44"]);
    assert_eq!(out.status.code(), Some(0));
    let out = wigner(&["verify", "--suite", "unknown"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn verify_is_seeded() {
    let a = wigner(&["verify", "--suite", "passive-bound", "--seed", "5"]);
    let b = wigner(&["verify", "--suite", "passive-bound", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("# seed=5"));
}
