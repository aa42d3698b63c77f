use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const CIRCLE: &str = r#"{"labels": ["a", "b", "c", "d"],
 "gaps": [[0, "1/6", "1/2", "1/3"], ["1/6", 0, "1/3", "1/2"], ["1/2", "1/3", 0, "1/6"], ["1/3", "1/2", "1/6", 0]],
 "mode": "exact"}"#;

fn strcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strcx")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn betti_column(table: &str) -> Vec<usize> {
    table
        .lines()
        .filter_map(|l| {
            let cells: Vec<&str> = l.split_whitespace().collect();
            match cells.as_slice() {
                [d, b, ..] if d.parse::<usize>().is_ok() => b.parse().ok(),
                _ => None,
            }
        })
        .collect()
}

#[test]
fn circle_homology_is_a_sphere() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "circle.json", CIRCLE);
    let out = strcx(&["homology", "-i", s(&input)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(betti_column(&stdout(&out)), [1, 0, 1]);

    let json = dir.path().join("h.json");
    let out = strcx(&["homology", "-i", s(&input), "--coefficients", "int", "-o", s(&json)]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["betti_mod2"], serde_json::json!([1, 0, 1]));
    assert_eq!(doc["integer"]["ranks"], serde_json::json!([1, 0, 1]));
}

#[test]
fn torus_realization_reports_its_flags() {
    let dir = TempDir::new().unwrap();
    let space = dir.path().join("torus.json");
    let report = dir.path().join("report.json");
    let out = strcx(&["realize", "--surface", "torus", "-o", s(&space), "--report", s(&report)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verified: 84 flags, isomorphic to barycentric subdivision"));
    let rep: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(rep["passed"], true);
    let h = strcx(&["homology", "-i", s(&space)]);
    assert_eq!(betti_column(&stdout(&h)), [1, 2, 1]);
}

#[test]
fn realize_reads_off_files() {
    let dir = TempDir::new().unwrap();
    let off = "OFF\n4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n";
    let input = write(&dir, "tet.off", off);
    let out = strcx(&["realize", "-i", s(&input), "--mode", "float"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("verified: 24 flags"));
}

#[test]
fn broken_matrix_fails_validation_once() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "broken.json", r#"{"gaps": [[0, 1, 3], [1, 0, 1], [3, 1, 0]]}"#);
    let out = strcx(&["validate", "-i", s(&input)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("1 violation(s)"), "{text}");
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with("d(")).count(), 1);
}

#[test]
fn asymmetric_violations_are_all_listed() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "asym.json", r#"{"gaps": [[0, 1, 5], [1, 0, 1], [1, 1, 0]]}"#);
    let out = strcx(&["validate", "-i", s(&input)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("1 violation(s)"));
    let ok = write(&dir, "cycle.json", r#"{"gaps": [[0, 1, 2], [2, 0, 1], [1, 2, 0]]}"#);
    assert!(strcx(&["validate", "-i", s(&ok)]).status.success());
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("truncated.json", r#"{"gaps": [[0, 1"#),
        ("ragged.json", r#"{"gaps": [[0, 1], [1]]}"#),
        ("scalar.json", r#"{"gaps": [[0, "x"], ["x", 0]]}"#),
        ("labels.json", r#"{"labels": ["a"], "gaps": [[0, 1], [1, 0]]}"#),
    ];
    for (name, text) in cases {
        let input = write(&dir, name, text);
        let out = strcx(&["homology", "-i", s(&input)]);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(strcx(&["homology", "-i", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(strcx(&["homology"]).status.code(), Some(2));
    let circle = write(&dir, "circle.json", CIRCLE);
    assert_eq!(strcx(&["strings", "-i", s(&circle), "-e", "abc"]).status.code(), Some(2));
    assert_eq!(strcx(&["endpoint", "-i", s(&circle), "-x", "a", "-y", "zz"]).status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let space = dir.path().join("random.json");
    assert!(strcx(&["generate", "random-grid", "-n", "8", "--seed", "11", "-o", s(&space)]).status.success());
    for args in [
        vec!["strings", "-e", "1"],
        vec!["complex", "-e", "1/2"],
        vec!["barcode", "--format", "text"],
        vec!["barcode"],
    ] {
        let mut full = args.clone();
        full.extend(["-i", s(&space)]);
        let first = strcx(&full);
        assert!(first.status.success());
        for _ in 0..3 {
            assert_eq!(strcx(&full).stdout, first.stdout, "{args:?}");
        }
    }
}

#[test]
fn staged_pipeline_matches_direct_homology() {
    let dir = TempDir::new().unwrap();
    let space = dir.path().join("space.json");
    let strings = dir.path().join("strings.json");
    let complex = dir.path().join("complex.json");
    let faces = dir.path().join("complex.faces");
    for seed in ["1", "2", "3"] {
        assert!(strcx(&["generate", "random-metric", "-n", "7", "--seed", seed, "-o", s(&space)]).status.success());
        for eps in ["0", "1/2", "1"] {
            assert!(strcx(&["strings", "-i", s(&space), "-e", eps, "-o", s(&strings)]).status.success());
            assert!(strcx(&["complex", "-i", s(&strings), "-o", s(&complex)]).status.success());
            assert!(strcx(&["complex", "-i", s(&complex), "--format", "faces", "-o", s(&faces)]).status.success());
            let direct = stdout(&strcx(&["homology", "-i", s(&space), "-e", eps]));
            for staged in [&strings, &complex, &faces] {
                assert_eq!(stdout(&strcx(&["homology", "-i", s(staged)])), direct, "seed {seed}, ε {eps}");
            }
        }
    }
}

#[test]
fn csv_and_stdin_inputs() {
    let dir = TempDir::new().unwrap();
    let csv = write(&dir, "m.csv", ",a,b,c,d\na,0,1,2,3\nb,1,0,1,2\nc,2,1,0,1\nd,3,2,1,0\n");
    let out = strcx(&["complex", "-i", s(&csv), "--format", "faces"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l == "0 1 2 3"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_strcx"))
        .args(["homology", "-i", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(CIRCLE.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(betti_column(&stdout(&out)), [1, 0, 1]);
}

#[test]
fn endpoint_subcomplex_by_label() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "circle.json", CIRCLE);
    let out = strcx(&["endpoint", "-i", s(&input), "-x", "a", "-y", "c"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("endpoints a, c:"));
}

#[test]
fn worked_examples_all_pass() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("worked.json");
    let out = strcx(&["worked-examples", "-o", s(&report)]);
    assert!(out.status.success(), "{}", stdout(&out));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc["passed"], true);
}

#[test]
fn float_generators_need_float_mode() {
    assert_eq!(strcx(&["generate", "regular-polygon", "--sides", "4", "--mode", "exact"]).status.code(), Some(2));
    let out = strcx(&["generate", "parallel-lines", "-m", "3", "-n", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"float\""));
}
