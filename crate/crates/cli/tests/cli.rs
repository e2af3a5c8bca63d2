use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hyperbar::fixtures::{meeting_filtration, MEETING_CONTACTS};
use hyperbar::io::write_filtration;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperbar"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn pipeline_reproduces_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("c.txt"), MEETING_CONTACTS).unwrap();
    assert!(run(dir.path(), &["ingest", "c.txt", "-o", "f.csv"]).status.success());
    let filtration = fs::read_to_string(dir.path().join("f.csv")).unwrap();
    assert_eq!(filtration, write_filtration(&meeting_filtration()));

    assert!(run(dir.path(), &["compute", "f.csv", "--max-dim", "1", "-o", "b.csv"]).status.success());
    let bars = fs::read_to_string(dir.path().join("b.csv")).unwrap();
    assert!(bars.ends_with(
        "1,inf,0.693147181,inf\n1,hat,0.287682072,1.38629436\n1,hat,0.693147181,inf\n"
    ));
    assert_eq!(bars.lines().count(), 9);

    let out = run(dir.path(), &["stats", "b.csv", "--dim", "1"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["N"], 1);
    assert_eq!(json["N_hat"], 2);
    assert_eq!(json["n_hat"], 1);
}

#[test]
fn oracle_check_passes_on_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("c.txt"), MEETING_CONTACTS).unwrap();
    assert!(run(dir.path(), &["ingest", "c.txt", "-o", "f.csv"]).status.success());
    let out = run(dir.path(), &["oracle-check", "f.csv", "--max-dim", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "no discrepancies\n");
}

#[test]
fn oracle_check_refuses_large_rosters() {
    let dir = tempfile::tempdir().unwrap();
    let rows: String = (0..13).map(|i| format!("v{i}|v{},1\n", i + 1)).collect();
    fs::write(dir.path().join("f.csv"), format!("hyperedge,grade\n{rows}")).unwrap();
    let out = run(dir.path(), &["oracle-check", "f.csv", "--max-dim", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn rips_output_has_no_hat_rows() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p.txt"), "0 0\n1 0\n1 1\n0 1\n0.5 2\n").unwrap();
    assert!(run(dir.path(), &["rips", "p.txt", "--rmax", "3", "--max-dim", "2", "-o", "f.csv"]).status.success());
    assert!(run(dir.path(), &["compute", "f.csv", "--max-dim", "1", "-o", "b.csv"]).status.success());
    let bars = fs::read_to_string(dir.path().join("b.csv")).unwrap();
    assert!(!bars.contains(",hat,"));
    assert!(bars.contains("1,inf,1,1.41421356"));
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("b.csv"), "dim,kind,birth,death\n0,inf,0,inf\n").unwrap();
    assert!(run(dir.path(), &["plot", "b.csv", "-o", "b.svg"]).status.success());
    let svg = fs::read_to_string(dir.path().join("b.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("class=\"arrow\""));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["compute"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(dir.path(), &["compute", "f.csv", "--mode", "sideways", "-o", "b.csv"]).status.code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_hyperbar"))
        .current_dir(dir.path())
        .env("HYPERBAR_THREADS", "zero")
        .args(["stats", "b.csv", "--dim", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn data_errors_exit_one_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("c.txt"), "20 A B\n40 A\n").unwrap();
    let out = run(dir.path(), &["ingest", "c.txt", "-o", "f.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    fs::write(dir.path().join("f.csv"), "hyperedge,grade\nA|B,1\nA|C,soon\n").unwrap();
    let out = run(dir.path(), &["compute", "f.csv", "-o", "b.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    fs::write(dir.path().join("b.csv"), "dim,kind,birth,death\n0,inf,2,1\n").unwrap();
    let out = run(dir.path(), &["stats", "b.csv", "--dim", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn log_base_changes_rendering_only() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("c.txt"), MEETING_CONTACTS).unwrap();
    assert!(run(dir.path(), &["ingest", "c.txt", "-o", "f.csv", "--log-base", "2"]).status.success());
    let text = fs::read_to_string(dir.path().join("f.csv")).unwrap();
    assert!(text.contains("C|D,1\n") && text.contains("A|C,2\n"));
    assert_eq!(run(dir.path(), &["ingest", "c.txt", "-o", "g.csv", "--log-base", "1"]).status.code(), Some(1));
}
