use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_interval-fpt"))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn cycle(n: usize) -> String {
    let mut s = format!("{n} {n}\n");
    for i in 0..n {
        s += &format!("{} {}\n", i, (i + 1) % n);
    }
    s
}

#[test]
fn recognize_verdicts() {
    let d = tempfile::tempdir().unwrap();
    let c4 = write(d.path(), "c4.txt", &cycle(4));
    let o = run(&["recognize", "--input", &c4]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("hole of length 4"));

    let p5 = write(d.path(), "p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    let o = run(&["recognize", "--input", &p5]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("interval"));

    // long claw: centre 0, legs 1-4, 2-5, 3-6
    let claw = write(d.path(), "claw.txt", "7 6\n0 1\n0 2\n0 3\n1 4\n2 5\n3 6\n");
    let o = run(&["recognize", "--input", &claw]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("asteroidal triple"));
}

#[test]
fn malformed_input_reports_line() {
    let d = tempfile::tempdir().unwrap();
    let bad = write(d.path(), "bad.txt", "3 2\n0 1\n0 9\n");
    let o = run(&["recognize", "--input", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn solve_examples() {
    let d = tempfile::tempdir().unwrap();
    let c9 = write(d.path(), "c9.txt", &cycle(9));
    let o = run(&["solve", "deletion", "--input", &c9, "--optimize", "--compare-oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("optimum k=1"));
    assert!(stdout(&o).contains("MATCH"));

    let o = run(&["solve", "completion", "--input", &c9, "--optimize", "--k", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("optimum k=6"));

    let two = write(d.path(), "two.txt", "8 8\n0 1\n1 2\n2 3\n0 3\n4 5\n5 6\n6 7\n4 7\n");
    let o = run(&["solve", "deletion", "--input", &two, "--k", "1", "--compare-oracle"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_record_has_verification() {
    let d = tempfile::tempdir().unwrap();
    let c5 = write(d.path(), "c5.txt", &cycle(5));
    let json = d.path().join("run.json");
    let o = run(&["solve", "deletion", "--input", &c5, "--k", "1", "--seed", "4", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["outcome"], "yes");
    assert_eq!(v["seed"], 4);
    assert_eq!(v["verification"]["lex_bfs_at_free"], true);
    assert_eq!(v["verification"]["clique_arrangement"], true);
}

#[test]
fn gen_is_deterministic_and_validated() {
    let a = run(&["gen", "gnp", "--n", "12", "--prob", "0.3", "--seed", "7"]);
    let b = run(&["gen", "gnp", "--n", "12", "--prob", "0.3", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let g = stdout(&run(&["gen", "gadget-type1", "--p", "7"]));
    assert!(g.starts_with("11 "));
    let g = stdout(&run(&["gen", "long-cycle", "--len", "9"]));
    assert_eq!(g, "9 9\n0 1\n0 8\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n");

    assert_eq!(run(&["gen", "gadget-type1", "--p", "3"]).status.code(), Some(2));
}

#[test]
fn verify_props_suites() {
    let o = run(&["verify-props", "--suite", "structure", "--count", "20", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify-props", "--suite", "cycles", "--count", "20", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    // gadget with the hub edge to v_4 removed
    let d = tempfile::tempdir().unwrap();
    let g = stdout(&run(&["gen", "gadget-type1", "--p", "8"]));
    let kept: Vec<&str> = g.lines().skip(1).filter(|l| *l != "4 10").collect();
    let text = format!("12 {}\n{}\n", kept.len(), kept.join("\n"));
    let broken = write(d.path(), "broken.txt", &text);
    let o = run(&["verify-props", "--suite", "structure", "--input", &broken]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn mismatch_is_not_reported_on_agreeing_runs() {
    let d = tempfile::tempdir().unwrap();
    let g = stdout(&run(&["gen", "gadget-type2", "--p", "6"]));
    let path = write(d.path(), "g.txt", &g);
    let reports = d.path().join("reports");
    let o = run(&[
        "solve",
        "deletion",
        "--input",
        &path,
        "--optimize",
        "--compare-oracle",
        "--report-dir",
        reports.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!reports.exists());
}
