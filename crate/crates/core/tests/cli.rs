use std::path::Path;
use std::process::{Command, Output};

fn antimagic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antimagic")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_then_verify_path() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p3.txt", "3 2\n0 1\n1 2\n");
    let solved = antimagic(&["solve", "--input", &graph]);
    assert_eq!(solved.status.code(), Some(0));
    let text = stdout(&solved);
    assert!(text.ends_with("provenance oracle\n"), "{text}");
    let solution = write(dir.path(), "p3.sol", &text);
    let checked = antimagic(&["verify", "--input", &graph, "--solution", &solution]);
    assert_eq!(checked.status.code(), Some(0));
    assert_eq!(stdout(&checked), "ok\n");
}

#[test]
fn verify_reports_the_first_duplicate() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "c3.txt", "3 3\n0 1\n1 2\n0 2\n");
    // cyclic orientation 0→1→2→0 with labels 1, 2, 3: sums 2, -1, -1
    let solution = write(
        dir.path(),
        "c3.sol",
        "3 3\n0 1 1\n1 2 2\n2 0 3\nsums\n0 2\n1 -1\n2 -1\nprovenance oracle\n",
    );
    let checked = antimagic(&["verify", "--input", &graph, "--solution", &solution]);
    assert_eq!(checked.status.code(), Some(1));
    assert_eq!(stdout(&checked), "duplicate sum -1 at vertices 1,2\n");
}

#[test]
fn refusal_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = "10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n";
    let graph = write(dir.path(), "petersen.txt", petersen);
    let out = antimagic(&["solve", "--input", &graph]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refused"));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_input_fails() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "bad.txt", "3 2\n0 1\n1 1\n");
    let out = antimagic(&["solve", "--input", &graph]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn gen_is_deterministic_and_solvable() {
    let dir = tempfile::tempdir().unwrap();
    let a = antimagic(&["gen", "--n", "10", "--delta", "6", "--seed", "11"]);
    let b = antimagic(&["gen", "--n", "10", "--delta", "6", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("# hub "));
    let graph = write(dir.path(), "g.txt", &stdout(&a));
    let out = dir.path().join("g.sol");
    let solved = antimagic(&["solve", "--input", &graph, "--output", out.to_str().unwrap()]);
    assert_eq!(solved.status.code(), Some(0));
    let checked = antimagic(&["verify", "--input", &graph, "--solution", out.to_str().unwrap()]);
    assert_eq!(stdout(&checked), "ok\n");
}

#[test]
fn gen_rejects_infeasible_degree() {
    assert_eq!(antimagic(&["gen", "--n", "4", "--delta", "4"]).status.code(), Some(1));
}

#[test]
fn dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = antimagic(&["solve", "--input", &graph, "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 6);
}

#[test]
fn oracle_command_and_caps() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "two.txt", "2 0\n");
    // two isolated vertices both sum to zero
    assert_eq!(antimagic(&["oracle", "--input", &graph]).status.code(), Some(2));
    let k4 = write(dir.path(), "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(antimagic(&["oracle", "--input", &k4]).status.code(), Some(0));
    assert_eq!(antimagic(&["oracle", "--input", &k4, "--max-edges", "5"]).status.code(), Some(1));
}

#[test]
fn sweep_tsv() {
    let out = antimagic(&["sweep", "--min-n", "2", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "id\tn\tm\tdelta\troute\tverified\truntime_ms");
    // 1 + 2 + 6 connected classes
    assert_eq!(lines.len(), 1 + 9);
    assert!(lines[1..].iter().all(|l| l.split('\t').nth(5) == Some("yes")));

    let sampled = antimagic(&["sweep", "--sample", "5", "--n", "9", "--delta", "5", "--seed", "3"]);
    assert_eq!(stdout(&sampled).lines().count(), 6);
}
