use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn hives(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hives")).args(args).output().unwrap()
}

fn hives_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hives"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

const M: &str = "3\n0\n2 3\n4 5 6\n5 7 8 8\n";
const N: &str = "3\n0\n1 2\n1 3 4\n1 3 4 5\n";
const P_COM: &str = "3\n0\n4 4\n6 7 7\n6 8 8 8\n";

#[test]
fn lr_counts() {
    let o = hives(&["lr", "2,1,0", "2,1,0", "3,2,1", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "hive=2 crystal=2\n");
    assert_eq!(stdout(&hives(&["lr", "1,0", "1,0", "3,0"])), "0\n");
    let listed = stdout(&hives(&["lr", "2,1,0", "2,2,1", "3,3,2", "--list"]));
    assert!(listed.contains(M), "{}", listed);
}

#[test]
fn lr_rejects_bad_weights() {
    assert_eq!(hives(&["lr", "1,2", "0,0", "1,2"]).status.code(), Some(2));
    let o = hives(&["lr", "1,0,-1", "0,0,0", "1,0,-1", "--method", "crystal"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&hives(&["lr", "1,0,-1", "0,0,0", "1,0,-1"])), "1\n");
}

#[test]
fn assoc_golden_output() {
    let (m, n) = (file("assoc_m", M), file("assoc_n", N));
    let o = hives(&["assoc", &m, &n, "--dump-slices"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = "\
P
3
1
3 4
4 6 7
5 7 8 8

Q
3
0
1 3
1 4 6
1 4 7 8

t=0
. . . 5
. . 4 .
. 2 . .
0 . . .

t=1
. . 7 .
. 5 . 4
3 . 3 .
. 1 . .

t=2
. 8 . .
6 . 6 .
. 4 . 3
. . 1 .

t=3
8 . . .
. 7 . .
. . 4 .
. . . 1
";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn assoc_inverse_and_stages() {
    let (m, n) = (file("inv_m", M), file("inv_n", N));
    let fwd = stdout(&hives(&["assoc", &m, &n, "--stages"]));
    assert!(fwd.contains("Q^2\n3\n0\n2 3\n4 5 6\n4 7 8 8\n"));
    let p = file("inv_p", "3\n1\n3 4\n4 6 7\n5 7 8 8\n");
    let q = file("inv_q", "3\n0\n1 3\n1 4 6\n1 4 7 8\n");
    let back = stdout(&hives(&["assoc", &p, &q, "--inverse"]));
    assert_eq!(back, format!("M\n{}\nN\n{}\n", M, N));
    let norm = stdout(&hives(&["assoc", &m, &n, "--normalize"]));
    assert!(norm.starts_with("P\n3\n0\n2 3\n3 5 6\n4 6 7 7\n"));
}

#[test]
fn assoc_small_and_mismatched() {
    let one = file("one", "1\n0\n2 3\n");
    let o = hives(&["assoc", &one, &one]);
    assert_eq!(o.status.code(), Some(2));
    let a = file("one_a", "1\n0\n1 1\n");
    let o = hives(&["assoc", &a, &a]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&hives(&["assoc", &a, &a])));
    let (m, p) = (file("mis_m", M), file("mis_p", P_COM));
    assert_eq!(hives(&["assoc", &m, &p]).status.code(), Some(2));
    assert_eq!(hives(&["assoc", &m, "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn commute_golden_and_involution() {
    let o = hives_stdin(&["commute", "-", "--dump-slices"], P_COM);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("P*\n3\n-2\n0 2\n0 4 5\n0 4 6 6\n\nt=0\n"));
    assert!(out.contains("t=3\n 6  .  .  .\n .  6  .  .\n 7  .  4  .\n .  4  .  0\n"));
    assert!(out.ends_with("t=6\n .  .  .  .\n .  .  .  .\n .  .  .  .\n-2  .  .  .\n"));

    let star = out.split("\n\n").next().unwrap().strip_prefix("P*\n").unwrap().to_string();
    let twice = stdout(&hives_stdin(&["commute", "-", "--normalize"], &star));
    assert_eq!(twice, format!("P*\n{}\n", P_COM));

    let zero = "3\n0\n0 0\n0 0 0\n0 0 0 0\n";
    assert_eq!(stdout(&hives_stdin(&["commute", "-"], zero)), format!("P*\n{}\n", zero));
    let stages = stdout(&hives_stdin(&["commute", "-", "--stages"], P_COM));
    assert_eq!(stages.matches("stage ").count(), 7);
}

#[test]
fn convert_examples() {
    let hat = stdout(&hives_stdin(&["convert", "hat", "-"], M));
    assert_eq!(hat, "1\n1 1\n2 1 0\n");
    let back = hives_stdin(&["convert", "unhat", "-", "--mu", "2,2,1"], &hat);
    assert_eq!(stdout(&back), M);
    assert_eq!(hives_stdin(&["convert", "unhat", "-"], &hat).status.code(), Some(2));
    assert_eq!(stdout(&hives_stdin(&["convert", "xi", "-"], "1\n3 1\n4 2 0\n")), "2\n4 1\n4 2 0\n");
    let star = "n: 3\ninner: 2 2 2\n1 2\n2\n3\n1 3\n2\n";
    assert_eq!(stdout(&hives_stdin(&["convert", "jdt", "-"], star)), "n: 3\n1 1 2\n2 2 3\n3\n");
    let tab = stdout(&hives_stdin(&["convert", "gt2tab", "-"], "1\n3 1\n4 2 0\n"));
    assert_eq!(stdout(&hives_stdin(&["convert", "tab2gt", "-"], &tab)), "1\n3 1\n4 2 0\n");
    assert_eq!(hives_stdin(&["convert", "xi", "-"], "1\n0 1\n").status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = hives(&["verify", "yb"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("counterexample sides differ: passed 1 failed 0"));
    assert_eq!(hives(&["verify", "octjeu", "--max-size", "3"]).status.code(), Some(0));
    let all = hives(&["verify", "all", "--max-size", "1"]);
    assert_eq!(all.status.code(), Some(0));
    assert_eq!(stdout(&all).matches(": PASS").count(), 8);
    assert_eq!(hives(&["verify", "nonsense"]).status.code(), Some(2));
}
