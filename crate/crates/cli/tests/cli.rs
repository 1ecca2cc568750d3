use std::process::{Command, Output};

fn anchored(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anchored")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn box_table_for_e7x() {
    let o = anchored(&["box", "e7x", "--max-k", "10"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    assert_eq!(last, "10\t42\t0\t9\t0\t75\t0\t36\t0\t99\t0\t36\t0\t75\t0\t9\t0\t42");
    assert_eq!(out.lines().count(), 12);
}

#[test]
fn box_table_from_file() {
    let dir = std::env::temp_dir().join(format!("anchored-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.txt");
    std::fs::write(
        &path,
        "[ring]\nsimples 1 2\nunit 1\nfuse 2 2 -> 1:1\n[module]\nsimples 1 2\nunit 1\nact 1 -> 2:1\nact 2 -> 1:1\nphi-recursion chebyshev 2\n",
    )
    .unwrap();
    let o = anchored(&["box", "--file", path.to_str().unwrap(), "--max-k", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "k\t1\t2\n0\t1\t0\n1\t0\t1\n2\t1\t0\n");
    std::fs::write(&path, "[ring]\nsimples 1\nunit 1\nfuse 1 1 -> 1:x\n").unwrap();
    assert_eq!(code(&anchored(&["box", "--file", path.to_str().unwrap()])), 2);
    assert_eq!(code(&anchored(&["box", "e9"])), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn equiv_exit_codes() {
    let o = anchored(&["equiv", "(id 4)", "(comp 2 (p 1 0 4) u)", "--budget", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("Proven"));
    let o = anchored(&[
        "equiv",
        "(comp 1 (p 2 2 2) (p 0 2 0))",
        "(act (comp 1 (p 0 2 2) (p 0 2 0)) rb(3)[e' 2])",
        "--budget",
        "4",
    ]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "NotProven");
    assert_eq!(code(&anchored(&["equiv", "(id 2)", "(id 4)"])), 2);
    assert_eq!(code(&anchored(&["equiv", "(id 2"])), 2);
}

#[test]
fn check_exit_codes() {
    let o = anchored(&["check", "relations", "--backend", "tl", "--max-n", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(!out.is_empty());
    assert!(out.lines().all(|l| l.ends_with("\tpass")));
    let o = anchored(&["check", "relations", "--family", "c8", "--max-n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.starts_with("C8\t")));
    let o = anchored(&["check", "braid", "--max-n", "3", "--trials", "10", "--seed", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 10);
    assert_eq!(code(&anchored(&["check", "relations", "--backend", "groth"])), 2);
    assert_eq!(code(&anchored(&["check", "relations", "--family", "Z1"])), 2);
    assert_eq!(code(&anchored(&["check", "everything"])), 2);
}

#[test]
fn normalize_round_trips() {
    let o = anchored(&["normalize", "(act (comp 2 (p 1 2 3) (p 0 2 0)) rb(3)[e 1])"]);
    assert_eq!(code(&o), 0);
    let once = stdout(&o);
    let again = anchored(&["normalize", once.trim()]);
    assert_eq!(code(&again), 0);
    assert_eq!(stdout(&again), once);
    let bad = anchored(&["normalize", "(cap 3 1)"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error"));
}

#[test]
fn eval_with_inputs() {
    let o = anchored(&["eval", "(comp 1 (cap 0 2) (cup 0 2))"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1*d\n");
    let dir = std::env::temp_dir().join(format!("anchored-eval-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("in.txt");
    std::fs::write(&path, "1: 2 1 = 2\n").unwrap();
    let o = anchored(&["eval", "(cap 0 0)", "--inputs", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "= 2*d");
    assert_eq!(code(&anchored(&["eval", "(cap 0 0)", "--inputs", "/nonexistent/in.txt"])), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn braid_exit_codes() {
    let o = anchored(&["braid", "eq", "rb(3)[e 1 e 2 e 1]", "rb(3)[e 2 e 1 e 2]"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "equal");
    assert_eq!(code(&anchored(&["braid", "eq", "rb(2)[e 1]", "rb(2)[e' 1]"])), 1);
    let o = anchored(&["braid", "mul", "rb(2)[e 1]", "rb(2)[e' 1]"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&anchored(&["braid", "eq", stdout(&o).trim(), "rb(2)[]"])), 0);
    let o = anchored(&["braid", "compose", "rb(1)[t 1]", "1", "rb(2)[]"]);
    assert_eq!(code(&o), 0);
    let back = anchored(&["braid", "eq", stdout(&o).trim(), "rb(2)[e 1 e 1 t 1 t 2]"]);
    assert_eq!(code(&back), 0);
    assert_eq!(code(&anchored(&["braid", "mul", "rb(2)[e 1]", "rb(3)[]"])), 2);
    assert_eq!(code(&anchored(&["braid", "eq", "rb(2)[e 5]", "rb(2)[]"])), 2);
    assert_eq!(code(&anchored(&["braid"])), 2);
}
