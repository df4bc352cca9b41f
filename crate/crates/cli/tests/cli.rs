use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blindcop"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn ws() -> TempDir {
    tempfile::tempdir().unwrap()
}

#[test]
fn solve_k4_prints_four() {
    let d = ws();
    assert_eq!(code(&run(d.path(), &["gen", "complete", "4", "-o", "k4.graph"])), 0);
    let o = run(d.path(), &["solve", "--game", "bcw", "--radius", "1", "k4.graph"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("4"));
}

#[test]
fn solve_is_thread_independent() {
    let d = ws();
    run(d.path(), &["gen", "grid", "3", "3", "-o", "g.graph"]);
    let one = run(d.path(), &["--threads", "1", "solve", "g.graph"]);
    let four = run(d.path(), &["--threads", "4", "solve", "g.graph"]);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn verify_exit_codes() {
    let d = ws();
    run(d.path(), &["gen", "path", "4", "-o", "p4.graph"]);
    fs::write(d.path().join("win.txt"), "game=bcw r=1 k=2\n0 1\n1 2\n2 3\n").unwrap();
    fs::write(d.path().join("lose.txt"), "game=bcw r=1 k=2\n0 1\n").unwrap();
    fs::write(d.path().join("over.txt"), "game=bcw r=1 k=1\n0 1\n").unwrap();
    fs::write(d.path().join("junk.txt"), "hello\n").unwrap();
    assert_eq!(code(&run(d.path(), &["verify", "--strategy", "win.txt", "p4.graph"])), 0);
    assert_eq!(code(&run(d.path(), &["verify", "--strategy", "lose.txt", "p4.graph"])), 1);
    assert_eq!(code(&run(d.path(), &["verify", "--strategy", "over.txt", "p4.graph"])), 2);
    assert_eq!(code(&run(d.path(), &["verify", "--strategy", "junk.txt", "p4.graph"])), 2);
    let o = run(d.path(), &["--json", "verify", "--strategy", "win.txt", "p4.graph"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "win");
    assert_eq!(v["cleared_at"], 3);
}

#[test]
fn malformed_graph_and_resource_cap() {
    let d = ws();
    fs::write(d.path().join("bad.graph"), "3 1\n0 7\n").unwrap();
    assert_eq!(code(&run(d.path(), &["solve", "bad.graph"])), 2);
    run(d.path(), &["gen", "grid", "4", "4", "-o", "g.graph"]);
    assert_eq!(code(&run(d.path(), &["solve", "--max-states", "10", "g.graph"])), 3);
}

#[test]
fn solve_witness_verifies() {
    let d = ws();
    run(d.path(), &["gen", "cycle", "6", "-o", "c6.graph"]);
    for game in ["bcw", "search", "hunt", "zerovis"] {
        let o = run(d.path(), &["solve", "--game", game, "-o", "w.txt", "c6.graph"]);
        assert_eq!(code(&o), 0, "{game}");
        assert_eq!(code(&run(d.path(), &["verify", "--strategy", "w.txt", "c6.graph"])), 0, "{game}");
    }
}

#[test]
fn naf_commands() {
    let d = ws();
    assert_eq!(stdout(&run(d.path(), &["naf", "--g", "1"])), "1365\n");
    let o = run(d.path(), &["naf", "3"]);
    assert_eq!(stdout(&o), "digits: 1 0 -1\nweight: 2\n");
    let o = run(d.path(), &["naf", "--lemma-check", "1", "--brute-cap", "4000000"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("sufficient=pass brute=pass"));
    assert_eq!(code(&run(d.path(), &["naf", "--g", "0"])), 2);
}

#[test]
fn certify_expansion() {
    let d = ws();
    run(d.path(), &["gen", "cycle", "5", "-o", "c5.graph"]);
    let o = run(d.path(), &["certify", "expansion", "--a", "2", "--k", "2", "c5.graph"]);
    assert_eq!((code(&o), stdout(&o)), (0, "LB bcw1 > 2 via expansion a=2\n".to_string()));
    run(d.path(), &["gen", "path", "4", "-o", "p4.graph"]);
    let o = run(d.path(), &["certify", "expansion", "--a", "2", "--k", "2", "p4.graph"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn construct_and_verify() {
    let d = ws();
    let o = run(d.path(), &["construct", "bintree", "--height", "4", "-o", "bt"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(d.path(), &["verify", "--strategy", "bt/strategy.txt", "bt/graph.txt"])), 0);
    let o = run(d.path(), &["construct", "k2t", "--t", "2", "-o", "k", "--dot", "k.dot"]);
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(d.path().join("k.dot")).unwrap().starts_with("graph G {"));
    assert_eq!(code(&run(d.path(), &["verify", "--strategy", "k/strategy.txt", "k/graph.txt"])), 0);
    let o = run(d.path(), &["certify", "balanced-clique", "--model", "k/model.txt", "k/graph.txt"]);
    assert_eq!(stdout(&o), "LB bcw1 > 3 via balanced-clique h=4\n");

    run(d.path(), &["gen", "cycle", "6", "-o", "c6.graph"]);
    fs::write(d.path().join("c6.td"), "s td 4 3 6\nb 1 1 2 6\nb 2 2 5 6\nb 3 2 3 5\nb 4 3 4 5\n1 2\n2 3\n3 4\n").unwrap();
    let o = run(d.path(), &["construct", "treesub", "--td", "c6.td", "c6.graph", "-o", "ts"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&run(d.path(), &["verify", "--strategy", "ts/strategy.txt", "ts/graph.txt"])), 0);
    run(d.path(), &["gen", "cbt", "2", "-o", "t.graph"]);
    let o = run(d.path(), &["construct", "treesub", "t.graph", "-o", "tt"]);
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(d.path().join("tt/nice.td")).unwrap().starts_with("s td "));
}

#[test]
fn transforms_round_trip() {
    let d = ws();
    run(d.path(), &["gen", "path", "4", "-o", "p4.graph"]);
    run(d.path(), &["solve", "-o", "w.txt", "p4.graph"]);
    let o = run(d.path(), &["transform", "double-speed", "--strategy", "w.txt", "-o", "d.txt", "p4.graph"]);
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(d.path().join("d.txt")).unwrap().starts_with("game=bcw r=2 k=4"));
    let o = run(d.path(), &["transform", "cop-to-flip", "--strategy", "w.txt", "-o", "f.txt", "p4.graph"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(d.path(), &["verify", "--flip", "--strategy", "f.txt", "p4.graph"])), 0);

    run(d.path(), &["solve", "--radius", "3", "-o", "w3.txt", "p4.graph"]);
    run(d.path(), &["transform", "cop-to-flip", "--strategy", "w3.txt", "-o", "f3.txt", "p4.graph"]);
    let o = run(d.path(), &["transform", "flip-to-cop", "--strategy", "f3.txt", "-o", "back.txt", "p4.graph"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(d.path(), &["verify", "--strategy", "back.txt", "p4.graph"])), 0);

    run(d.path(), &["solve", "--game", "hunt", "-o", "h.txt", "p4.graph"]);
    let o = run(d.path(), &["transform", "hunter-to-cop", "--strategy", "h.txt", "p4.graph"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("game=bcw r=1"));
    let o = run(d.path(), &["transform", "zerovis-to-cop", "--strategy", "w.txt", "p4.graph"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn minor_commands() {
    let d = ws();
    run(d.path(), &["gen", "complete", "3", "-o", "k3.graph"]);
    let o = run(d.path(), &["minor", "embed-outerplanar", "k3.graph", "-o", "m.txt"]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read_to_string(d.path().join("m.txt")).unwrap(), "0: 0 1\n1: 4\n2: 2 5 8\n");
    run(d.path(), &["gen", "grid", "3", "3", "-o", "g.graph"]);
    let o = run(d.path(), &["minor", "verify", "--pattern", "k3.graph", "--model", "m.txt", "g.graph"]);
    assert_eq!((code(&o), stdout(&o)), (0, "ok (balanced: false)\n".to_string()));
    fs::write(d.path().join("bad.txt"), "0: 0\n1: 4\n2: 8\n").unwrap();
    let o = run(d.path(), &["minor", "verify", "--pattern", "k3.graph", "--model", "bad.txt", "g.graph"]);
    assert_eq!(code(&o), 1);
    let o = run(d.path(), &["--json", "minor", "balance-outerplanar", "--pattern", "k3.graph"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["branch_size"].as_u64().unwrap() >= 1);

    run(d.path(), &["gen", "complete", "5", "-o", "k5.graph"]);
    fs::write(d.path().join("id.txt"), "0: 0\n1: 1\n2: 2\n3: 3\n4: 4\n").unwrap();
    let o = run(d.path(), &["minor", "balance-clique", "--model", "id.txt", "k5.graph"]);
    assert_eq!(stdout(&o), "0: 0\n1: 1\n2: 2\n");
}

#[test]
fn gen_is_seeded() {
    let d = ws();
    let a = run(d.path(), &["gen", "random_graph", "8", "0.5", "--seed", "7"]);
    let b = run(d.path(), &["gen", "random_graph", "8", "0.5", "--seed", "7"]);
    let c = run(d.path(), &["gen", "random_graph", "8", "0.5", "--seed", "8"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
    assert_eq!(code(&run(d.path(), &["gen", "nonsense", "3"])), 2);
}
