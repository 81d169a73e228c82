use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn contract(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contract"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(name: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("contract-cli-{name}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let path = self.0.join(name);
        fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).to_str().unwrap().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const P5: &str = "5 4\n0 1\n1 2\n2 3\n3 4\n";

#[test]
fn solve_answers_and_exit_codes() {
    let s = Scratch::new("solve");
    let c4 = s.file("c4.txt", C4);
    let c5 = s.file("c5.txt", C5);
    let p5 = s.file("p5.txt", P5);

    let out = contract(&["solve", "path", &c4, "--k", "2"]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("yes\n", Some(0)));
    let out = contract(&["solve", "tree", &c5, "--k", "2"]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("no\n", Some(1)));
    let out = contract(&["solve", "path", &p5, "--k", "0"]);
    assert_eq!(stdout(&out), "yes\n");

    for mode in ["randomized", "deterministic"] {
        let out = contract(&["solve", "tree", &c5, "--k", "3", "--mode", mode, "--seed", "7"]);
        assert_eq!(stdout(&out), "yes\n", "{mode}");
    }
}

#[test]
fn disconnected_path_input_is_a_no_with_a_reason() {
    let s = Scratch::new("disconnected");
    let g = s.file("g.txt", "4 2\n0 1\n2 3\n");
    let out = contract(&["solve", "path", &g, "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "no\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
}

#[test]
fn errors_exit_with_two() {
    let s = Scratch::new("errors");
    let bad = s.file("bad.txt", "3 1\n0 7\n");
    assert_eq!(contract(&["solve", "path", &bad, "--k", "1"]).status.code(), Some(2));
    assert_eq!(contract(&["solve", "path", &s.path("missing"), "--k", "1"]).status.code(), Some(2));
    assert_eq!(contract(&["solve", "cycle"]).status.code(), Some(2));
}

#[test]
fn witness_from_solve_verifies() {
    let s = Scratch::new("witness");
    let c4 = s.file("c4.txt", C4);
    let out = contract(&["solve", "path", &c4, "--k", "2", "--witness"]);
    let text = stdout(&out);
    assert!(text.starts_with("yes k_used=2\n"), "{text}");
    let w = s.file("w.txt", &text);
    let out = contract(&["verify-witness", "path", &c4, &w, "--k", "2"]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("valid\n", Some(0)));
}

#[test]
fn verify_witness_checks_budget() {
    let s = Scratch::new("verify");
    let c4 = s.file("c4.txt", C4);
    let w = s.file("w.txt", "0 1\n2 3\n");
    let out = contract(&["verify-witness", "path", &c4, &w, "--k", "2"]);
    assert_eq!(stdout(&out), "valid\n");
    let out = contract(&["verify-witness", "path", &c4, &w, "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("invalid: "));
}

#[test]
fn oracle_prints_minimum() {
    let s = Scratch::new("oracle");
    let c5 = s.file("c5.txt", C5);
    assert_eq!(stdout(&contract(&["oracle", "tree", &c5])), "3\n");
    assert_eq!(stdout(&contract(&["oracle", "path", &c5])), "3\n");
}

#[test]
fn kernelize_writes_graph_and_trace() {
    let s = Scratch::new("kernel");
    let p = s.file("p8.txt", &stdout(&contract(&["gen", "path", "--n", "8"])));
    let (out, trace) = (s.path("k.txt"), s.path("t.txt"));
    let run = contract(&["kernelize", &p, "--k", "1", "--output", &out, "--trace", &trace]);
    assert_eq!(run.status.code(), Some(0));
    let reduced = fs::read_to_string(&out).unwrap();
    assert!(reduced.starts_with("5 4\n"), "{reduced}");
    let trace = fs::read_to_string(&trace).unwrap();
    assert_eq!(trace.lines().count(), 3);
    assert!(trace.lines().all(|l| l.split_whitespace().count() == 2));
}

#[test]
fn generators_round_trip_through_solve() {
    assert_eq!(
        stdout(&contract(&["gen", "cycle", "--n", "6"])),
        "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n"
    );
    let a = contract(&["gen", "random", "--n", "9", "--p", "0.3", "--seed", "4"]);
    let b = contract(&["gen", "random", "--n", "9", "--p", "0.3", "--seed", "4"]);
    assert_eq!(a.stdout, b.stdout);

    let s = Scratch::new("gen");
    let spider = s.path("spider.txt");
    contract(&["gen", "spider", "--legs", "3", "--length", "2", "--output", &spider]);
    // a spider is already a tree but needs one contraction per extra leg to be a path
    assert_eq!(stdout(&contract(&["oracle", "tree", &spider])), "0\n");
    assert_eq!(stdout(&contract(&["solve", "path", &spider, "--k", "1"])), "no\n");
    assert_eq!(stdout(&contract(&["solve", "path", &spider, "--k", "2"])), "yes\n");
}

#[test]
fn rbds_gadget_carries_its_budget() {
    let s = Scratch::new("rbds");
    let r = s.file("r.txt", "2 2 1\n0 0\n1 1\n");
    let text = stdout(&contract(&["gen", "rbds-gadget", &r]));
    assert!(text.starts_with("# k = 3\n"), "{text}");
    let g = s.file("g.txt", &text);
    // one red vertex cannot dominate both blue vertices
    assert_eq!(stdout(&contract(&["solve", "tree", &g, "--k", "3"])), "no\n");
}

#[test]
fn bench_is_reproducible_without_timing() {
    let args = ["bench", "--count", "3", "--max-n", "7", "--max-k", "2", "--seed", "11", "--no-timing"];
    let a = contract(&args);
    let b = contract(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("instance,n,m,k,mode,answer,trials,millis"));
    for line in lines {
        let fields: Vec<_> = line.split(',').collect();
        assert_eq!(fields.len(), 8, "{line}");
        assert!(matches!(fields[5], "yes" | "no"));
    }
    // solvers agree with the oracle on every row group
    let rows: Vec<Vec<String>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    for oracle in rows.iter().filter(|r| r[4].ends_with("-oracle")) {
        let target = oracle[4].trim_end_matches("-oracle");
        let det = rows
            .iter()
            .find(|r| r[0] == oracle[0] && r[3] == oracle[3] && r[4] == format!("{target}-deterministic"))
            .unwrap();
        assert_eq!(det[5], oracle[5], "{det:?}");
    }
}
