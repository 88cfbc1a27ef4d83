//! End-to-end runs of the command-line binary.

mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::{hg, mixed_multigraph, square_and_triple};
use unispec::io::emit_hg;
use unispec::Hypergraph;

const BIN: &str = env!("CARGO_BIN_EXE_unispec");

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("unispec-cli-{}-{tag}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let path = self.0.join(name);
        std::fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }

    fn hg(&self, name: &str, h: &Hypergraph) -> String {
        self.file(name, &emit_hg(h))
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("US_BUDGET")
        .output()
        .unwrap()
}

fn run_with_budget(args: &[&str], budget: &str) -> Output {
    Command::new(BIN)
        .args(args)
        .env("US_BUDGET", budget)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn c5() -> Hypergraph {
    hg(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]])
}

#[test]
fn charpoly_of_determinant_fixture() {
    let s = Scratch::new("charpoly");
    let f = s.hg("det.hg", &square_and_triple());
    let o = run(&["charpoly", &f]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("k=10\n"), "{out}");
    assert!(out.contains("det=0\n"), "{out}");
}

#[test]
fn edgeless_spectrum_is_all_zero() {
    let s = Scratch::new("edgeless");
    let f = s.file("e.hg", "n 3\n");
    let out = stdout(&run(&["charpoly", &f]));
    assert!(out.starts_with("k=3\ncharpoly=x^3\n"), "{out}");
    let out = stdout(&run(&["spectrum", &f]));
    assert!(out.contains("eigenvalue=0 multiplicity=3\n"), "{out}");
}

#[test]
fn matrix_exports() {
    let s = Scratch::new("matrix");
    let f = s.hg("ex.hg", &mixed_multigraph());
    let out = stdout(&run(&["matrix", &f]));
    assert!(out.starts_with("k=14\n"), "{out}");
    assert!(out.contains("{0}\t{0}\t1\n"), "{out}");
    assert!(out.contains("{1,2}\t{0}\t2\n"), "{out}");
    let triplets = out.lines().skip(1).count();
    let csv = stdout(&run(&["matrix", "--format", "csv", &f]));
    assert_eq!(csv.lines().count(), 15);
    let nonzero: usize = csv
        .lines()
        .skip(1)
        .map(|l| {
            l.rsplit("\",")
                .next()
                .unwrap()
                .split(',')
                .filter(|x| *x != "0")
                .count()
        })
        .sum();
    assert_eq!(nonzero, triplets);
}

#[test]
fn girth_distance_and_diameter() {
    let s = Scratch::new("metric");
    let f = s.hg("c5.hg", &c5());
    assert!(stdout(&run(&["girth", &f])).contains("girth=5\n"));
    let o = run(&["diameter", &f]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "diameter=2\n");

    let two = s.file("two.hg", "n 4\n0 1\n2 3\n");
    assert_eq!(
        stdout(&run(&["distance", &two, "0", "3"])),
        "distance 0 3 = INF\n"
    );
    let o = run(&["diameter", &two]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("not exactly connected"));
}

#[test]
fn cycles_listing_finds_edge_triangle() {
    let s = Scratch::new("cycles");
    let loopless = hg(
        6,
        &[
            &[0, 1, 2],
            &[0, 1, 2],
            &[0, 1, 3],
            &[2, 3],
            &[3, 4, 5],
            &[4, 5],
        ],
    );
    let f = s.hg("ex.hg", &loopless);
    let o = run(&["cycles", &f, "--max-len", "3"]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout(&o).lines().any(|l| l.starts_with("cycle 3 : ")),
        "{}",
        stdout(&o)
    );
}

#[test]
fn verify_elementary_echo() {
    let s = Scratch::new("verify");
    let f = s.hg("det.hg", &square_and_triple());
    let o = run(&["verify", &f, "--suite", "elementary"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("elementary.det-expansion"), "{out}");
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("elementary.config"))
            .count(),
        3
    );
    assert!(out.ends_with("result=PASS\n"), "{out}");
}

#[test]
fn verify_closed_form_profile() {
    let o = run(&[
        "verify",
        "--suite",
        "closed-form",
        "--profile",
        "2,2,2",
        "--cycle",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("t1=6\nt2=6\n"), "{out}");
    assert!(out.ends_with("result=PASS\n"), "{out}");
}

#[test]
fn verify_random_is_deterministic() {
    let args = ["verify", "--suite", "identities", "--random", "5", "6", "3"];
    let a = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, run(&args).stdout);
    assert!(stdout(&a).contains("seed=3\n"));
}

#[test]
fn generated_path_file() {
    let o = run(&["gen", "upath", "--profile", "1,1,1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("n 3\n0 1\n1 2\n"), "{out}");
    assert!(out.lines().skip(3).all(|l| l.starts_with('#')), "{out}");
    assert!(out.contains("# check closed-form.total HOLDS"), "{out}");
    assert!(!out.contains(" FAILS "), "{out}");
}

fn all_hold(out: &str) -> bool {
    let checks: Vec<&str> = out
        .lines()
        .filter(|l| l.trim_start_matches("# ").starts_with("check "))
        .collect();
    !checks.is_empty() && checks.iter().all(|l| l.contains(" HOLDS "))
}

#[test]
fn operations_hold() {
    let s = Scratch::new("ops");
    let a = s.hg("c5.hg", &c5());
    let b = s.file("k2.hg", "n 2\n0 1\n");
    let out_file = s.0.join("out.hg");
    let o = run(&[
        "op",
        "pendant",
        &a,
        "--at",
        "0",
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(all_hold(&stdout(&o)), "{}", stdout(&o));
    let written = std::fs::read_to_string(&out_file).unwrap();
    assert!(written.starts_with("n 6\n"), "{written}");

    let o = run(&["op", "union", &a, &b]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("n 7\n"), "{out}");
    assert!(all_hold(&out), "{out}");

    let o = run(&["op", "attach", &a, "--u", "0", "--v", "2", "--size", "2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(all_hold(&stdout(&o)), "{}", stdout(&o));
}

#[test]
fn parse_errors_exit_two_with_line() {
    let s = Scratch::new("parse");
    let f = s.file("bad.hg", "n 3\n0 1 x\n");
    let o = run(&["index", &f]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = run(&["index", "/nonexistent/file.hg"]);
    assert_eq!(code(&o), 2);
    let o = run(&["frobnicate"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn budget_exhaustion_is_unverified() {
    let s = Scratch::new("budget");
    let f = s.hg("c5.hg", &c5());
    let o = run_with_budget(&["verify", &f, "--suite", "elementary"], "5");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("result=UNVERIFIED\n"));
    let o = run_with_budget(&["verify", &f, "--suite", "elementary", "--strict"], "5");
    assert_eq!(code(&o), 1);
    let o = run_with_budget(&["verify", &f], "many");
    assert_eq!(code(&o), 2);
}

#[test]
fn bounds_table() {
    let s = Scratch::new("bounds");
    let f = s.hg("c5.hg", &c5());
    let o = run(&["bounds", &f]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("bound\tlhs\trhs\tstatus\tnote\n"), "{out}");
    assert!(
        out.lines().skip(1).all(|l| l.split('\t').count() == 5),
        "{out}"
    );
    assert!(!out.contains("\tFAILS\t"), "{out}");
}
