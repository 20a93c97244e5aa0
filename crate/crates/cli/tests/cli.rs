use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Sandbox {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_dismatch"))
            .current_dir(self.dir.path())
            .args(args)
            .output()
            .unwrap()
    }
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn dimacs(n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("p edge {n} {}\n", edges.len());
    for (u, v) in edges {
        s += &format!("e {u} {v}\n");
    }
    s
}

const SAMPLE: &str = r#"{"ground_size":6,"triples":[[0,1,2],[0,1,3],[0,1,4],[3,4,5]]}"#;

#[test]
fn compute_profile_of_two_k2() {
    let s = Sandbox::new();
    s.file("g.col", &dimacs(4, &[(1, 2), (3, 4)]));
    let o = s.run(&["compute", "g.col", "--what", "profile"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        json(&o),
        serde_json::json!({"nu":2,"nu_s":2,"nu_d":2,"chain":[2,2]})
    );
}

#[test]
fn compute_single_quantities() {
    let s = Sandbox::new();
    let k4 = dimacs(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    s.file("k4.col", &k4);
    for flag in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["compute", "k4.col", "--what", "nu_d"];
        args.extend_from_slice(flag);
        let o = s.run(&args);
        assert_eq!(code(&o), 0);
        assert_eq!(json(&o), serde_json::json!({"nu_d":0}));
    }
    let o = s.run(&["compute", "k4.col", "--what", "nu"]);
    assert_eq!(json(&o)["nu"], 2);
}

#[test]
fn compute_reports_budget_exhaustion() {
    let s = Sandbox::new();
    let o = s.run(&[
        "gen", "--n", "30", "--m", "60", "--seed", "3", "-o", "big.col",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = s.run(&["compute", "big.col", "--what", "nu_d", "--budget", "10"]);
    assert_eq!(code(&o), 2);
    assert!(
        stderr(&o).to_lowercase().contains("budget"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn compute_rejects_malformed_input() {
    let s = Sandbox::new();
    s.file("bad.col", "p edge 3 1\ne 1 9\n");
    assert_eq!(code(&s.run(&["compute", "bad.col"])), 2);
    s.file("g.json", r#"{"n":2,"edges":[[0,1]]}"#);
    // forcing the wrong format is a parse error, not a silent misread
    assert_eq!(
        code(&s.run(&["--format", "dimacs", "compute", "g.json"])),
        2
    );
}

#[test]
fn json_graphs_are_sniffed_by_extension() {
    let s = Sandbox::new();
    let o = s.run(&[
        "--format", "json", "gen", "--n", "6", "--m", "5", "--seed", "2", "-o", "g.json",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = s.run(&["compute", "g.json", "--what", "nu"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn decide_exit_codes() {
    let s = Sandbox::new();
    // two K2 plus a vertex adjacent to everything
    s.file(
        "hub.col",
        &dimacs(5, &[(1, 2), (3, 4), (5, 1), (5, 2), (5, 3), (5, 4)]),
    );
    let o = s.run(&["decide", "hub.col", "--question", "nu-nudj", "--j", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["equal"], true);
    assert_eq!(v["witness"]["vertex"], 4);

    s.file("p4.col", &dimacs(4, &[(1, 2), (2, 3), (3, 4)]));
    let o = s.run(&["decide", "p4.col", "--question", "cw"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["cameron_walker"], false);

    s.file("p5.col", &dimacs(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]));
    let o = s.run(&["decide", "p5.col", "--question", "nu-nudj", "--j", "2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("diameter exceeds 3"), "{}", stderr(&o));
}

#[test]
fn decide_other_questions() {
    let s = Sandbox::new();
    s.file("k2.col", &dimacs(2, &[(1, 2)]));
    let o = s.run(&["decide", "k2.col", "--question", "nu-nus"]);
    assert_eq!(
        (code(&o), json(&o)["equal"].clone()),
        (0, Value::Bool(true))
    );
    let o = s.run(&["decide", "k2.col", "--question", "cw"]);
    assert_eq!(code(&o), 0);

    s.file("p4.col", &dimacs(4, &[(1, 2), (2, 3), (3, 4)]));
    let o = s.run(&["decide", "p4.col", "--question", "nu-nus"]);
    assert_eq!(code(&o), 1);
    let o = s.run(&["decide", "p4.col", "--question", "nud-nus-bounded"]);
    assert!(matches!(code(&o), 0 | 1), "{}", stderr(&o));
}

#[test]
fn reduce_sample_with_witness() {
    let s = Sandbox::new();
    s.file("sample.json", SAMPLE);
    let o = s.run(&["reduce", "sample.json", "--target", "diam4", "--witness"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["artifact"]["predicted_nu"], 14);
    assert_eq!(v["witness"]["size"], 14);
    assert_eq!(v["witness"]["disconnected"], true);
    assert_eq!(v["witness"]["maximum"], true);
    assert_eq!(v["cover"], serde_json::json!([0, 3]));
}

#[test]
fn reduce_no_instance_exits_one() {
    let s = Sandbox::new();
    s.file(
        "no.json",
        r#"{"ground_size":6,"triples":[[0,1,2],[2,3,4],[1,4,5]]}"#,
    );
    let o = s.run(&["reduce", "no.json", "--target", "diam4", "--witness"]);
    assert_eq!(code(&o), 1);
    assert!(json(&o)["cover"].is_null());
    // without --witness the artifact is built regardless of the answer
    assert_eq!(code(&s.run(&["reduce", "no.json", "--target", "diam4"])), 0);
}

#[test]
fn reduce_subcubic() {
    let s = Sandbox::new();
    s.file("sample.json", SAMPLE);
    let o = s.run(&["reduce", "sample.json", "--target", "subcubic"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["metadata"]["Q"], 10);
    assert_eq!(v["metadata"]["Q_prime"], 14);

    let o = s.run(&["reduce", "sample.json", "--target", "subcubic", "--witness"]);
    assert_eq!(json(&o)["witness"]["maximum"], true);

    s.file("q1.json", r#"{"ground_size":3,"triples":[[0,1,2]]}"#);
    let o = s.run(&["reduce", "q1.json", "--target", "subcubic"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn reduce_padded_targets() {
    let s = Sandbox::new();
    s.file("sample.json", SAMPLE);
    let o = s.run(&[
        "reduce",
        "sample.json",
        "--target",
        "nudi",
        "--i",
        "3",
        "--witness",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["witness"]["maximum"], true);
    let o = s.run(&[
        "reduce",
        "sample.json",
        "--target",
        "nuij",
        "--i",
        "2",
        "--j",
        "4",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    // missing parameter
    assert_eq!(
        code(&s.run(&["reduce", "sample.json", "--target", "nudi"])),
        2
    );
    s.file("bad.json", r#"{"ground_size":6,"triples":[[0,1,9]]}"#);
    assert_eq!(
        code(&s.run(&["reduce", "bad.json", "--target", "diam4"])),
        2
    );
}

#[test]
fn reduce_conp() {
    let s = Sandbox::new();
    s.file("base.col", &dimacs(4, &[(1, 2), (3, 4)]));
    let o = s.run(&[
        "reduce", "--target", "conp", "--base", "base.col", "--k", "3",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["graph"]["n"], 8);

    s.file("three.col", &dimacs(6, &[(1, 2), (3, 4), (5, 6)]));
    let o = s.run(&[
        "reduce",
        "--target",
        "conp",
        "--base",
        "three.col",
        "--k",
        "3",
    ]);
    assert_eq!(code(&o), 2);
    let o = s.run(&["reduce", "--target", "conp", "--k", "3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn construct_sequence_commands() {
    let s = Sandbox::new();
    s.file("b42.json", r#"{"betas":[4,2]}"#);
    let o = s.run(&["construct-sequence", "b42.json", "--verify"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["verified"], true);

    s.file("b22.json", r#"{"betas":[2,2]}"#);
    let o = s.run(&["construct-sequence", "b22.json"]);
    let v = json(&o);
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);

    s.file("bad.json", r#"{"betas":[2,3]}"#);
    assert_eq!(code(&s.run(&["construct-sequence", "bad.json"])), 2);
}

#[test]
fn verify_matchings() {
    let s = Sandbox::new();
    s.file("p4.col", &dimacs(4, &[(1, 2), (2, 3), (3, 4)]));
    s.file("ends.json", "[[0,1],[2,3]]");
    let o = s.run(&["verify", "p4.col", "--matching", "ends.json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["size"], 2);
    assert_eq!(v["components"], 1);
    assert_eq!(v["maximal"], true);
    assert_eq!(
        code(&s.run(&["verify", "p4.col", "--matching", "ends.json", "--c", "2"])),
        1
    );

    s.file("bogus.json", "[[0,2]]");
    assert_eq!(
        code(&s.run(&["verify", "p4.col", "--matching", "bogus.json"])),
        2
    );
}

#[test]
fn gen_is_deterministic_and_honors_constraints() {
    let s = Sandbox::new();
    let a = s.run(&["gen", "--n", "8", "--m", "10", "--seed", "7"]);
    let b = s.run(&["gen", "--n", "8", "--m", "10", "--seed", "7"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);

    assert_eq!(code(&s.run(&["gen", "--n", "5", "--m", "11"])), 2);

    let o = s.run(&[
        "gen",
        "--n",
        "6",
        "--m",
        "6",
        "--bipartite",
        "--seed",
        "1",
        "-o",
        "bip.col",
    ]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(s.dir.path().join("bip.col")).unwrap();
    let g = dismatch_core::io::read_dimacs(&text).unwrap();
    assert_eq!(g.m(), 6);
    assert!(g.bipartition().is_ok());
}
