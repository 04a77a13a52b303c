use std::fs;
use std::path::Path;

use clap::Parser;
use serde_json::Value;
use transversal_lab::{run, Cli, Output, EXIT_FAILED, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_OK, EXIT_OUT_OF_CLASS};

fn lab(args: &[&str]) -> Output {
    let argv = std::iter::once("transversal-lab").chain(args.iter().copied());
    run(Cli::try_parse_from(argv).expect("valid arguments"))
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).expect("JSON on stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";
const P4: &str = "4 3\n0 1\n1 2\n2 3\n";

#[test]
fn oct_on_c4() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let out = lab(&["solve", &g, "--problem", "oct", "--class", "p4free"]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["objective"], 0);
    assert_eq!(v["algorithm"], "specialized");
    assert_eq!(v["schema_version"], 1);
    assert!(v["wall_time_ms"].is_number());
}

#[test]
fn cfvs_with_required_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let w = write(dir.path(), "w.txt", "0\n");
    let out = lab(&["solve", &g, "--problem", "cfvs", "--class", "sp1p3:1", "--extension-set", &w, "--engine", "both"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["objective"], 1);
    assert_eq!(v["solution"], serde_json::json!([0]));
    assert_eq!(v["algorithm"], "both");
}

#[test]
fn out_of_class_and_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", P4);
    let out = lab(&["solve", &p4, "--problem", "fvs", "--class", "p4free", "--engine", "specialized"]);
    assert_eq!(out.code, EXIT_OUT_OF_CLASS);
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "out-of-class");
    assert_eq!(v["error"]["certificate"].as_array().unwrap().len(), 4);

    let auto = lab(&["solve", &p4, "--problem", "fvs", "--class", "p4free"]);
    assert_eq!(auto.code, EXIT_OK);
    assert_eq!(json(&auto)["algorithm"], "oracle");

    let bad = write(dir.path(), "bad.txt", "2 1\n1 1\n");
    assert_eq!(lab(&["solve", &bad, "--problem", "vc"]).code, EXIT_INPUT);
    let missing = dir.path().join("none.txt").display().to_string();
    assert_eq!(lab(&["solve", &missing, "--problem", "vc"]).code, EXIT_INPUT);
    assert_eq!(lab(&["solve", &p4, "--problem", "vc", "--class", "nope"]).code, EXIT_INPUT);
}

#[test]
fn infeasible_extension() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "2k3.txt", "6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n");
    let out = lab(&["solve", &g, "--problem", "coct", "--engine", "both"]);
    assert_eq!(out.code, EXIT_INFEASIBLE);
    let v = json(&out);
    assert_eq!(v["feasible"], false);
    assert!(v["solution"].is_null());
}

#[test]
fn omit_timing_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let a = lab(&["solve", &g, "--problem", "coct", "--omit-timing"]);
    let b = lab(&["solve", &g, "--problem", "coct", "--omit-timing"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.contains("wall_time_ms"));
}

#[test]
fn reduce_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k3.txt", "3 3\n0 1\n0 2\n1 2\n");
    let prefix = dir.path().join("k3star").display().to_string();
    let out = lab(&["reduce", &g, "--k", "2", "--out", &prefix]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["instance"]["n"], 18);
    assert_eq!(v["budget"], 5);
    assert_eq!(v["class_certified"], true);
    let roles = fs::read_to_string(format!("{prefix}.roles")).unwrap();
    assert_eq!(roles.lines().count(), 18);

    let star = format!("{prefix}.edgelist");
    let rec = lab(&["recognize", &star, "--pattern", "P2+P5"]);
    assert_eq!(json(&rec)["free"], true);
    assert_eq!(rec.stderr, "free\n");
    let rec = lab(&["recognize", &star, "--pattern", "P5"]);
    assert_eq!(json(&rec)["free"], false);

    let oct = lab(&["solve", &star, "--problem", "oct", "--engine", "oracle"]);
    assert_eq!(json(&oct)["objective"], 5);
    let coct = lab(&["solve", &star, "--problem", "coct", "--engine", "oracle"]);
    assert_eq!(json(&coct)["objective"], 5);
}

#[test]
fn gen_is_deterministic() {
    let a = lab(&["gen", "--class", "cograph", "--n", "12", "--seed", "7"]);
    let b = lab(&["gen", "--class", "cograph", "--n", "12", "--seed", "7"]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["instance"]["n"], 12);
    let text = v["graph"].as_str().unwrap();
    assert!(text.starts_with("12 "));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.g6").display().to_string();
    let out = lab(&["gen", "--class", "sp1p3:1", "--n", "9", "--seed", "1", "--format", "graph6", "--out", &file]);
    assert_eq!(json(&out)["file"], file.as_str());
    let rec = lab(&["recognize", &file, "--pattern", "P1+P3"]);
    assert_eq!(json(&rec)["free"], true);
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let cx = dir.path().display().to_string();
    let out = lab(&["verify", "--suite", "reduction-n3", "--suite", "lemma-tree", "--s", "2", "--counterexample-dir", &cx]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["reduction-n3", "lemma-tree-s2"]);
    assert!(out.stderr.lines().all(|l| l.starts_with("PASS")));

    let out = lab(&["verify", "--suite", "p4free-exhaustive-n5", "--count", "3"]);
    assert_eq!(out.code, EXIT_OK);

    let out = lab(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn verify_reports_failures() {
    // Asking for zero random instances leaves a suite with nothing checked,
    // which counts as a failure.
    let out = lab(&["verify", "--suite", "lemma-contract", "--count", "0"]);
    assert_eq!(out.code, EXIT_FAILED);
    assert_eq!(json(&out)["suites"][0]["passed"], false);
}

#[test]
fn bench_csv() {
    let out = lab(&["bench", "--problem", "fvs", "--gen-class", "cograph", "--gen-n", "8", "--count", "3"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "instance,n,m,engine,time,objective");
    assert_eq!(lines.len(), 1 + 3 * 2);
    for pair in lines[1..].chunks(2) {
        let obj = |l: &str| l.rsplit(',').next().unwrap().to_string();
        assert!(pair[0].contains(",specialized,") && pair[1].contains(",oracle,"));
        assert_eq!(obj(pair[0]), obj(pair[1]));
    }
}

#[test]
fn json_error_on_bad_pattern() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let out = lab(&["recognize", &g, "--pattern", "Q3"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert_eq!(json(&out)["command"], "recognize");
}
