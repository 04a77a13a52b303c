//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use transversal_core::suites::{self, SuiteReport};
use transversal_core::Result;

const SEED: u64 = 2024;

fn merge(name: &str, parts: Vec<Result<SuiteReport>>) -> std::result::Result<SuiteReport, String> {
    let mut all = SuiteReport {
        name: name.to_string(),
        checked: 0,
        failed: 0,
        first_failure: None,
    };
    for p in parts {
        let p = p.map_err(|e| e.to_string())?;
        eprintln!("    {} {p}", if p.passed() { "ok  " } else { "FAIL" });
        if p.checked == 0 {
            // A part that checked nothing counts as a failure.
            all.failed += 1;
        }
        all.absorb(p);
    }
    Ok(all)
}

fn p4free() -> std::result::Result<SuiteReport, String> {
    merge("P4-free solvers vs oracle, n<=7, 30 random W", vec![suites::p4free_exhaustive(7, 30, SEED)])
}

fn sp1p3() -> std::result::Result<SuiteReport, String> {
    let mut parts = Vec::new();
    for s in 0..=2 {
        parts.push(suites::sp1p3_exhaustive(s, 7, SEED + s as u64));
        parts.push(suites::sp1p3_random(s, 300, 11, 10, SEED + 10 + s as u64));
    }
    merge("(sP1+P3)-free solvers vs oracle, s in 0..=2", parts)
}

fn lemmas() -> std::result::Result<SuiteReport, String> {
    let mut parts = vec![
        suites::lemma_split(7, 200, 16, SEED),
        suites::lemma_components(&[0, 1, 2, 3], 7),
    ];
    for s in 0..=3 {
        parts.push(suites::lemma_tree(s, 12, 8));
    }
    for s in 1..=2 {
        parts.push(suites::lemma_connector(s, 500, 12, SEED + s as u64));
    }
    parts.push(suites::lemma_contract(500, 12, SEED));
    merge("structural lemmas", parts)
}

fn reduction() -> std::result::Result<SuiteReport, String> {
    merge("reduction equivalence, n<=4, 50 random n=8", vec![suites::reduction(4, 3, 50, 8, SEED)])
}

fn oracle() -> std::result::Result<SuiteReport, String> {
    merge("oracle self-consistency, n<=7", vec![suites::oracle_consistency(7)])
}

fn pipeline() -> std::result::Result<SuiteReport, String> {
    merge(
        "connected vertex cover pipeline",
        vec![suites::pipeline_exhaustive(7, SEED), suites::pipeline_random(1, 200, 12, SEED)],
    )
}

fn lab(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_transversal-lab"))
        .args(args)
        .output()
        .expect("run transversal-lab");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn without_timing(bytes: &[u8]) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_slice(bytes).expect("JSON on stdout");
    if let Some(obj) = v.as_object_mut() {
        obj.remove("wall_time_ms");
    }
    v
}

fn determinism() -> std::result::Result<SuiteReport, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = |name: &str| dir.path().join(name).display().to_string();
    let mut rep = SuiteReport {
        name: "identical runs give identical JSON".into(),
        checked: 0,
        failed: 0,
        first_failure: None,
    };
    let mut record = |ok: bool, what: String| {
        rep.checked += 1;
        if !ok {
            rep.failed += 1;
            eprintln!("    differs: {what}");
        }
    };
    let mut graphs = Vec::new();
    for (class, n, seed) in [("cograph", 12, 7), ("sp1p3:1", 10, 3), ("sp1p3:2", 9, 5), ("any", 8, 11)] {
        let file = d(&format!("{class}-{n}-{seed}.txt").replace(':', "_"));
        let args = ["gen", "--class", class, "--n", &n.to_string(), "--seed", &seed.to_string(), "--connected", "--out", &file];
        let (a, _) = lab(&args);
        let first = std::fs::read(&file).map_err(|e| e.to_string())?;
        let (b, _) = lab(&args);
        let second = std::fs::read(&file).map_err(|e| e.to_string())?;
        record(a == b && first == second, format!("gen {class}"));
        graphs.push(file);
    }
    std::fs::write(d("w.txt"), "0\n").map_err(|e| e.to_string())?;
    for g in &graphs {
        for problem in ["vc", "cvc", "fvs", "cfvs", "oct", "coct"] {
            for ext in [None, Some(d("w.txt"))] {
                let mut args = vec!["solve", g.as_str(), "--problem", problem, "--seed", "9"];
                if let Some(w) = &ext {
                    args.extend(["--extension-set", w.as_str()]);
                }
                let (a, ca) = lab(&args);
                let (b, cb) = lab(&args);
                record(
                    ca == cb && (ca == 0 || ca == 2) && without_timing(&a) == without_timing(&b),
                    format!("solve {g} {problem}"),
                );
                args.push("--omit-timing");
                let (a, _) = lab(&args);
                let (b, _) = lab(&args);
                record(a == b, format!("solve --omit-timing {g} {problem}"));
            }
        }
        let (a, _) = lab(&["recognize", g, "--pattern", "P2+P5"]);
        let (b, _) = lab(&["recognize", g, "--pattern", "P2+P5"]);
        record(a == b, format!("recognize {g}"));
    }
    let (a, _) = lab(&["reduce", &graphs[3], "--k", "3", "--out", &d("red")]);
    let first = std::fs::read(d("red.edgelist")).map_err(|e| e.to_string())?;
    let (b, _) = lab(&["reduce", &graphs[3], "--k", "3", "--out", &d("red")]);
    let second = std::fs::read(d("red.edgelist")).map_err(|e| e.to_string())?;
    record(a == b && first == second, "reduce".into());
    let (a, _) = lab(&["solve", &d("red.edgelist"), "--problem", "oct", "--omit-timing"]);
    let (b, _) = lab(&["solve", &d("red.edgelist"), "--problem", "oct", "--omit-timing"]);
    record(a == b, "solve on the reduction output".into());
    Ok(rep)
}

type Criterion = fn() -> std::result::Result<SuiteReport, String>;

fn main() {
    // `cargo test -- <filter>` style arguments are ignored; everything runs.
    let criteria: [(u32, Criterion); 7] = [
        (1, p4free),
        (2, sp1p3),
        (3, lemmas),
        (4, reduction),
        (5, oracle),
        (6, pipeline),
        (7, determinism),
    ];
    let mut failed = 0;
    let mut lines = Vec::new();
    for (id, run) in criteria {
        let start = Instant::now();
        let line = match run() {
            Ok(rep) if rep.passed() => format!("criterion {id} PASS {rep} [{:.1}s]", start.elapsed().as_secs_f64()),
            Ok(rep) => {
                failed += 1;
                if let Some(c) = &rep.first_failure {
                    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(format!("criterion-{id}.counterexample.txt"));
                    let _ = std::fs::write(&path, c.to_text());
                }
                format!("criterion {id} FAIL {rep} [{:.1}s]", start.elapsed().as_secs_f64())
            }
            Err(e) => {
                failed += 1;
                format!("criterion {id} FAIL error: {e}")
            }
        };
        println!("{line}");
        lines.push(line);
    }
    println!();
    for line in &lines {
        println!("{line}");
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
