//! `transversal-lab`: solve, verify, reduce, recognize, generate and
//! benchmark from the command line.
//!
//! Every command writes one JSON document to standard output (except
//! `bench`, which writes CSV) and a short human summary to standard error.
//!
//! Exit codes: 0 success, 1 failed verification or engine mismatch,
//! 2 infeasible, 3 input outside the requested class, 4 input error.

pub mod input;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use transversal_core::dispatch::{self, Algorithm, ClassChoice, EngineChoice};
use transversal_core::genio::{random_in_class, GeneratorSpec, GraphClass, SplitMix64};
use transversal_core::pattern::find_induced;
use transversal_core::reduction::{build_reduction, certify_class, VcInstance};
use transversal_core::suites::{self, SuiteParams};
use transversal_core::{Error, Graph, LinearForestPattern, Problem, VertexSet};

use input::{parse_graph, parse_vertex_list, read_text, write_graph, Format};
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_OUT_OF_CLASS: i32 = 3;
pub const EXIT_INPUT: i32 = 4;

/// Environment variable capping worker threads for `verify` and `bench`.
pub const THREADS_ENV: &str = "TRANSVERSAL_LAB_THREADS";

#[derive(Debug, Parser)]
#[command(name = "transversal-lab", version, about = "Cycle transversal toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    Vc,
    Cvc,
    Fvs,
    Cfvs,
    Oct,
    Coct,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Vc => Problem::Vc,
            ProblemArg::Cvc => Problem::CvcExt,
            ProblemArg::Fvs => Problem::Fvs,
            ProblemArg::Cfvs => Problem::CfvsExt,
            ProblemArg::Oct => Problem::Oct,
            ProblemArg::Coct => Problem::CoctExt,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Specialized,
    Oracle,
    Both,
}

impl From<EngineArg> for EngineChoice {
    fn from(e: EngineArg) -> EngineChoice {
        match e {
            EngineArg::Auto => EngineChoice::Auto,
            EngineArg::Specialized => EngineChoice::Specialized,
            EngineArg::Oracle => EngineChoice::Oracle,
            EngineArg::Both => EngineChoice::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a transversal problem on one graph.
    Solve {
        /// Graph file (edge list or graph6); `-` reads standard input.
        input: PathBuf,
        #[arg(long, value_enum)]
        problem: ProblemArg,
        /// File listing the vertices the solution must contain.
        #[arg(long)]
        extension_set: Option<PathBuf>,
        /// `auto`, `p4free`, `sp1p3:<s>` or `sp1p5:<s>`.
        #[arg(long, default_value = "auto")]
        class: String,
        #[arg(long, value_enum, default_value = "auto")]
        engine: EngineArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        /// Leave out the wall time so identical runs print identical bytes.
        #[arg(long)]
        omit_timing: bool,
    },
    /// Run verification suites.
    Verify {
        /// Suite name, optionally with a `-n<k>` size suffix. Repeatable.
        #[arg(long, required = true)]
        suite: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Where the first counterexample of each failing suite is written.
        #[arg(long, default_value = ".")]
        counterexample_dir: PathBuf,
    },
    /// Build the odd cycle transversal instance for a vertex cover instance.
    Reduce {
        input: PathBuf,
        /// Vertex cover budget; defaults to the number of vertices.
        #[arg(long)]
        k: Option<usize>,
        /// Output prefix: writes `<out>.edgelist` and `<out>.roles`.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Test a graph for an induced linear forest such as `P2+P5` or `3P1+P3`.
    Recognize {
        input: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Generate a random graph of a class.
    Gen {
        /// `any`, `cograph`, `bipartite`, `sp1p3:<s>` or `sp1p5:<s>`.
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        /// Write the graph here instead of embedding it in the JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time solvers and print CSV: instance, n, m, engine, time (seconds), objective.
    Bench {
        /// Graph files; if none are given, random graphs are generated.
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long, default_value = "auto")]
        class: String,
        /// `both` times the specialized solver and the oracle separately.
        #[arg(long, value_enum, default_value = "both")]
        engine: EngineArg,
        #[arg(long, default_value = "any")]
        gen_class: String,
        #[arg(long, default_value_t = 10)]
        gen_n: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
    },
}

/// What a command produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    info: ErrorInfo,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        let (code, kind, pattern, certificate) = match e {
            Error::NotInClass { pattern, certificate } => {
                (EXIT_OUT_OF_CLASS, "out-of-class", Some(pattern.to_string()), Some(certificate))
            }
            Error::Infeasible(_) => (EXIT_INFEASIBLE, "infeasible", None, None),
            Error::EngineMismatch { .. } => (EXIT_FAILED, "engine-mismatch", None, None),
            _ => (EXIT_INPUT, "input", None, None),
        };
        Failure {
            code,
            info: ErrorInfo {
                kind,
                message,
                pattern,
                certificate,
            },
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        info: ErrorInfo {
            kind: "io",
            message: format!("{}: {e}", path.display()),
            pattern: None,
            certificate: None,
        },
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn load(path: &Path, format: Format) -> Result<Graph, Failure> {
    let text = read_text(path).map_err(|e| io_failure(path, e))?;
    Ok(parse_graph(&text, format)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

/// A thread pool sized by `TRANSVERSAL_LAB_THREADS` when set.
pub fn pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve { .. } => "solve",
        Command::Verify { .. } => "verify",
        Command::Reduce { .. } => "reduce",
        Command::Recognize { .. } => "recognize",
        Command::Gen { .. } => "gen",
        Command::Bench { .. } => "bench",
    }
}

pub fn run(cli: Cli) -> Output {
    let name = command_name(&cli.command);
    let result = match cli.command {
        Command::Solve {
            input,
            problem,
            extension_set,
            class,
            engine,
            seed,
            format,
            omit_timing,
        } => solve(&input, problem.into(), extension_set.as_deref(), &class, engine.into(), seed, format, omit_timing),
        Command::Verify {
            suite,
            n,
            s,
            count,
            seed,
            counterexample_dir,
        } => verify(&suite, SuiteParams { n, s, count, seed }, &counterexample_dir),
        Command::Reduce { input, k, out, format } => reduce(&input, k, &out, format),
        Command::Recognize { input, pattern, format } => recognize(&input, &pattern, format),
        Command::Gen {
            class,
            n,
            seed,
            density,
            connected,
            format,
            out,
        } => gen(&class, n, seed, density, connected, format, out.as_deref()),
        Command::Bench {
            inputs,
            problem,
            class,
            engine,
            gen_class,
            gen_n,
            count,
            seed,
            repeat,
        } => bench(&inputs, problem.into(), &class, engine, &gen_class, gen_n, count, seed, repeat),
    };
    result.unwrap_or_else(|f| Output {
        stdout: json(&ErrorReport {
            schema_version: SCHEMA_VERSION,
            command: name.to_string(),
            error: f.info.clone(),
        }),
        stderr: format!("error: {}\n", f.info.message),
        code: f.code,
    })
}

#[allow(clippy::too_many_arguments)]
fn solve(
    input: &Path,
    problem: Problem,
    extension_set: Option<&Path>,
    class: &str,
    engine: EngineChoice,
    seed: u64,
    format: Format,
    omit_timing: bool,
) -> Result<Output, Failure> {
    let g = load(input, format)?;
    let w = match extension_set {
        Some(p) => parse_vertex_list(&read_text(p).map_err(|e| io_failure(p, e))?, g.n())?,
        None => VertexSet::EMPTY,
    };
    let class: ClassChoice = class.parse()?;
    let start = Instant::now();
    let out = dispatch::solve(&g, problem, w, class, engine)?;
    let elapsed = start.elapsed();
    let mut rep = RunReport::new(&g, problem, w, &out, seed);
    if !omit_timing {
        rep.wall_time_ms = Some(elapsed.as_secs_f64() * 1e3);
    }
    let class_text = rep.class.certified.clone().unwrap_or_else(|| "no supported class".into());
    let (stderr, code) = match &out.solution {
        Some(sol) => (
            format!(
                "{problem}: objective {} via {} ({class_text}), solution {}\n",
                sol.objective(),
                out.algorithm.name(),
                sol.vertices
            ),
            EXIT_OK,
        ),
        None => (format!("{problem}: infeasible ({})\n", out.algorithm.name()), EXIT_INFEASIBLE),
    };
    Ok(Output {
        stdout: json(&rep),
        stderr,
        code,
    })
}

fn verify(names: &[String], params: SuiteParams, dir: &Path) -> Result<Output, Failure> {
    let reports: Vec<_> = pool().install(|| {
        names
            .par_iter()
            .map(|name| (name.clone(), suites::run_suite(name, &params)))
            .collect()
    });
    let mut results = Vec::new();
    let mut stderr = String::new();
    for (name, rep) in reports {
        let rep = rep?;
        let mut file = None;
        if let Some(c) = &rep.first_failure {
            fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
            let path = dir.join(format!("{}.counterexample.txt", rep.name));
            write_file(&path, &c.to_text())?;
            file = Some(path.display().to_string());
        }
        stderr += &format!("{} {rep}\n", if rep.passed() { "PASS" } else { "FAIL" });
        results.push(SuiteResult {
            name: if rep.name.is_empty() { name } else { rep.name.clone() },
            checked: rep.checked,
            failed: rep.failed,
            passed: rep.passed(),
            counterexample_file: file,
        });
    }
    let passed = results.iter().all(|r| r.passed);
    Ok(Output {
        stdout: json(&VerifyReport {
            schema_version: SCHEMA_VERSION,
            command: "verify",
            seed: params.seed,
            suites: results,
            passed,
        }),
        stderr,
        code: if passed { EXIT_OK } else { EXIT_FAILED },
    })
}

fn reduce(input: &Path, k: Option<usize>, out: &Path, format: Format) -> Result<Output, Failure> {
    let g = load(input, format)?;
    let k = k.unwrap_or(g.n());
    let inst = build_reduction(&VcInstance::new(g.clone(), k)?);
    let instance_file = PathBuf::from(format!("{}.edgelist", out.display()));
    let role_file = PathBuf::from(format!("{}.roles", out.display()));
    write_file(&instance_file, &write_graph(&inst.gstar, Format::Edgelist))?;
    write_file(&role_file, &inst.roles_text())?;
    let rep = ReduceReport {
        schema_version: SCHEMA_VERSION,
        command: "reduce",
        source: InstanceInfo::of(&g),
        k,
        budget: inst.budget,
        instance: InstanceInfo::of(&inst.gstar),
        instance_file: instance_file.display().to_string(),
        role_file: role_file.display().to_string(),
        class_certified: certify_class(&inst),
    };
    Ok(Output {
        stderr: format!(
            "reduced {} vertices to {} vertices with budget {}\n",
            g.n(),
            inst.gstar.n(),
            inst.budget
        ),
        stdout: json(&rep),
        code: EXIT_OK,
    })
}

fn recognize(input: &Path, pattern: &str, format: Format) -> Result<Output, Failure> {
    let g = load(input, format)?;
    let pattern: LinearForestPattern = pattern.parse()?;
    let copy = find_induced(&g, &pattern).map(|c| c.vertices());
    let stderr = match &copy {
        None => "free\n".to_string(),
        Some(c) => format!("contains {pattern} on {c:?}\n"),
    };
    Ok(Output {
        stdout: json(&RecognizeReport {
            schema_version: SCHEMA_VERSION,
            command: "recognize",
            instance: InstanceInfo::of(&g),
            pattern: pattern.to_string(),
            free: copy.is_none(),
            certificate: copy,
        }),
        stderr,
        code: EXIT_OK,
    })
}

fn gen(
    class: &str,
    n: usize,
    seed: u64,
    density: f64,
    connected: bool,
    format: Format,
    out: Option<&Path>,
) -> Result<Output, Failure> {
    let class: GraphClass = class.parse()?;
    let spec = GeneratorSpec::new(class, n, seed).density(density).connected(connected);
    let g = random_in_class(&spec)?;
    let format = if format == Format::Auto { Format::Edgelist } else { format };
    let text = write_graph(&g, format);
    if let Some(p) = out {
        write_file(p, &text)?;
    }
    let rep = GenReport {
        schema_version: SCHEMA_VERSION,
        command: "gen",
        class: class.to_string(),
        seed,
        density,
        connected,
        instance: InstanceInfo::of(&g),
        format: format!("{format:?}").to_lowercase(),
        file: out.map(|p| p.display().to_string()),
        graph: if out.is_none() { Some(text) } else { None },
    };
    Ok(Output {
        stderr: format!("generated {class} graph with {} vertices and {} edges\n", g.n(), g.m()),
        stdout: json(&rep),
        code: EXIT_OK,
    })
}

#[derive(Debug, Serialize)]
struct BenchRow {
    instance: String,
    n: usize,
    m: usize,
    engine: String,
    time: f64,
    objective: Option<usize>,
}

#[allow(clippy::too_many_arguments)]
fn bench(
    inputs: &[PathBuf],
    problem: Problem,
    class: &str,
    engine: EngineArg,
    gen_class: &str,
    gen_n: usize,
    count: usize,
    seed: u64,
    repeat: usize,
) -> Result<Output, Failure> {
    let class: ClassChoice = class.parse()?;
    let mut instances = Vec::new();
    if inputs.is_empty() {
        let gclass: GraphClass = gen_class.parse()?;
        let mut rng = SplitMix64::new(seed);
        for i in 0..count {
            let spec = GeneratorSpec::new(gclass, gen_n, rng.next_u64()).density(rng.next_f64());
            instances.push((format!("gen-{i}"), random_in_class(&spec)?));
        }
    } else {
        for p in inputs {
            instances.push((p.display().to_string(), load(p, Format::Auto)?));
        }
    }
    let engines: Vec<EngineChoice> = match engine {
        EngineArg::Both => vec![EngineChoice::Specialized, EngineChoice::Oracle],
        e => vec![e.into()],
    };
    let rows: Vec<Result<Vec<BenchRow>, Failure>> = pool().install(|| {
        instances
            .par_iter()
            .map(|(name, g)| {
                let mut rows = Vec::new();
                for &e in &engines {
                    let mut best = f64::INFINITY;
                    let mut last = None;
                    for _ in 0..repeat.max(1) {
                        let start = Instant::now();
                        let out = dispatch::solve(g, problem, VertexSet::EMPTY, class, e)?;
                        best = best.min(start.elapsed().as_secs_f64());
                        last = Some(out);
                    }
                    let out = last.expect("at least one repetition");
                    let label = match out.algorithm {
                        Algorithm::Both => "both",
                        a => a.name(),
                    };
                    rows.push(BenchRow {
                        instance: name.clone(),
                        n: g.n(),
                        m: g.m(),
                        engine: label.to_string(),
                        time: best,
                        objective: out.solution.map(|s| s.objective()),
                    });
                }
                Ok(rows)
            })
            .collect()
    });
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut total = 0;
    for r in rows {
        for row in r? {
            writer.serialize(&row).expect("csv to memory");
            total += 1;
        }
    }
    let bytes = writer.into_inner().expect("csv flush");
    Ok(Output {
        stdout: String::from_utf8(bytes).expect("csv is utf-8"),
        stderr: format!("{total} timings over {} instances\n", instances.len()),
        code: EXIT_OK,
    })
}
