//! JSON documents written to standard output.

use serde::Serialize;
use transversal_core::dispatch::{ClassCertificate, SolveOutcome};
use transversal_core::{Graph, Problem, VertexSet};

use crate::input::digest;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceInfo {
    pub digest: String,
    pub n: usize,
    pub m: usize,
}

impl InstanceInfo {
    pub fn of(g: &Graph) -> Self {
        InstanceInfo {
            digest: digest(g),
            n: g.n(),
            m: g.m(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RejectionInfo {
    pub class: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub requested: String,
    pub certified: Option<String>,
    pub rejected: Vec<RejectionInfo>,
}

impl From<&ClassCertificate> for ClassInfo {
    fn from(c: &ClassCertificate) -> Self {
        ClassInfo {
            requested: c.requested.to_string(),
            certified: c.certified.map(|k| k.to_string()),
            rejected: c
                .rejected
                .iter()
                .map(|r| RejectionInfo {
                    class: r.class.to_string(),
                    witness: r.witness.clone(),
                })
                .collect(),
        }
    }
}

/// Result of `solve`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub problem: String,
    pub algorithm: String,
    pub instance: InstanceInfo,
    pub extension_set: Vec<usize>,
    pub feasible: bool,
    pub solution: Option<Vec<usize>>,
    pub objective: Option<usize>,
    pub class: ClassInfo,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl RunReport {
    pub fn new(g: &Graph, problem: Problem, w: VertexSet, out: &SolveOutcome, seed: u64) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: "solve",
            problem: problem.name().to_string(),
            algorithm: out.algorithm.name().to_string(),
            instance: InstanceInfo::of(g),
            extension_set: w.to_vec(),
            feasible: out.solution.is_some(),
            solution: out.solution.as_ref().map(|s| s.vertices.to_vec()),
            objective: out.solution.as_ref().map(|s| s.objective()),
            class: ClassInfo::from(&out.class),
            seed,
            wall_time_ms: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub passed: bool,
    pub counterexample_file: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReduceReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub source: InstanceInfo,
    pub k: usize,
    pub budget: usize,
    pub instance: InstanceInfo,
    pub instance_file: String,
    pub role_file: String,
    pub class_certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognizeReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub instance: InstanceInfo,
    pub pattern: String,
    pub free: bool,
    pub certificate: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub class: String,
    pub seed: u64,
    pub density: f64,
    pub connected: bool,
    pub instance: InstanceInfo,
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorReport {
    pub schema_version: u32,
    pub command: String,
    pub error: ErrorInfo,
}
