use thiserror::Error;

use crate::pattern::LinearForestPattern;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    /// No solution satisfies the constraints (distinct from an internal failure).
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// The input contains the forbidden pattern; `certificate` is an induced copy.
    #[error("graph is not {pattern}-free (induced copy on {certificate:?})")]
    NotInClass {
        pattern: LinearForestPattern,
        certificate: Vec<usize>,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Two engines disagreed on the optimum (`None` = infeasible).
    #[error("engines disagree: specialized {specialized:?}, oracle {oracle:?}")]
    EngineMismatch {
        specialized: Option<usize>,
        oracle: Option<usize>,
    },
}

impl Error {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::Infeasible(_))
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
