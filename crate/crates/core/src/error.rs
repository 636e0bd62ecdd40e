use thiserror::Error;

use crate::solver::SolveReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable `{name}` has lower bound {lower} above upper bound {upper}")]
    InfeasibleBounds { name: String, lower: f64, upper: f64 },

    #[error("row `{row}` references undeclared variable index {var}")]
    UndeclaredVariable { row: String, var: usize },

    #[error("shape mismatch in {what}: expected {expected}, found {found}")]
    Shape {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("pivot element at ({row}, {col}) is {value:e}, within tolerance of zero")]
    ZeroPivot { row: usize, col: usize, value: f64 },

    #[error("tableau is not terminal: {scheme} pivot available at ({row}, {col})")]
    NotTerminal {
        scheme: &'static str,
        row: usize,
        col: usize,
    },

    #[error("iteration limit of {limit} reached")]
    IterationLimit { limit: usize, partial: Box<SolveReport> },

    #[error("invalid scheme order: {0}")]
    SchemeOrder(String),

    #[error("problem too large for exhaustive enumeration: m + n = {size} exceeds {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("line {line}: unknown section `{name}`")]
    UnknownSection { line: usize, name: String },

    #[error("line {line}: duplicate row `{name}`")]
    DuplicateRow { line: usize, name: String },

    #[error("line {line}: reference to undeclared {kind} `{name}`")]
    UndeclaredReference {
        line: usize,
        kind: &'static str,
        name: String,
    },

    #[error("line {line}: malformed number `{token}`")]
    MalformedNumber { line: usize, token: String },

    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("MPS input has no objective (N) row")]
    MissingObjective,
}
