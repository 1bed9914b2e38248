use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("image {value} at position {index} is out of range for n = {n}")]
    OutOfRange {
        index: usize,
        value: usize,
        n: usize,
    },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("vertex {0} does not lie on a cycle")]
    NotACycleVertex(usize),

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("target cycle length {target} does not divide source cycle length {source_len}")]
    DivisibilityViolation { source_len: usize, target: usize },

    #[error("map is not a homomorphism at vertex {0}")]
    NotAHomomorphism(usize),

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("function is not bijective")]
    NotBijective,

    #[error("functions do not commute")]
    NotCommuting,

    #[error("{what}: {candidates} candidates exceed the bound (n = {n}, max n = {max_n})")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        max_n: usize,
        candidates: String,
    },

    #[error("bad family parameters: {0}")]
    BadParams(String),

    #[error("infeasible cycle multiset: {0}")]
    InfeasibleCycles(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
