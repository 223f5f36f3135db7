use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("incompatible radicands: {0} and {1}")]
    IncompatibleRadicands(String, String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid network: {0}")]
    Validation(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("node `{0}` is not a 2j-node")]
    NotATwoJNode(String),

    #[error("degenerate configuration: {0}")]
    DegenerateConfig(String),

    #[error("empty range: {0}")]
    EmptyRange(String),

    #[error("point is not classically allowed ({0})")]
    NotAllowed(String),

    #[error("empty level set: {0}")]
    EmptyLevelSet(String),

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
