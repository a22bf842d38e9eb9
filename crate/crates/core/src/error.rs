use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("negative truncation order {0}")]
    NegativeOrder(i64),

    #[error("not invertible as a power series: constant term is zero")]
    NotInvertible,

    #[error("compose requires the inner series to have zero constant term")]
    InnerConstantTerm,

    #[error("no compositional inverse: series needs a(0)=0 and a(1)≠0")]
    NoCompositionalInverse,

    #[error("composita requires g(0)=0 and a nonzero series")]
    CompositaConstantTerm,

    #[error("composita order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("insufficient order: {required} rows required, {available} available")]
    InsufficientOrder { required: usize, available: usize },

    #[error("target order must be at least 1")]
    EmptyTarget,

    #[error("reciprocal composita formula requires b(0)=1; normalize first")]
    NonUnitDiagonal,

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("functional equation solver requires h(0)≠0")]
    LagrangeConstantTerm,

    #[error("central inverse requires F(0)≠0")]
    CentralConstantTerm,

    #[error("round-trip check failed: {0}")]
    RoundTrip(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("builtin `{name}` takes {expected} parameter(s), got {got}")]
    BuiltinArity {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("{path}: {message} at line {line}")]
    BFile {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("b-file values must be integers; {value} at index {index} is not (use --format csv)")]
    NonIntegerValue { index: i64, value: String },

    #[error("unsupported format `{format}` for {what}")]
    UnsupportedFormat { format: String, what: &'static str },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
