use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("square class of zero undefined")]
    ZeroSquareClass,
    #[error("no ordering on {0}")]
    NoOrdering(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("not pointed at infinity: {0}")]
    NotPointed(String),
    #[error("constant map")]
    ConstantMap,
    #[error("split data inconsistent: {0}")]
    SplitDataInconsistent(String),
    #[error("requires split roots: {0}")]
    RequiresSplitRoots(String),
    #[error("degenerate form")]
    DegenerateForm,
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
