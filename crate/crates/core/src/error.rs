use thiserror::Error;

/// Errors raised while building or querying structures.
///
/// Axiom failures on a *candidate* structure are reported through
/// [`crate::Report`]; the variants here are for inputs that cannot be
/// judged at all or for violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Structure(String),

    #[error("{0}")]
    Io(String),

    #[error("not a ternary semigroup: [{axiom}] fails at ({witness})")]
    NotTs { axiom: String, witness: String },

    #[error("degenerate presentation: the relations force 1 = -1")]
    Degenerate,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown element name `{0}`")]
    UnknownElement(String),

    #[error("condition [Z] fails at ({a}, {b})")]
    ConditionZ { a: String, b: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
