//! Engine-wide error type.

use thiserror::Error;

use crate::dsl::Diagnostic;

#[derive(Debug, Error)]
pub enum Error {
    /// Model text failed to parse; carries every diagnostic collected.
    #[error("parse failed with {} diagnostic(s)", .0.len())]
    Parse(Vec<Diagnostic>),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unbound timing parameter '{0}'")]
    UnboundParam(String),

    #[error("unknown command label '{0}' in timing declaration")]
    UnknownCommand(String),

    #[error("cannot resolve label '{name}' {context}")]
    UnresolvedRef { name: String, context: String },

    #[error("conflicting weights declared for arc {0}")]
    ConflictingArcWeight(String),

    /// A weight, initial-token, or delay expression evaluated outside its
    /// admissible range (delays and weights must be >= 1, tokens >= 0).
    #[error("expression '{expr}' evaluates to {value}, expected >= {min}")]
    ExprOutOfRange {
        expr: String,
        value: i128,
        min: i128,
    },

    #[error("expansion budget exceeded ({0} node expansions)")]
    BudgetExceeded(u64),

    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),

    #[error("ground-truth net has no timing constraints; recall is undefined")]
    EmptyGroundTruth,

    /// `fire` was called on a disabled transition or with a too-early time.
    /// This is a caller bug, not a simulation outcome.
    #[error("firing contract violated: {0}")]
    FiringContract(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
