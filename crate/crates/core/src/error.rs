use thiserror::Error;

use crate::StateSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("invalid universe: {0}")]
    InvalidUniverse(String),

    #[error("set functions are defined over different universes")]
    UniverseMismatch,

    #[error("{got} states exceeds the limit of {limit}")]
    TooManyStates { got: usize, limit: usize },

    #[error("{got} atoms exceeds the truth-table limit of {limit}")]
    TooManyAtoms { got: usize, limit: usize },

    #[error("invalid mass function: {0}")]
    InvalidMass(String),

    #[error("invalid probability measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid set function: {0}")]
    InvalidSetFunction(String),

    /// The Möbius transform of a supposed belief function went negative.
    #[error("not a belief function: Möbius coefficient {value} at set {witness:?}")]
    NotBelief { witness: StateSet, value: f64 },

    /// A definedness condition of an update or conditioning rule failed.
    #[error("update undefined: {gate} (got {value})")]
    Undefined { gate: String, value: f64 },

    #[error("total conflict: normalizer {normalizer} is not positive")]
    TotalConflict { normalizer: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
