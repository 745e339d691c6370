use serde_json::{json, Value};
use thiserror::Error;

use crate::brauer::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("element does not belong to the group: {0}")]
    ElementMismatch(String),
    #[error("operation needs a finite group")]
    InfiniteGroup,
    #[error("permutation group has more than {0} elements")]
    GroupTooLarge(usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed word `{0}`")]
    MalformedWord(String),
    #[error("invalid Brauer permutation ({} violation(s))", .0.len())]
    InvalidBrauer(Vec<Violation>),
    #[error("unknown half edge `{0}`")]
    UnknownHalfEdge(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("weight is not admissible at half edge `{witness}`")]
    NotAdmissible { witness: String },
    #[error("weight is not homogeneous on relation {witness}")]
    NotHomogeneous { witness: String },
    #[error("an infinite group needs a window")]
    WindowRequired,
    #[error("Brauer graph has a loop at edge {witness}")]
    HasLoops { witness: String },
    #[error("multiple-edge graph has a cycle through {}", .cycle.join(", "))]
    DeltaNotForest { cycle: Vec<String> },
    #[error("graph with {0} vertices exceeds the isomorphism search cap")]
    TooLarge(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Variant name, used as the `error` field of CLI failures.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::ElementMismatch(_) => "ElementMismatch",
            Error::InfiniteGroup => "InfiniteGroup",
            Error::GroupTooLarge(_) => "GroupTooLarge",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::MalformedWord(_) => "MalformedWord",
            Error::InvalidBrauer(_) => "InvalidBrauer",
            Error::UnknownHalfEdge(_) => "UnknownHalfEdge",
            Error::UnknownArrow(_) => "UnknownArrow",
            Error::InvalidQuiver(_) => "InvalidQuiver",
            Error::InvalidWeight(_) => "InvalidWeight",
            Error::NotAdmissible { .. } => "NotAdmissible",
            Error::NotHomogeneous { .. } => "NotHomogeneous",
            Error::WindowRequired => "WindowRequired",
            Error::HasLoops { .. } => "HasLoops",
            Error::DeltaNotForest { .. } => "DeltaNotForest",
            Error::TooLarge(_) => "TooLarge",
            Error::Malformed(_) => "Malformed",
        }
    }

    /// Machine-readable witness for the failure, `null` when there is none.
    pub fn witness(&self) -> Value {
        match self {
            Error::InvalidBrauer(violations) => {
                Value::Array(violations.iter().map(|v| json!(v.to_string())).collect())
            }
            Error::UnknownHalfEdge(name) | Error::UnknownArrow(name) | Error::UnknownGenerator(name) => {
                json!(name)
            }
            Error::MalformedWord(word) => json!(word),
            Error::NotAdmissible { witness }
            | Error::NotHomogeneous { witness }
            | Error::HasLoops { witness } => json!(witness),
            Error::DeltaNotForest { cycle } => json!(cycle),
            Error::TooLarge(n) | Error::GroupTooLarge(n) => json!(n),
            _ => Value::Null,
        }
    }

    /// Whether the error stems from unparseable or structurally malformed input.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::Malformed(_) | Error::MalformedWord(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Malformed(err.to_string())
    }
}
