use thiserror::Error;

use crate::quiver::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("paths do not compose: first ends at {left_target}, second starts at {right_source}")]
    Compose { left_target: Vertex, right_source: Vertex },

    #[error("arrow sequence is not a path: {0}")]
    NotAPath(String),

    #[error("relation `{word}` has length {len}; admissible ideals only contain paths of length >= 2")]
    ShortRelation { word: String, len: usize },

    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),

    #[error("quiver has a loop (arrow `{0}`)")]
    LoopPresent(String),

    #[error("no arrow {from} -> {to}")]
    MissingArrow { from: Vertex, to: Vertex },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("path basis exceeds the cap of {cap} paths")]
    BasisCapExceeded { cap: usize },

    #[error("subquiver search exceeded its budget of {budget} steps")]
    SearchBudgetExceeded { budget: u64 },

    #[error("projective resolution is infinite; chain cycle through {}", cycle.join(" -> "))]
    InfiniteResolution { cycle: Vec<String> },

    #[error("internal verification mismatch for {construction}: claimed {claimed}, computed {verified}")]
    VerificationMismatch {
        construction: String,
        claimed: String,
        verified: String,
    },

    #[error("algebra is not strongly quasi-hereditary for the given vertex order")]
    NotStronglyQuasiHereditary,

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
