use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised across the crate.
///
/// `Contradiction` is special: it means one of the mathematical guarantees the
/// constructive colouring relies on has failed, which only happens on a bug or
/// a non-planar input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("vertex {0} does not exist")]
    NoSuchVertex(Vertex),

    #[error("invalid embedding at vertex {vertex}: {reason}")]
    InvalidEmbedding { vertex: Vertex, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("internal contradiction: {0}")]
    Contradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
