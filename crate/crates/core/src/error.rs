//! Crate-wide error type.

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed edge-list input; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Invalid parameter for a generator, sampler, or checker.
    #[error("invalid parameter: {0}")]
    Param(String),

    /// Inputs that do not belong together (wrong universe, not a
    /// permutation, not a tree, inconsistent trace).
    #[error("structural error: {0}")]
    Structure(String),

    /// Exhaustive search refused: instance exceeds the stated limit.
    #[error("{what} refused: size {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// Subset search refused; the forced vertices found so far are returned
    /// as the partial result.
    #[error("search budget exceeded: {free} free vertices > budget {budget} ({} forced)", forced.len())]
    SearchBudget {
        free: usize,
        budget: usize,
        forced: Vec<VertexId>,
    },

    /// A checker was asked about a regime its statement excludes (r <= d).
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// An extremal certification clause failed.
    #[error("certification failed at clause {clause}: {detail}")]
    Certification { clause: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
