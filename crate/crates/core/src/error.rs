use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph has {n} vertices; this operation supports at most {max}")]
    TooLarge { n: usize, max: usize },

    #[error("graph is not connected")]
    NotConnected,

    #[error("orbit budget of {limit} members exceeded ({explored} discovered)")]
    BudgetExceeded { limit: usize, explored: usize },

    #[error("graphs are not locally equivalent")]
    NotEquivalent,

    #[error("invalid family specification: {0}")]
    InvalidSpec(String),

    #[error("malformed split: {0}")]
    MalformedSplit(String),

    #[error("malformed QASST: {0}")]
    MalformedQasst(String),

    #[error("node {0} does not belong to the quotient")]
    NodeNotInQuotient(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("invalid symmetry case: {0}")]
    InvalidCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
