use thiserror::Error;

use crate::graph::VertexId;

/// Errors raised by graph construction, the solvers and the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop on vertex {0} rejected: graphs are simple")]
    Loop(VertexId),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("{0} requires at least one vertex")]
    ZeroSize(&'static str),

    #[error("invariants are undefined on the graph with no vertices")]
    EmptyGraph,

    #[error("graph has {n} vertices; exact solvers support at most {limit}")]
    TooManyVertices { n: usize, limit: usize },

    #[error("graph has {n} vertices; oracle cap is {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("set is not independent: edge {{{0}, {1}}} lies inside it")]
    NotIndependent(VertexId, VertexId),

    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(VertexId, VertexId),

    #[error("edges {{{0}, {1}}} and {{{2}, {3}}} share a vertex")]
    NotAMatching(VertexId, VertexId, VertexId, VertexId),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),

    #[error("parameters must be positive integers, got {0}")]
    NonPositive(&'static str),

    #[error("infeasible tuple ({a},{b},{c},{d}): {violation}")]
    Infeasible {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        violation: Violation,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

/// The inequality of the feasibility condition that a tuple breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    AAboveB,
    BAboveC,
    CAboveTwoB,
    DBelowBound,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Violation::AAboveB => "a ≤ b violated",
            Violation::BAboveC => "b ≤ c violated",
            Violation::CAboveTwoB => "c ≤ 2b violated",
            Violation::DBelowBound => "d ≥ max{a, 2(c−b)} violated",
        })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
