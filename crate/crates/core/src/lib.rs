//! Exact matching invariants and edge-ideal dimension of finite simple graphs,
//! together with the graph families that realise every feasible quadruple
//! `(ind-match, min-match, match, dim)`.

pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod verifier;

pub use constructions::{
    construct, dispatch_case, feasible, witness_matchings, Case, ConstructionParams,
};
pub use error::{Error, Result, Violation};
pub use graph::{Edge, Graph, VertexId, VertexSet};
pub use invariants::{
    dimension, induced_matching_number, invariant_profile, matching_number, min_matching_number,
    oracle_profile, InvariantProfile, Matching, OracleConfig,
};
