//! Exact computation of the matching number, minimum matching number,
//! induced matching number and edge-ideal dimension.
//!
//! The dimension of `K[V(G)]/I(G)` equals the independence number of `G`, so
//! [`dimension`] is a maximum independent set solver.
//!
//! All solvers reject the graph on zero vertices. On an edgeless graph the
//! three matching numbers are 0 and the dimension is `n`.

mod bitgraph;
mod blossom;
mod independent;
mod induced;
mod matching;
mod min_maximal;
mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use self::matching::{is_induced_matching, is_matching, is_maximal_matching, Matching};
pub use self::oracle::{oracle_profile, OracleConfig, DEFAULT_ORACLE_CAP};

/// Largest vertex count accepted by the exponential solvers.
pub const MAX_SOLVER_VERTICES: usize = bitgraph::MAX_VERTICES;

/// The quadruple `(ind-match, min-match, match, dim)` of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub ind_match: usize,
    pub min_match: usize,
    #[serde(rename = "match")]
    pub matching: usize,
    pub dim: usize,
}

impl InvariantProfile {
    pub const fn new(ind_match: usize, min_match: usize, matching: usize, dim: usize) -> Self {
        InvariantProfile {
            ind_match,
            min_match,
            matching,
            dim,
        }
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.ind_match, self.min_match, self.matching, self.dim)
    }

    /// `ind ≤ min ≤ match ≤ 2·min`.
    pub fn satisfies_chain(&self) -> bool {
        self.ind_match <= self.min_match
            && self.min_match <= self.matching
            && self.matching <= 2 * self.min_match
    }

    /// `dim ≥ ind` and `dim ≥ 2(match − min)`.
    pub fn satisfies_dim_bounds(&self) -> bool {
        self.dim >= self.ind_match && self.dim + 2 * self.min_match >= 2 * self.matching
    }
}

impl std::ops::Add for InvariantProfile {
    type Output = InvariantProfile;

    fn add(self, o: InvariantProfile) -> InvariantProfile {
        InvariantProfile::new(
            self.ind_match + o.ind_match,
            self.min_match + o.min_match,
            self.matching + o.matching,
            self.dim + o.dim,
        )
    }
}

impl std::fmt::Display for InvariantProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.ind_match, self.min_match, self.matching, self.dim
        )
    }
}

fn non_empty(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// A maximum matching (augmenting paths with blossom contraction).
pub fn maximum_matching(g: &Graph) -> Result<Matching> {
    non_empty(g)?;
    Ok(blossom::maximum_matching(g))
}

/// A maximal matching of minimum size.
pub fn minimum_maximal_matching(g: &Graph) -> Result<Matching> {
    non_empty(g)?;
    min_maximal::minimum_maximal_matching(g)
}

/// A maximum induced matching.
pub fn maximum_induced_matching(g: &Graph) -> Result<Matching> {
    non_empty(g)?;
    induced::maximum_induced_matching(g)
}

/// A maximum independent set.
pub fn maximum_independent_set(g: &Graph) -> Result<VertexSet> {
    non_empty(g)?;
    independent::maximum_independent_set(g)
}

pub fn matching_number(g: &Graph) -> Result<usize> {
    maximum_matching(g).map(|m| m.len())
}

pub fn min_matching_number(g: &Graph) -> Result<usize> {
    minimum_maximal_matching(g).map(|m| m.len())
}

pub fn induced_matching_number(g: &Graph) -> Result<usize> {
    maximum_induced_matching(g).map(|m| m.len())
}

/// `dim K[V(G)]/I(G)`, i.e. the independence number.
pub fn dimension(g: &Graph) -> Result<usize> {
    maximum_independent_set(g).map(|s| s.len())
}

pub fn invariant_profile(g: &Graph) -> Result<InvariantProfile> {
    Ok(InvariantProfile {
        ind_match: induced_matching_number(g)?,
        min_match: min_matching_number(g)?,
        matching: matching_number(g)?,
        dim: dimension(g)?,
    })
}
