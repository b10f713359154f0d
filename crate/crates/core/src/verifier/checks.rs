//! Executable forms of the structural facts about the four invariants. Each
//! check recomputes everything it needs and has no side effects.

use crate::constructions::feasible;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::invariants::{
    dimension, induced_matching_number, invariant_profile, matching_number, min_matching_number,
    oracle_profile, InvariantProfile, OracleConfig,
};

/// `ind ≤ min ≤ match ≤ 2·min` (skipped on edgeless graphs), `dim ≥ ind` and
/// `dim ≥ 2(match − min)`.
pub fn check_chain_and_bounds(g: &Graph) -> Result<bool> {
    let p = invariant_profile(g)?;
    let chain = g.size() == 0 || p.satisfies_chain();
    Ok(chain && p.satisfies_dim_bounds())
}

/// For a graph with at least one edge, its profile is a feasible quadruple.
pub fn check_profile_feasible(p: &InvariantProfile) -> Result<bool> {
    feasible(p.ind_match, p.min_match, p.matching, p.dim)
}

/// Suspending at an independent `s` keeps ind-match and raises dim by one
/// exactly when `|s| = dim`.
pub fn check_suspension(g: &Graph, s: &VertexSet) -> Result<bool> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let h = g.s_suspension(s)?;
    let dim = dimension(g)?;
    let expected_dim = if s.len() == dim { dim + 1 } else { dim };
    Ok(induced_matching_number(&h)? == induced_matching_number(g)?
        && dimension(&h)? == expected_dim)
}

/// Deleting `k`, a twin pendant of `j` at `i`, leaves the three matching
/// numbers unchanged.
pub fn check_pendant_reduction(g: &Graph, i: VertexId, j: VertexId, k: VertexId) -> Result<bool> {
    for v in [i, j, k] {
        g.check_vertex(v)?;
    }
    if j == k || !g.has_edge(i, j) || !g.has_edge(i, k) || g.degree(j)? != 1 || g.degree(k)? != 1 {
        return Err(Error::Precondition(format!(
            "{j} and {k} must be distinct degree-1 neighbours of {i}"
        )));
    }
    let h = g.remove_vertex(k)?;
    Ok(matching_number(&h)? == matching_number(g)?
        && min_matching_number(&h)? == min_matching_number(g)?
        && induced_matching_number(&h)? == induced_matching_number(g)?)
}

/// `match ≤ ⌊n/2⌋`.
pub fn check_floor_bound(g: &Graph) -> Result<bool> {
    Ok(matching_number(g)? <= g.order() / 2)
}

/// The three matching numbers do not grow on induced subgraphs.
pub fn check_monotonicity(g: &Graph, w: &VertexSet) -> Result<bool> {
    let sub = g.induced_subgraph(w)?;
    let whole = invariant_profile(g)?;
    if sub.order() == 0 {
        return Ok(true);
    }
    let part = invariant_profile(&sub)?;
    Ok(part.matching <= whole.matching
        && part.min_match <= whole.min_match
        && part.ind_match <= whole.ind_match)
}

/// All four invariants of a disjoint union are the sums over the parts.
pub fn check_union_additivity(gs: &[Graph]) -> Result<bool> {
    let union = Graph::disjoint_union(gs)?;
    let mut sum = InvariantProfile::new(0, 0, 0, 0);
    for g in gs {
        sum = sum + invariant_profile(g)?;
    }
    Ok(invariant_profile(&union)? == sum)
}

/// `dim = 1` exactly for complete graphs.
pub fn check_dim_one_iff_complete(g: &Graph) -> Result<bool> {
    Ok((dimension(g)? == 1) == g.is_complete())
}

/// Fast solvers and the exhaustive oracle agree on all four coordinates.
pub fn check_oracle_agreement(g: &Graph, config: &OracleConfig) -> Result<bool> {
    Ok(invariant_profile(g)? == oracle_profile(g, config)?)
}
