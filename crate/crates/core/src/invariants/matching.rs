use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph, VertexId};

/// A set of edges, each stored with the smaller endpoint first.
///
/// Construction does not check disjointness; use [`is_matching`] against a
/// graph for that.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matching(BTreeSet<Edge>);

impl Matching {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, u: VertexId, v: VertexId) -> bool {
        self.0.insert(normalize(u, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.0.contains(&normalize(u, v))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    /// Endpoint-to-partner map for a graph on `n` vertices.
    pub(crate) fn mates(&self, n: usize) -> Vec<Option<VertexId>> {
        let mut mate = vec![None; n];
        for (u, v) in self.edges() {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

impl FromIterator<Edge> for Matching {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Matching(iter.into_iter().map(|(u, v)| normalize(u, v)).collect())
    }
}

impl<const N: usize> From<[Edge; N]> for Matching {
    fn from(es: [Edge; N]) -> Self {
        es.into_iter().collect()
    }
}

fn check_edges(g: &Graph, m: &Matching) -> Result<()> {
    for (u, v) in m.edges() {
        g.check_vertex(v)?;
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
    }
    Ok(())
}

fn first_overlap(m: &Matching) -> Option<(Edge, Edge)> {
    let mut owner: std::collections::BTreeMap<VertexId, Edge> = Default::default();
    for e in m.edges() {
        for w in [e.0, e.1] {
            if let Some(&prev) = owner.get(&w) {
                return Some((prev, e));
            }
            owner.insert(w, e);
        }
    }
    None
}

/// True iff the edges of `m` are pairwise vertex-disjoint. Every member must be
/// an edge of `g`.
pub fn is_matching(g: &Graph, m: &Matching) -> Result<bool> {
    check_edges(g, m)?;
    Ok(first_overlap(m).is_none())
}

fn require_matching(g: &Graph, m: &Matching) -> Result<Vec<Option<VertexId>>> {
    check_edges(g, m)?;
    if let Some(((a, b), (c, d))) = first_overlap(m) {
        return Err(Error::NotAMatching(a, b, c, d));
    }
    Ok(m.mates(g.order()))
}

/// True iff no edge of `g` can be added to `m` keeping it a matching.
pub fn is_maximal_matching(g: &Graph, m: &Matching) -> Result<bool> {
    let mate = require_matching(g, m)?;
    Ok(g.edges()
        .all(|(u, v)| mate[u].is_some() || mate[v].is_some()))
}

/// True iff no edge of `g` meets two distinct members of `m`.
pub fn is_induced_matching(g: &Graph, m: &Matching) -> Result<bool> {
    let mate = require_matching(g, m)?;
    Ok(g.edges().all(|(u, v)| match (mate[u], mate[v]) {
        // both ends covered: fine only when {u, v} is itself a member
        (Some(mu), Some(_)) => mu == v,
        _ => true,
    }))
}
