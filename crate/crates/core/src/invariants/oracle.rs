//! Exhaustive reference computation of the invariant profile.
//!
//! Enumerates every matching by include/exclude recursion over the sorted
//! edge list and every vertex subset for independence. Shares nothing with
//! the fast solvers beyond the [`Graph`] value itself.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

use super::InvariantProfile;

pub const DEFAULT_ORACLE_CAP: usize = 12;

/// Largest vertex count the oracle accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_ORACLE_CAP,
        }
    }
}

struct Enumeration<'a> {
    edges: &'a [Edge],
    owner: Vec<Option<usize>>,
    chosen: Vec<usize>,
    max_size: usize,
    min_maximal: usize,
    max_induced: usize,
}

impl Enumeration<'_> {
    fn leaf(&mut self) {
        let size = self.chosen.len();
        self.max_size = self.max_size.max(size);
        let maximal = self
            .edges
            .iter()
            .all(|&(u, v)| self.owner[u].is_some() || self.owner[v].is_some());
        if maximal {
            self.min_maximal = self.min_maximal.min(size);
        }
        let induced = self
            .edges
            .iter()
            .all(|&(u, v)| !matches!((self.owner[u], self.owner[v]), (Some(a), Some(b)) if a != b));
        if induced {
            self.max_induced = self.max_induced.max(size);
        }
    }

    fn walk(&mut self, i: usize) {
        if i == self.edges.len() {
            self.leaf();
            return;
        }
        let (u, v) = self.edges[i];
        if self.owner[u].is_none() && self.owner[v].is_none() {
            self.owner[u] = Some(i);
            self.owner[v] = Some(i);
            self.chosen.push(i);
            self.walk(i + 1);
            self.chosen.pop();
            self.owner[u] = None;
            self.owner[v] = None;
        }
        self.walk(i + 1);
    }
}

fn independence_number(g: &Graph) -> usize {
    let n = g.order();
    let edges: Vec<(u32, u32)> = g.edges().map(|(u, v)| (u as u32, v as u32)).collect();
    (0u32..1 << n)
        .filter(|&s| {
            edges
                .iter()
                .all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// The invariant profile by exhaustive enumeration.
pub fn oracle_profile(g: &Graph, config: &OracleConfig) -> Result<InvariantProfile> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    // subsets are enumerated in a u32
    if n > config.cap || n > 31 {
        return Err(Error::OracleCapExceeded {
            n,
            cap: config.cap.min(31),
        });
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut e = Enumeration {
        edges: &edges,
        owner: vec![None; n],
        chosen: Vec::new(),
        max_size: 0,
        min_maximal: usize::MAX,
        max_induced: 0,
    };
    e.walk(0);
    Ok(InvariantProfile {
        ind_match: e.max_induced,
        min_match: e.min_maximal,
        matching: e.max_size,
        dim: independence_number(g),
    })
}
