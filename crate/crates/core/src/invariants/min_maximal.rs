//! Minimum maximal matching by memoised branch and bound.
//!
//! The state is the set `F` of still-uncovered vertices that have a neighbour
//! in `F`; the remaining cost is the minimum maximal matching of `G[F]`,
//! since every edge touching a covered vertex is already dominated. Pick an
//! edge `{u, v}` of `G[F]`: any maximal matching covers `u` or `v`, so branch
//! over the edges at `u` and the edges at `v`.

use std::collections::HashMap;

use crate::error::Result;
use crate::graph::Graph;

use super::bitgraph::{bit, iter, BitGraph, Mask};
use super::matching::Matching;

struct Solver<'a> {
    g: &'a BitGraph,
    memo: HashMap<Mask, (u32, (u8, u8))>,
}

impl Solver<'_> {
    fn lower_bound(&self, f: Mask) -> u32 {
        // match <= 2 * min-match and a greedy maximal matching is at least half a maximum one
        self.g.greedy_matching(f).div_ceil(2)
    }

    fn branch_edges(&self, f: Mask) -> Vec<(usize, usize)> {
        let deg = |v: usize| self.g.degree_in(v, f);
        let u = iter(f).min_by_key(|&v| deg(v)).expect("non-empty state");
        let v = iter(self.g.adj[u] & f)
            .min_by_key(|&w| deg(w))
            .expect("stripped state has no isolated vertices");
        let mut out: Vec<(usize, usize)> = iter(self.g.adj[u] & f)
            .map(|w| (u.min(w), u.max(w)))
            .chain(iter(self.g.adj[v] & f & !bit(u)).map(|w| (v.min(w), v.max(w))))
            .collect();
        out.sort_unstable();
        out
    }

    fn solve(&mut self, f: Mask) -> u32 {
        if f == 0 {
            return 0;
        }
        if let Some(&(value, _)) = self.memo.get(&f) {
            return value;
        }
        let mut best = u32::MAX;
        let mut choice = (0, 0);
        for (x, y) in self.branch_edges(f) {
            let rest = self.g.strip_isolated(f & !bit(x) & !bit(y));
            if best != u32::MAX && 1 + self.lower_bound(rest) >= best {
                continue;
            }
            let value = 1 + self.solve(rest);
            if value < best {
                best = value;
                choice = (x as u8, y as u8);
            }
        }
        self.memo.insert(f, (best, choice));
        best
    }
}

/// A maximal matching of minimum cardinality. The empty matching for edgeless
/// graphs.
pub fn minimum_maximal_matching(g: &Graph) -> Result<Matching> {
    let bg = BitGraph::new(g)?;
    let mut solver = Solver {
        g: &bg,
        memo: HashMap::new(),
    };
    let start = bg.strip_isolated(bg.all());
    solver.solve(start);

    let mut m = Matching::new();
    let mut f = start;
    while f != 0 {
        let (_, (x, y)) = solver.memo[&f];
        let (x, y) = (x as usize, y as usize);
        m.insert(x, y);
        f = bg.strip_isolated(f & !bit(x) & !bit(y));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::matching::is_maximal_matching;

    fn value(g: &Graph) -> usize {
        let m = minimum_maximal_matching(g).unwrap();
        assert!(is_maximal_matching(g, &m).unwrap());
        m.len()
    }

    #[test]
    fn closed_forms() {
        for s in 1..=6 {
            assert_eq!(value(&Graph::complete(2 * s).unwrap()), s);
            assert_eq!(value(&Graph::star(s).unwrap()), 1);
        }
        assert_eq!(value(&Graph::empty(3)), 0);
    }

    #[test]
    fn paths() {
        // P_n: ceil((n-1)/3)
        for n in 2..=12 {
            let g = Graph::with_edges(n, (1..n).map(|i| (i - 1, i))).unwrap();
            assert_eq!(value(&g), (n - 1).div_ceil(3), "P_{n}");
        }
    }
}
