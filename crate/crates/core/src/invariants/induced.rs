//! Maximum induced matching by memoised branch and bound over vertex sets.
//!
//! State `F` holds the vertices still usable, with isolated ones stripped.
//! For a minimum-degree vertex `u` either `u` is left out, or some edge
//! `{u, w}` joins the matching and the closed neighbourhoods of both ends
//! leave `F`.

use std::collections::HashMap;

use crate::error::Result;
use crate::graph::Graph;

use super::bitgraph::{bit, iter, BitGraph, Mask};
use super::matching::Matching;

#[derive(Clone, Copy)]
enum Step {
    Skip(u8),
    Take(u8, u8),
}

struct Solver<'a> {
    g: &'a BitGraph,
    memo: HashMap<Mask, (u32, Step)>,
}

impl Solver<'_> {
    fn upper_bound(f: Mask) -> u32 {
        f.count_ones() / 2
    }

    fn after_take(&self, f: Mask, u: usize, w: usize) -> Mask {
        let closed = self.g.adj[u] | self.g.adj[w] | bit(u) | bit(w);
        self.g.strip_isolated(f & !closed)
    }

    fn solve(&mut self, f: Mask) -> u32 {
        if f == 0 {
            return 0;
        }
        if let Some(&(value, _)) = self.memo.get(&f) {
            return value;
        }
        let u = iter(f)
            .min_by_key(|&v| self.g.degree_in(v, f))
            .expect("non-empty state");
        let mut best = 0;
        let mut step = Step::Skip(u as u8);
        for w in iter(self.g.adj[u] & f) {
            let rest = self.after_take(f, u, w);
            if Self::upper_bound(rest) < best {
                continue;
            }
            let value = 1 + self.solve(rest);
            if value > best {
                best = value;
                step = Step::Take(u as u8, w as u8);
            }
        }
        let rest = self.g.strip_isolated(f & !bit(u));
        if Self::upper_bound(rest) > best {
            let value = self.solve(rest);
            if value > best {
                best = value;
                step = Step::Skip(u as u8);
            }
        }
        self.memo.insert(f, (best, step));
        best
    }
}

/// A maximum induced matching. Empty for edgeless graphs.
pub fn maximum_induced_matching(g: &Graph) -> Result<Matching> {
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
        f = match solver.memo[&f].1 {
            Step::Take(u, w) => {
                m.insert(u as usize, w as usize);
                solver.after_take(f, u as usize, w as usize)
            }
            Step::Skip(u) => bg.strip_isolated(f & !bit(u as usize)),
        };
    }
    Ok(m)
}
