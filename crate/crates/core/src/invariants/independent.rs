//! Maximum independent set by branch and bound.
//!
//! Vertices of degree at most one are taken greedily (some maximum set always
//! contains them); otherwise branch on a maximum-degree vertex. A greedy
//! clique cover of the remaining vertices bounds what they can still add.

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

use super::bitgraph::{bit, iter, BitGraph, Mask};

struct Search<'a> {
    g: &'a BitGraph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn clique_cover_size(&self, f: Mask) -> usize {
        // each entry: vertices adjacent to every member of that clique so far
        let mut joinable: Vec<Mask> = Vec::new();
        for v in iter(f) {
            match joinable.iter_mut().find(|c| **c & bit(v) != 0) {
                Some(c) => *c &= self.g.adj[v],
                None => joinable.push(self.g.adj[v]),
            }
        }
        joinable.len()
    }

    fn take(&mut self, f: Mask, v: usize) {
        self.current.push(v);
        self.run(f & !(bit(v) | self.g.adj[v]));
        self.current.pop();
    }

    fn run(&mut self, f: Mask) {
        if f == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + self.clique_cover_size(f) <= self.best.len() {
            return;
        }
        if let Some(v) = iter(f).find(|&v| self.g.degree_in(v, f) <= 1) {
            self.take(f, v);
            return;
        }
        let v = iter(f)
            .max_by_key(|&v| (self.g.degree_in(v, f), std::cmp::Reverse(v)))
            .expect("non-empty");
        self.take(f, v);
        self.run(f & !bit(v));
    }
}

/// A maximum independent set of `g`.
pub fn maximum_independent_set(g: &Graph) -> Result<VertexSet> {
    let bg = BitGraph::new(g)?;
    let mut search = Search {
        g: &bg,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.run(bg.all());
    Ok(search.best.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(g: &Graph) -> usize {
        let s = maximum_independent_set(g).unwrap();
        assert!(g.is_independent_set(&s).unwrap());
        s.len()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(value(&Graph::star(4).unwrap()), 4);
        assert_eq!(value(&Graph::complete(7).unwrap()), 1);
        assert_eq!(value(&Graph::empty(5)), 5);
        assert_eq!(value(&Graph::empty(0)), 0);
        // C_7: floor(7/2)
        let c7 = Graph::with_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert_eq!(value(&c7), 3);
    }
}
