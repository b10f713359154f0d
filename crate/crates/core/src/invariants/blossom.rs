//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, BFS formulation with explicit base tracking). `O(n^3)`.

use std::collections::VecDeque;

use crate::graph::Graph;

use super::matching::Matching;

const NONE: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Search {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if one exists.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.in_tree.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut u: usize) {
        while u != NONE {
            let pv = self.parent[u];
            let ppv = self.mate[pv];
            self.mate[u] = pv;
            self.mate[pv] = u;
            u = ppv;
        }
    }
}

/// A maximum matching of `g`. Deterministic for a given graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut search = Search::new(g.adjacency());
    // greedy warm start
    for (u, v) in g.edges() {
        if search.mate[u] == NONE && search.mate[v] == NONE {
            search.mate[u] = v;
            search.mate[v] = u;
        }
    }
    for root in 0..g.order() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    search
        .mate
        .iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| (u, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::matching::is_matching;

    fn check(g: &Graph, expected: usize) {
        let m = maximum_matching(g);
        assert!(is_matching(g, &m).unwrap());
        assert_eq!(m.len(), expected);
    }

    #[test]
    fn small_graphs() {
        check(&Graph::complete(6).unwrap(), 3);
        check(&Graph::complete(7).unwrap(), 3);
        check(&Graph::with_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap(), 1);
        check(&Graph::empty(4), 0);
        check(&Graph::star(5).unwrap(), 1);
    }

    #[test]
    fn needs_blossom_contraction() {
        // 5-cycle 0..4 with pendants 5 on 0 and 6 on 2: perfect on 7? no, 3 edges.
        let g =
            Graph::with_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)]).unwrap();
        check(&g, 3);
        // Petersen graph has a perfect matching
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let petersen = Graph::with_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        check(&petersen, 5);
    }
}
