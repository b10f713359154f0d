//! Immutable finite simple graphs on dense vertex indices.
//!
//! Vertices are `0..n`. The optional label map only carries display names
//! (`v_3`, `x_1`, ...) for export; no algorithm reads it.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An unordered edge stored with the smaller endpoint first.
pub type Edge = (VertexId, VertexId);

pub(crate) fn normalize(u: VertexId, v: VertexId) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A set of vertices, iterated in ascending order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<VertexId> {
        self.0.last().copied()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[VertexId; N]> for VertexSet {
    fn from(vs: [VertexId; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = std::collections::btree_set::IntoIter<VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// A finite simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adjacency: Vec<Vec<VertexId>>,
    labels: BTreeMap<VertexId, String>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            adjacency: vec![Vec::new(); n],
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from a list of pairs. Duplicates (in either orientation)
    /// collapse; loops and out-of-range endpoints are rejected.
    pub fn with_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut edges = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            edges.insert(normalize(u, v));
        }
        Ok(Self::from_edge_set(n, edges))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
            labels: BTreeMap::new(),
        }
    }

    /// Attaches display labels. Indices out of range are rejected.
    pub fn with_labels<I, S>(mut self, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, S)>,
        S: Into<String>,
    {
        for (v, label) in labels {
            self.check_vertex(v)?;
            self.labels.insert(v, label.into());
        }
        Ok(self)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize("complete graph"));
        }
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Ok(Self::from_edge_set(n, edges))
    }

    /// The star `K_{1,s}`: leaves `0..s` labelled `x_1..x_s`, centre `s`
    /// labelled `x_v`.
    pub fn star(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::ZeroSize("star graph"));
        }
        let edges = (0..s).map(|i| (i, s)).collect();
        let labels = (0..s)
            .map(|i| (i, format!("x_{}", i + 1)))
            .chain(std::iter::once((s, "x_v".to_string())));
        Self::from_edge_set(s + 1, edges).with_labels(labels)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&normalize(u, v))
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, String> {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn vertices(&self) -> VertexSet {
        (0..self.n).collect()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    pub fn neighbor_set(&self, v: VertexId) -> Result<VertexSet> {
        Ok(self.neighbors(v)?.iter().copied().collect())
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub(crate) fn adjacency(&self) -> &[Vec<VertexId>] {
        &self.adjacency
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        (0..self.n)
            .filter(|&v| self.adjacency[v].is_empty())
            .collect()
    }

    /// Connectivity; the graphs on zero and one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff no edge has both endpoints in `s`. The empty set is independent.
    pub fn is_independent_set(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.independence_violation(s)?.is_none())
    }

    /// First edge (in edge order) lying inside `s`.
    pub fn independence_violation(&self, s: &VertexSet) -> Result<Option<Edge>> {
        self.check_set(s)?;
        for v in s {
            if let Some(&w) = self.adjacency[v].iter().find(|&&w| w > v && s.contains(w)) {
                return Ok(Some((v, w)));
            }
        }
        Ok(None)
    }

    /// The subgraph induced on `w`, re-indexed by ascending original index.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph> {
        self.check_set(w)?;
        let mut index = vec![usize::MAX; self.n];
        for (new, old) in w.iter().enumerate() {
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| index[*u] != usize::MAX && index[*v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let mut g = Self::from_edge_set(w.len(), edges);
        g.labels = self
            .labels
            .iter()
            .filter(|(v, _)| index[**v] != usize::MAX)
            .map(|(v, l)| (index[*v], l.clone()))
            .collect();
        Ok(g)
    }

    /// `self` with vertex `v` deleted.
    pub fn remove_vertex(&self, v: VertexId) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// Disjoint union. Component `i` occupies a contiguous index block in list
    /// order; its labels gain the suffix `@i`.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
        if gs.is_empty() {
            return Err(Error::ZeroSize("disjoint union"));
        }
        if gs.len() == 1 {
            return Ok(gs[0].clone());
        }
        let mut offset = 0;
        let mut edges = BTreeSet::new();
        let mut labels = BTreeMap::new();
        for (i, g) in gs.iter().enumerate() {
            edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
            labels.extend(
                g.labels
                    .iter()
                    .map(|(v, l)| (v + offset, format!("{l}@{i}"))),
            );
            offset += g.n;
        }
        let mut g = Self::from_edge_set(offset, edges);
        g.labels = labels;
        Ok(g)
    }

    /// The S-suspension: a new vertex `n` (labelled `susp`) joined to every
    /// vertex outside the independent set `s`.
    pub fn s_suspension(&self, s: &VertexSet) -> Result<Graph> {
        if let Some((u, v)) = self.independence_violation(s)? {
            return Err(Error::NotIndependent(u, v));
        }
        let apex = self.n;
        let mut edges = self.edges.clone();
        edges.extend((0..self.n).filter(|&v| !s.contains(v)).map(|v| (v, apex)));
        let mut g = Self::from_edge_set(self.n + 1, edges);
        g.labels = self.labels.clone();
        g.labels.insert(apex, "susp".to_string());
        Ok(g)
    }

    /// `self` plus new pendant vertices attached to `anchor`, appended at the end.
    pub fn with_pendants(&self, anchor: VertexId, count: usize) -> Result<Graph> {
        self.check_vertex(anchor)?;
        let mut edges = self.edges.clone();
        edges.extend((0..count).map(|k| (anchor, self.n + k)));
        let mut g = Self::from_edge_set(self.n + count, edges);
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Same vertices and edges, labels dropped.
    pub fn unlabeled(&self) -> Graph {
        let mut g = self.clone();
        g.labels.clear();
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Graph {
        Graph::with_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn assert_simple(g: &Graph) {
        for (u, v) in g.edges() {
            assert!(u < v && v < g.order());
        }
        let degree_sum: usize = g.degrees().iter().sum();
        assert_eq!(degree_sum, 2 * g.size());
    }

    #[test]
    fn empty_graphs() {
        for n in [0, 1, 3] {
            let g = Graph::empty(n);
            assert_eq!(g.order(), n);
            assert_eq!(g.size(), 0);
        }
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn with_edges_collapses_duplicates() {
        let g = Graph::with_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(c3().size(), 3);
        assert_eq!(Graph::with_edges(2, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::with_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn complete_and_star() {
        assert_eq!(Graph::complete(4).unwrap().size(), 6);
        assert_eq!(Graph::complete(6).unwrap().size(), 15);
        assert_eq!(Graph::complete(2).unwrap().size(), 1);
        assert!(Graph::complete(0).is_err());
        let k5 = Graph::complete(5).unwrap();
        assert!(k5.degrees().iter().all(|&d| d == 4));

        let s1 = Graph::star(1).unwrap();
        assert_eq!(s1.unlabeled(), Graph::complete(2).unwrap());
        let s5 = Graph::star(5).unwrap();
        assert_eq!((s5.order(), s5.size()), (6, 5));
        assert_eq!(s5.degree(5).unwrap(), 5);
        assert_eq!(Graph::star(3).unwrap().degrees(), vec![1, 1, 1, 3]);
        assert_eq!(s5.label(5), Some("x_v"));
        assert_eq!(s5.label(0), Some("x_1"));
        assert!(Graph::star(0).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let k2 = c3().induced_subgraph(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        let k4 = Graph::complete(6)
            .unwrap()
            .induced_subgraph(&VertexSet::from([1, 2, 4, 5]))
            .unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        let leaves = Graph::star(3)
            .unwrap()
            .induced_subgraph(&VertexSet::from([0, 1, 2]))
            .unwrap();
        assert_eq!((leaves.order(), leaves.size()), (3, 0));
        assert_eq!(leaves.label(2), Some("x_3"));
        assert!(c3().induced_subgraph(&VertexSet::from([3])).is_err());
        let g = c3();
        assert_eq!(g.induced_subgraph(&g.vertices()).unwrap(), g);
    }

    #[test]
    fn disjoint_unions() {
        let k2 = Graph::complete(2).unwrap();
        let two = Graph::disjoint_union(&[k2.clone(), k2.clone()]).unwrap();
        assert_eq!((two.order(), two.size(), two.components().len()), (4, 2, 2));
        let mixed = Graph::disjoint_union(&[c3(), Graph::star(2).unwrap()]).unwrap();
        assert_eq!((mixed.order(), mixed.size()), (6, 5));
        assert_eq!(mixed.label(5), Some("x_v@1"));
        assert_eq!(
            Graph::disjoint_union(std::slice::from_ref(&k2)).unwrap(),
            k2
        );
        assert!(Graph::disjoint_union(&[]).is_err());
    }

    #[test]
    fn suspensions() {
        let k4 = c3().s_suspension(&VertexSet::new()).unwrap();
        assert_eq!(k4.unlabeled(), Graph::complete(4).unwrap());
        let p3 = Graph::complete(2)
            .unwrap()
            .s_suspension(&VertexSet::from([0]))
            .unwrap();
        assert_eq!(p3.edge_set(), &BTreeSet::from([(0, 1), (1, 2)]));
        let lone = Graph::empty(2)
            .s_suspension(&VertexSet::from([0, 1]))
            .unwrap();
        assert_eq!((lone.order(), lone.size()), (3, 0));
        assert_eq!(
            c3().s_suspension(&VertexSet::from([0, 1])),
            Err(Error::NotIndependent(0, 1))
        );
    }

    #[test]
    fn independence() {
        let k4 = Graph::complete(4).unwrap();
        assert!(!k4.is_independent_set(&VertexSet::from([0, 1])).unwrap());
        assert!(k4.is_independent_set(&VertexSet::new()).unwrap());
        let star = Graph::star(3).unwrap();
        assert!(star
            .is_independent_set(&VertexSet::from([0, 1, 2]))
            .unwrap());
        assert!(star.is_independent_set(&VertexSet::from([7])).is_err());
    }

    #[test]
    fn connectivity_and_degree() {
        assert!(c3().is_connected());
        let k2 = Graph::complete(2).unwrap();
        assert!(!Graph::disjoint_union(&[k2.clone(), k2])
            .unwrap()
            .is_connected());
        assert_eq!(Graph::star(4).unwrap().degree(4).unwrap(), 4);
        assert!(c3().degree(3).is_err());
        assert_eq!(c3().neighbor_set(0).unwrap(), VertexSet::from([1, 2]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..9).prop_flat_map(|n| {
                proptest::collection::vec((0..n, 0..n), 0..20).prop_map(move |pairs| {
                    Graph::with_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn suspension_adds_one_vertex_and_n_minus_s_edges(g in arb_graph(), pick in any::<u64>()) {
                // greedy independent set driven by the bits of `pick`
                let mut s = VertexSet::new();
                for v in 0..g.order() {
                    if pick >> (v % 64) & 1 == 1 && g.neighbors(v).unwrap().iter().all(|&w| !s.contains(w)) {
                        s.insert(v);
                    }
                }
                let h = g.s_suspension(&s).unwrap();
                assert_simple(&h);
                prop_assert_eq!(h.order(), g.order() + 1);
                prop_assert_eq!(h.size(), g.size() + g.order() - s.len());
            }

            #[test]
            fn union_preserves_counts(g in arb_graph(), h in arb_graph()) {
                let u = Graph::disjoint_union(&[g.clone(), h.clone()]).unwrap();
                assert_simple(&u);
                prop_assert_eq!(u.order(), g.order() + h.order());
                prop_assert_eq!(u.size(), g.size() + h.size());
            }
        }
    }
}
