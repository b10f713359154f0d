//! The seven graph families realising every feasible quadruple `(a,b,c,d)`.
//!
//! Index layout is fixed: the `v` block `v_1..v_{2b}` occupies `0..2b`, then
//! the `x` block (the single apex `x` in cases 4 and 5), then the `y` block of
//! pendants on `v_1`. Every builder attaches these names as labels.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::graph::{Graph, VertexId};
use crate::invariants::{is_matching, is_maximal_matching, Matching};

/// Which family realises a tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

fn check_positive(a: usize, b: usize, c: usize, d: usize) -> Result<()> {
    for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d)] {
        if v == 0 {
            return Err(Error::NonPositive(name));
        }
    }
    Ok(())
}

fn violation(a: usize, b: usize, c: usize, d: usize) -> Option<Violation> {
    if a > b {
        Some(Violation::AAboveB)
    } else if b > c {
        Some(Violation::BAboveC)
    } else if c > 2 * b {
        Some(Violation::CAboveTwoB)
    } else if d < a.max(2 * (c - b)) {
        Some(Violation::DBelowBound)
    } else {
        None
    }
}

/// `1 ≤ a ≤ b ≤ c ≤ 2b` and `d ≥ max{a, 2(c−b)}`. Zero inputs are an error.
pub fn feasible(a: usize, b: usize, c: usize, d: usize) -> Result<bool> {
    check_positive(a, b, c, d)?;
    Ok(violation(a, b, c, d).is_none())
}

/// A validated feasible quadruple together with its family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub case: Case,
}

impl ConstructionParams {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Result<Self> {
        check_positive(a, b, c, d)?;
        if let Some(violation) = violation(a, b, c, d) {
            return Err(Error::Infeasible {
                a,
                b,
                c,
                d,
                violation,
            });
        }
        let case = match (a == 1, b == c) {
            (true, true) => Case::C1,
            (true, false) if d == 2 * (c - b) => Case::C2,
            (true, false) => Case::C3,
            (false, true) if d == a => Case::C4,
            (false, true) => Case::C5,
            (false, false) if 2 * (c - b) >= a => Case::C6,
            (false, false) => Case::C7,
        };
        Ok(ConstructionParams { a, b, c, d, case })
    }

    /// The vertex blocks of the constructed graph.
    pub fn blocks(&self) -> VertexBlocks {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let (x_len, y_len) = match self.case {
            Case::C1 => (d - 1, 0),
            Case::C2 => (2 * (c - b), 0),
            Case::C3 => (2 * (c - b), d - 2 * (c - b)),
            Case::C4 => (1, 0),
            Case::C5 => (1, d - a - 1),
            Case::C6 => (2 * (c - b), d - 2 * (c - b)),
            Case::C7 => (2 * (c - b), d - a),
        };
        VertexBlocks::new(2 * b, x_len, y_len)
    }
}

pub fn dispatch_case(a: usize, b: usize, c: usize, d: usize) -> Result<Case> {
    ConstructionParams::new(a, b, c, d).map(|p| p.case)
}

/// Contiguous index ranges of the `v`, `x` and `y` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexBlocks {
    pub v: Range<VertexId>,
    pub x: Range<VertexId>,
    pub y: Range<VertexId>,
}

impl VertexBlocks {
    fn new(v_len: usize, x_len: usize, y_len: usize) -> Self {
        VertexBlocks {
            v: 0..v_len,
            x: v_len..v_len + x_len,
            y: v_len + x_len..v_len + x_len + y_len,
        }
    }

    pub fn order(&self) -> usize {
        self.y.end
    }
}

struct Builder {
    blocks: VertexBlocks,
    edges: Vec<(VertexId, VertexId)>,
    single_apex: bool,
}

impl Builder {
    fn new(v_len: usize, x_len: usize, y_len: usize) -> Self {
        Builder {
            blocks: VertexBlocks::new(v_len, x_len, y_len),
            edges: Vec::new(),
            single_apex: false,
        }
    }

    fn apex(v_len: usize, y_len: usize) -> Self {
        Builder {
            single_apex: true,
            ..Self::new(v_len, 1, y_len)
        }
    }

    /// `v_i`, 1-based.
    fn v(&self, i: usize) -> VertexId {
        i - 1
    }

    /// `x_i`, 1-based.
    fn x(&self, i: usize) -> VertexId {
        self.blocks.x.start + i - 1
    }

    fn y(&self, i: usize) -> VertexId {
        self.blocks.y.start + i - 1
    }

    fn edge(&mut self, u: VertexId, v: VertexId) {
        self.edges.push((u, v));
    }

    /// Clique on `v_from..=v_to`.
    fn clique(&mut self, from: usize, to: usize) {
        for i in from..=to {
            for j in i + 1..=to {
                self.edge(self.v(i), self.v(j));
            }
        }
    }

    /// `{v_{2i−1}, v_{2i}}` for `i = 1..=count`.
    fn ladder(&mut self, count: usize) {
        for i in 1..=count {
            self.edge(self.v(2 * i - 1), self.v(2 * i));
        }
    }

    fn pendants_on_v1(&mut self) {
        for k in 1..=self.blocks.y.len() {
            self.edge(self.v(1), self.y(k));
        }
    }

    fn finish(self) -> Result<Graph> {
        let blocks = &self.blocks;
        let mut labels: Vec<(VertexId, String)> = blocks
            .v
            .clone()
            .map(|i| (i, format!("v_{}", i + 1)))
            .collect();
        if self.single_apex {
            labels.push((blocks.x.start, "x".to_string()));
        } else {
            labels.extend(
                blocks
                    .x
                    .clone()
                    .map(|i| (i, format!("x_{}", i - blocks.x.start + 1))),
            );
        }
        labels.extend(
            blocks
                .y
                .clone()
                .map(|i| (i, format!("y_{}", i - blocks.y.start + 1))),
        );
        Graph::with_edges(blocks.order(), self.edges)?.with_labels(labels)
    }
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameters(what.to_string()))
    }
}

/// Case 1: `K_{2b}` on the `v` block with `d−1` pendants `x_k` on `v_1`.
pub fn build_case1(b: usize, d: usize) -> Result<Graph> {
    require(b >= 1 && d >= 1, "case 1 needs b ≥ 1 and d ≥ 1")?;
    let mut g = Builder::new(2 * b, d - 1, 0);
    g.clique(1, 2 * b);
    for k in 1..=d - 1 {
        g.edge(g.v(1), g.x(k));
    }
    g.finish()
}

fn case2_edges(g: &mut Builder, b: usize, c: usize) {
    g.clique(1, 2 * b);
    for k in 1..=b {
        for l in 1..=c - b {
            g.edge(g.v(k), g.x(l));
            g.edge(g.v(b + k), g.x(c - b + l));
        }
    }
}

/// Case 2: `K_{2b}` with `v_1..v_b` joined to `x_1..x_{c−b}` and
/// `v_{b+1}..v_{2b}` joined to `x_{c−b+1}..x_{2(c−b)}`.
pub fn build_case2(b: usize, c: usize) -> Result<Graph> {
    require(1 <= b && b < c && c <= 2 * b, "case 2 needs 1 ≤ b < c ≤ 2b")?;
    let mut g = Builder::new(2 * b, 2 * (c - b), 0);
    case2_edges(&mut g, b, c);
    g.finish()
}

/// Case 3: case 2 plus `d − 2(c−b)` pendants on `v_1`.
pub fn build_case3(b: usize, c: usize, d: usize) -> Result<Graph> {
    require(
        1 <= b && b < c && c <= 2 * b && d > 2 * (c - b),
        "case 3 needs 1 ≤ b < c ≤ 2b and d > 2(c−b)",
    )?;
    let mut g = Builder::new(2 * b, 2 * (c - b), d - 2 * (c - b));
    case2_edges(&mut g, b, c);
    g.pendants_on_v1();
    g.finish()
}

/// `a−1` disjoint edges on `v_1..v_{2a−2}` and a clique on `v_{2a−1}..v_{2b}`.
fn core_block(g: &mut Builder, a: usize, b: usize) {
    g.ladder(a - 1);
    g.clique(2 * a - 1, 2 * b);
}

/// Case 4: the ∅-suspension of `(a−1)K_2 ⊔ K_{2(b−a+1)}`; apex `x` at index `2b`.
pub fn build_case4(a: usize, b: usize) -> Result<Graph> {
    require(1 < a && a <= b, "case 4 needs 1 < a ≤ b")?;
    let mut g = Builder::apex(2 * b, 0);
    core_block(&mut g, a, b);
    for l in 1..=2 * b {
        g.edge(g.v(l), g.x(1));
    }
    g.finish()
}

/// Case 5: the case 4 core with apex `x` on `v_1, v_3, …, v_{2a−1}` only and
/// `d−a−1` pendants on `v_1`.
pub fn build_case5(a: usize, b: usize, d: usize) -> Result<Graph> {
    require(1 < a && a <= b && d > a, "case 5 needs 1 < a ≤ b and d > a")?;
    let mut g = Builder::apex(2 * b, d - a - 1);
    core_block(&mut g, a, b);
    for l in 1..=a {
        g.edge(g.v(2 * l - 1), g.x(1));
    }
    g.pendants_on_v1();
    g.finish()
}

fn joined_core(a: usize, b: usize, c: usize, y_len: usize) -> Result<Graph> {
    let mut g = Builder::new(2 * b, 2 * (c - b), y_len);
    core_block(&mut g, a, b);
    for l in 1..=2 * b {
        for m in 1..=2 * (c - b) {
            g.edge(g.v(l), g.x(m));
        }
    }
    g.pendants_on_v1();
    g.finish()
}

/// Case 6: the core block completely joined to `x_1..x_{2(c−b)}`, plus
/// `d − 2(c−b)` pendants on `v_1`.
pub fn build_case6(a: usize, b: usize, c: usize, d: usize) -> Result<Graph> {
    require(
        1 < a && a <= b && b < c && c <= 2 * b && 2 * (c - b) >= a && d >= 2 * (c - b),
        "case 6 needs 1 < a ≤ b < c ≤ 2b and d ≥ 2(c−b) ≥ a",
    )?;
    joined_core(a, b, c, d - 2 * (c - b))
}

/// Case 7: as case 6 but with `d − a` pendants on `v_1`.
pub fn build_case7(a: usize, b: usize, c: usize, d: usize) -> Result<Graph> {
    require(
        1 < a && a <= b && b < c && c <= 2 * b && a > 2 * (c - b) && d >= a,
        "case 7 needs 1 < a ≤ b < c ≤ 2b and d ≥ a > 2(c−b)",
    )?;
    joined_core(a, b, c, d - a)
}

/// Builds the graph for a validated tuple.
pub fn build(p: &ConstructionParams) -> Result<Graph> {
    let ConstructionParams { a, b, c, d, case } = *p;
    match case {
        Case::C1 => build_case1(b, d),
        Case::C2 => build_case2(b, c),
        Case::C3 => build_case3(b, c, d),
        Case::C4 => build_case4(a, b),
        Case::C5 => build_case5(a, b, d),
        Case::C6 => build_case6(a, b, c, d),
        Case::C7 => build_case7(a, b, c, d),
    }
}

/// A connected graph with invariant profile `(a,b,c,d)`.
pub fn construct(a: usize, b: usize, c: usize, d: usize) -> Result<Graph> {
    build(&ConstructionParams::new(a, b, c, d)?)
}

/// The explicit matchings used to pin min-match and match: a maximal matching
/// of size `b` and a matching of size `c`, both checked against the graph.
pub fn witness_matchings(a: usize, b: usize, c: usize, d: usize) -> Result<(Matching, Matching)> {
    let p = ConstructionParams::new(a, b, c, d)?;
    let g = build(&p)?;
    let x0 = p.blocks().x.start;
    let v = |i: usize| i - 1;
    let x = |i: usize| x0 + i - 1;
    let ladder =
        |count: usize| -> Matching { (1..=count).map(|i| (v(2 * i - 1), v(2 * i))).collect() };

    let (maximal, maximum) = match p.case {
        Case::C1 | Case::C4 | Case::C5 => (ladder(b), ladder(b)),
        Case::C2 | Case::C3 => {
            let maximal = (1..=b).map(|i| (v(i), v(b + i))).collect();
            let maximum = (1..=c - b)
                .flat_map(|i| [(v(i), x(i)), (v(b + i), x(c - b + i))])
                .chain((1..=2 * b - c).map(|j| (v(c - b + j), v(c + j))))
                .collect();
            (maximal, maximum)
        }
        Case::C6 | Case::C7 => {
            let k = 2 * (c - b);
            let maximum = (1..=k)
                .map(|i| (v(i), x(i)))
                .chain((1..=2 * b - c).map(|j| (v(k + 2 * j - 1), v(k + 2 * j))))
                .collect();
            (ladder(b), maximum)
        }
    };

    if maximal.len() != b || !is_maximal_matching(&g, &maximal)? {
        return Err(Error::Precondition(format!(
            "witness for {} is not a maximal matching of size {b}",
            p.case
        )));
    }
    if maximum.len() != c || !is_matching(&g, &maximum)? {
        return Err(Error::Precondition(format!(
            "witness for {} is not a matching of size {c}",
            p.case
        )));
    }
    Ok((maximal, maximum))
}
