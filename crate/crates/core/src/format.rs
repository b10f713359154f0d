//! Graph file formats.
//!
//! * JSON `GraphDocument`: `{"edges":[[u,v],...],"labels":{"0":"v_1",...},"n":N}`.
//!   Canonical output has sorted keys, `u < v` pairs in lexicographic order
//!   and no insignificant whitespace. `labels` is omitted when empty.
//! * Edge list: a header line `n <count>`, then `e <u> <v>` per edge and
//!   optionally `l <index> <label>`. `#` starts a comment; blank lines are
//!   ignored.
//! * DOT (output only): an undirected `graph` with one statement per edge.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, String>>,
    pub n: usize,
}

impl From<&Graph> for GraphDocument {
    fn from(g: &Graph) -> Self {
        let labels = (!g.labels().is_empty()).then(|| {
            g.labels()
                .iter()
                .map(|(v, l)| (v.to_string(), l.clone()))
                .collect()
        });
        GraphDocument {
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels,
            n: g.order(),
        }
    }
}

impl TryFrom<GraphDocument> for Graph {
    type Error = Error;

    fn try_from(doc: GraphDocument) -> Result<Graph> {
        let g = Graph::with_edges(doc.n, doc.edges.into_iter().map(|[u, v]| (u, v)))?;
        let mut labels = Vec::new();
        for (k, l) in doc.labels.unwrap_or_default() {
            let v = k
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("label key {k:?} is not a vertex index")))?;
            labels.push((v, l));
        }
        g.with_labels(labels)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_value(GraphDocument::from(g))
        .expect("document serialises")
        .to_string()
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::try_from(doc)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    for (v, l) in g.labels() {
        writeln!(out, "l {v} {l}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}: {raw:?}", lineno + 1));
        let int = |s: Option<&str>| -> Result<usize> {
            s.ok_or_else(|| err("missing field"))?
                .parse()
                .map_err(|_| err("expected a non-negative integer"))
        };
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("n") if n.is_none() => {
                n = Some(int(fields.next())?);
                if fields.next().is_some() {
                    return Err(err("trailing fields"));
                }
            }
            Some("n") => return Err(err("duplicate vertex count")),
            Some(_) if n.is_none() => return Err(err("first line must be `n <count>`")),
            Some("e") => {
                let u = int(fields.next())?;
                let v = int(fields.next())?;
                if fields.next().is_some() {
                    return Err(err("trailing fields"));
                }
                edges.push((u, v));
            }
            Some("l") => {
                let v = int(fields.next())?;
                let rest: Vec<&str> = fields.collect();
                if rest.is_empty() {
                    return Err(err("missing label"));
                }
                labels.push((v, rest.join(" ")));
            }
            Some(_) => return Err(err("unknown record")),
            None => unreachable!(),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `n <count>` header".into()))?;
    Graph::with_edges(n, edges)?.with_labels(labels)
}

/// JSON when the first non-blank character is `{`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match g.label(v) {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", dot_escape(l)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
