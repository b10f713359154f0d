use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters of a seeded `G(n, p)` sample.
///
/// The stream is ChaCha8 seeded with `seed_from_u64(seed)`. Pairs `u < v` are
/// visited in lexicographic order and each kept when `gen_bool(p)` fires. With
/// `forbid_isolated`, every vertex still isolated when visited in ascending
/// order is then joined to a uniformly drawn other vertex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub forbid_isolated: bool,
}

pub fn random_graph(spec: &RandomGraphSpec) -> Result<Graph> {
    let RandomGraphSpec {
        n,
        p,
        seed,
        forbid_isolated,
    } = *spec;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameters(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    if forbid_isolated && n < 2 {
        return Err(Error::InvalidParameters(
            "forbid_isolated needs at least two vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut degree = vec![0usize; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
                degree[u] += 1;
                degree[v] += 1;
            }
        }
    }
    if forbid_isolated {
        for v in 0..n {
            if degree[v] == 0 {
                let r = rng.gen_range(0..n - 1);
                let w = if r >= v { r + 1 } else { r };
                edges.push((v, w));
                degree[v] += 1;
                degree[w] += 1;
            }
        }
    }
    Graph::with_edges(n, edges)
}
