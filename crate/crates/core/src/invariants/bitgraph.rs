//! Bitmask adjacency used by the exponential solvers.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) type Mask = u128;

pub(crate) const MAX_VERTICES: usize = Mask::BITS as usize;

pub(crate) struct BitGraph {
    pub n: usize,
    pub adj: Vec<Mask>,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.order() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: g.order(),
                limit: MAX_VERTICES,
            });
        }
        let adj = g
            .adjacency()
            .iter()
            .map(|ns| ns.iter().fold(0, |m, &w| m | bit(w)))
            .collect();
        Ok(BitGraph { n: g.order(), adj })
    }

    pub fn all(&self) -> Mask {
        full(self.n)
    }

    pub fn degree_in(&self, v: usize, within: Mask) -> u32 {
        (self.adj[v] & within).count_ones()
    }

    /// Drops vertices with no neighbour inside `within`.
    pub fn strip_isolated(&self, within: Mask) -> Mask {
        let mut out = within;
        for v in iter(within) {
            if self.adj[v] & within == 0 {
                out &= !bit(v);
            }
        }
        out
    }

    /// Size of a greedy maximal matching of the subgraph induced on `within`.
    pub fn greedy_matching(&self, within: Mask) -> u32 {
        let mut free = within;
        let mut size = 0;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= !bit(v);
            let nb = self.adj[v] & free;
            if nb != 0 {
                free &= !bit(nb.trailing_zeros() as usize);
                size += 1;
            }
        }
        size
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1 << v
}

pub(crate) fn full(n: usize) -> Mask {
    if n == MAX_VERTICES {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Members of `m` in ascending order.
pub(crate) fn iter(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}
