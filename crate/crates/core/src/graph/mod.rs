//! Small simple graphs.
//!
//! [`Graph`] is a plain adjacency-bitset graph on at most [`MAX_ORDER`]
//! vertices; it is what hosts are built from. Anything that needs an
//! isomorphism class goes through [`canonical_form`], which is capped at
//! [`MAX_CANON_ORDER`] vertices.

mod canon;
mod enumerate;
pub mod graph6;
mod parts;
mod stats;

pub use canon::{canonical_form, canonical_labeling, CanonGraph, CanonKey, MAX_CANON_ORDER};
pub use enumerate::{augment_classes, enumerate_graphs, MAX_ENUM_ORDER};
pub use parts::{complete_multipartite, turan_graph, PartSizes};
pub use stats::{
    aut_count, binomial, c5, clique_number, count_c5, count_embeddings, count_subgraphs,
    edit_distance, induced_count, induced_density, is_complete_multipartite, MAX_EDIT_ORDER,
};

use crate::error::{Error, Result};
use std::fmt;

/// Hard limit for plain graphs (one `u32` row per vertex).
pub const MAX_ORDER: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u32; MAX_ORDER],
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph {
            n,
            rows: [0; MAX_ORDER],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.rows[u] = low_mask(n) & !(1 << u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for u in 0..n {
                g.add_edge(u, (u + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                operation: "graph construction",
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidAdjacency(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidAdjacency(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a 0/1 matrix, checking symmetry and the diagonal.
    pub fn from_matrix(m: &[Vec<u8>]) -> Result<Self> {
        let n = m.len();
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                operation: "graph construction",
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut g = Graph::empty(n);
        for (u, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidAdjacency(format!("row {u} has length {}", row.len())));
            }
            for (v, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 if u == v => return Err(Error::InvalidAdjacency(format!("loop at vertex {u}"))),
                    1 => {
                        if m[v][u] != 1 {
                            return Err(Error::InvalidAdjacency(format!("asymmetric at ({u},{v})")));
                        }
                        g.rows[u] |= 1 << v;
                    }
                    _ => return Err(Error::InvalidAdjacency(format!("entry {x} at ({u},{v})"))),
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> u32 {
        self.rows[u]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    pub fn degree(&self, u: usize) -> u32 {
        self.rows[u].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            g.rows[u] = !self.rows[u] & low_mask(self.n) & !(1 << u);
        }
        g
    }

    /// Adds one vertex adjacent to the vertices in `mask`.
    pub fn extend(&self, mask: u32) -> Self {
        let n = self.n;
        assert!(n < MAX_ORDER);
        let mut g = *self;
        g.n = n + 1;
        g.rows[n] = mask & low_mask(n);
        for u in 0..n {
            if mask >> u & 1 == 1 {
                g.rows[u] |= 1 << n;
            }
        }
        g
    }

    /// Relabels so that old vertex `perm[i]` becomes vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (i, &pi) in perm.iter().enumerate() {
            for (j, &pj) in perm.iter().enumerate().skip(i + 1) {
                if self.has_edge(pi, pj) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// The subgraph induced on `verts`, in the given order.
    pub fn induced(&self, verts: &[usize]) -> Self {
        self.permuted_partial(verts)
    }

    fn permuted_partial(&self, verts: &[usize]) -> Self {
        let mut g = Graph::empty(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            let mut row = 0u32;
            for (j, &b) in verts.iter().enumerate() {
                row |= ((self.rows[a] >> b) & 1) << j;
            }
            g.rows[i] = row;
        }
        g
    }

    /// The subgraph induced on the vertex bitmask, vertices in increasing order.
    pub fn induced_mask(&self, mask: u32) -> Self {
        let verts: Vec<usize> = bits(mask).collect();
        self.permuted_partial(&verts)
    }

    pub fn is_clique(&self, mask: u32) -> bool {
        bits(mask).all(|u| self.rows[u] & mask == mask & !(1 << u))
    }

    /// Disjoint union with `other`, whose vertices are shifted after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let n = self.n + other.n;
        assert!(n <= MAX_ORDER);
        let mut g = *self;
        g.n = n;
        for u in 0..other.n {
            g.rows[self.n + u] = other.rows[u] << self.n;
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates over the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Calls `f` on every `r`-element subset of `0..n`, as a bitmask, in
/// increasing numeric order.
pub(crate) fn for_each_subset(n: usize, r: usize, mut f: impl FnMut(u32)) {
    if r > n {
        return;
    }
    if r == 0 {
        f(0);
        return;
    }
    let mut s: u64 = (1u64 << r) - 1;
    let limit: u64 = 1u64 << n;
    while s < limit {
        f(s as u32);
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r2 = s + c;
        s = (((r2 ^ s) >> 2) / c) | r2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_validation() {
        assert!(Graph::from_matrix(&[vec![0, 1], vec![0, 0]]).is_err());
        assert!(Graph::from_matrix(&[vec![1, 0], vec![0, 0]]).is_err());
        let g = Graph::from_matrix(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn subsets_are_complete() {
        let mut seen = Vec::new();
        for_each_subset(6, 3, |m| seen.push(m));
        assert_eq!(seen.len(), 20);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert!(seen.iter().all(|m| m.count_ones() == 3 && *m < 64));
        let mut n = 0;
        for_each_subset(32, 1, |_| n += 1);
        assert_eq!(n, 32);
    }

    #[test]
    fn complement_and_extend() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement().edge_count(), 5);
        let g = c5.extend(0b10101);
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(5), 3);
        assert!(g.has_edge(0, 5) && g.has_edge(5, 4) && !g.has_edge(1, 5));
    }

    #[test]
    fn induced_keeps_order() {
        let p = Graph::path(4);
        let h = p.induced(&[3, 2, 0]);
        assert!(h.has_edge(0, 1));
        assert!(!h.has_edge(1, 2));
        assert_eq!(h.edge_count(), 1);
    }
}
