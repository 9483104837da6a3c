//! Canonical labelling.
//!
//! The canonical key of a graph is the lexicographically smallest
//! column-major upper-triangle bit string, `(0,1) (0,2) (1,2) (0,3) ...`,
//! over all vertex orderings that respect an isomorphism-invariant ordered
//! partition of the vertices. The partition comes from iterated degree
//! refinement; labelled vertices (flag roots) start as singleton cells in
//! label order, so they always occupy positions `0..s`.
//!
//! Because the partition is invariant, two graphs get the same key iff they
//! are isomorphic (by a label-preserving isomorphism when `s > 0`). The
//! search uses three exact prunings:
//!
//! * only the candidates giving the smallest next column are expanded,
//! * a branch whose prefix already exceeds the best complete string dies,
//! * of two twins in the same cell only the first is tried (swapping them is
//!   an automorphism fixing everything placed so far).

use super::{bits, Graph};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 10;

/// Isomorphism-invariant key. `bits` holds the upper triangle left-aligned
/// (pair `(0,1)` is the most significant bit), so numeric order is
/// lexicographic order on the bit string.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct CanonKey {
    pub n: u8,
    /// Number of labelled vertices (0 for plain graphs).
    pub s: u8,
    pub bits: u64,
}

impl CanonKey {
    /// Rebuilds the canonical graph; labelled vertices are `0..s`.
    pub fn graph(&self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (63 - pair_index(i, j)) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// The key of the same graph with labels forgotten.
    pub fn unlabeled(&self) -> CanonKey {
        if self.s == 0 {
            *self
        } else {
            canonical_labeling(&self.graph(), 0).0
        }
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.n as usize * (self.n as usize).saturating_sub(1) / 2;
        write!(f, "K{}/{}:", self.n, self.s)?;
        for i in 0..m {
            write!(f, "{}", self.bits >> (63 - i) & 1)?;
        }
        Ok(())
    }
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// A graph together with its canonical key. The stored graph is the
/// canonical relabelling, so equal keys mean equal adjacency.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonGraph {
    key: CanonKey,
    graph: Graph,
}

impl CanonGraph {
    pub fn from_key(key: CanonKey) -> Self {
        CanonGraph {
            key,
            graph: key.graph(),
        }
    }

    pub fn key(&self) -> CanonKey {
        self.key
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

impl PartialOrd for CanonGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl fmt::Debug for CanonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonGraph({:?}, edges={:?})", self.key, self.graph.edges())
    }
}

/// Canonical form of an unlabelled graph.
pub fn canonical_form(g: &Graph) -> Result<CanonGraph> {
    if g.order() > MAX_CANON_ORDER {
        return Err(Error::TooLarge {
            operation: "canonical_form",
            order: g.order(),
            max: MAX_CANON_ORDER,
        });
    }
    let (key, perm) = canonical_labeling(g, 0);
    Ok(CanonGraph {
        key,
        graph: g.permuted(&perm),
    })
}

/// Canonical key of `g` where vertices `0..s` carry the distinct labels
/// `0..s`. Returns the key and the ordering: `perm[i]` is the vertex of `g`
/// placed at canonical position `i`, and `perm[i] = i` for `i < s`.
///
/// Panics if `g` has more than 11 vertices (the key is a `u64`); callers
/// facing user input go through [`canonical_form`].
pub fn canonical_labeling(g: &Graph, s: usize) -> (CanonKey, Vec<usize>) {
    let n = g.order();
    assert!(n <= 11, "canonical labelling supports at most 11 vertices");
    assert!(s <= n);
    let colors = refine(g, s);
    // cell_at[p] = color of the cell covering position p
    let mut cell_at: Vec<u32> = colors.clone();
    cell_at.sort_unstable();
    let mut search = Search {
        g,
        colors: &colors,
        cell_at: &cell_at,
        placed: Vec::with_capacity(n),
        used: 0,
        best: None,
        best_perm: Vec::new(),
    };
    search.dfs(0);
    let bits = search.best.unwrap_or(0);
    (
        CanonKey {
            n: n as u8,
            s: s as u8,
            bits,
        },
        search.best_perm,
    )
}

/// Iterated degree refinement. Labelled vertices get colors `0..s` and
/// remain singletons; the returned colors are dense and their order is an
/// isomorphism invariant.
fn refine(g: &Graph, s: usize) -> Vec<u32> {
    let n = g.order();
    let mut colors: Vec<u32> = (0..n).map(|v| v.min(s) as u32).collect();
    let mut count = distinct(&colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = bits(g.neighbors(v)).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0u32; n];
        let mut c = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let new_count = if n == 0 { 0 } else { c as usize + 1 };
        colors = next;
        if new_count == count {
            return colors;
        }
        count = new_count;
    }
}

fn distinct(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    colors: &'a [u32],
    cell_at: &'a [u32],
    placed: Vec<usize>,
    used: u32,
    best: Option<u64>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u64 {
        let mut col = 0u64;
        for (i, &u) in self.placed.iter().enumerate() {
            if self.g.has_edge(u, v) {
                col |= 1 << (63 - pair_index(i, self.placed.len()));
            }
        }
        col
    }

    fn dfs(&mut self, cur: u64) {
        let p = self.placed.len();
        let n = self.g.order();
        if p == n {
            if self.best.is_none_or(|b| cur < b) {
                self.best = Some(cur);
                self.best_perm = self.placed.clone();
            }
            return;
        }
        let cell = self.cell_at[p];
        let mut cands: Vec<(u64, usize)> = (0..n)
            .filter(|&v| self.used >> v & 1 == 0 && self.colors[v] == cell)
            .map(|v| (self.column(v), v))
            .collect();
        let min_col = cands.iter().map(|c| c.0).min().expect("cell is nonempty");
        cands.retain(|c| c.0 == min_col);
        let next = cur | min_col;
        if let Some(b) = self.best {
            let len = (p + 1) * p / 2;
            if len > 0 {
                let shift = 64 - len;
                if next >> shift > b >> shift {
                    return;
                }
            }
        }
        let mut tried: Vec<usize> = Vec::with_capacity(cands.len());
        for &(_, v) in &cands {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            self.placed.push(v);
            self.used |= 1 << v;
            self.dfs(next);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let nu = self.g.neighbors(u) & !(1 << v);
        let nv = self.g.neighbors(v) & !(1 << u);
        nu == nv
    }
}
