use super::canon::{canonical_form, CanonGraph};
use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Part sizes of a complete multipartite graph. Every part is nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartSizes(Vec<u64>);

impl PartSizes {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParts(format!("empty part in {parts:?}")));
        }
        Ok(PartSizes(parts))
    }

    /// Balanced parts of `T_k(n)`; for `n < k` only `n` singleton parts remain.
    pub fn turan(k: u64, n: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParts("Turán graph needs k >= 1".into()));
        }
        let parts = (0..k)
            .map(|i| n / k + u64::from(i < n % k))
            .filter(|&x| x > 0)
            .collect();
        Ok(PartSizes(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Materializes the graph with parts laid out consecutively.
    pub fn graph(&self) -> Result<Graph> {
        let n = self.total() as usize;
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                operation: "complete multipartite materialization",
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut part_of = Vec::with_capacity(n);
        for (i, &x) in self.0.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, x as usize));
        }
        let mut g = Graph::empty(n);
        for v in 0..n {
            for u in 0..v {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Moves one vertex from part `i` to part `j`, dropping `i` if it empties.
    pub fn moved(&self, i: usize, j: usize) -> Result<Self> {
        if i >= self.len() || j >= self.len() || i == j {
            return Err(Error::Precondition(format!("invalid parts {i}, {j}")));
        }
        let mut p = self.0.clone();
        p[i] -= 1;
        p[j] += 1;
        p.retain(|&x| x > 0);
        Ok(PartSizes(p))
    }
}

impl fmt::Display for PartSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for PartSizes {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::InvalidParts(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PartSizes::new(parts)
    }
}

/// The complete multipartite graph with the given parts (at most 10 vertices).
pub fn complete_multipartite(p: &PartSizes) -> Result<CanonGraph> {
    canonical_form(&p.graph()?)
}

/// `T_k(n)`, the balanced complete `k`-partite graph (at most 10 vertices).
pub fn turan_graph(k: u64, n: u64) -> Result<CanonGraph> {
    complete_multipartite(&PartSizes::turan(k, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_shapes() {
        assert_eq!(PartSizes::turan(3, 7).unwrap().parts(), &[3, 2, 2]);
        assert_eq!(PartSizes::turan(4, 2).unwrap().parts(), &[1, 1]);
        let t = turan_graph(3, 6).unwrap();
        assert_eq!(t.graph().edge_count(), 12);
    }

    #[test]
    fn extremes() {
        let k5 = complete_multipartite(&"1,1,1,1,1".parse().unwrap()).unwrap();
        assert_eq!(k5.key(), canonical_form(&Graph::complete(5)).unwrap().key());
        let e5 = complete_multipartite(&PartSizes::new(vec![5]).unwrap()).unwrap();
        assert_eq!(e5.graph().edge_count(), 0);
        assert!(PartSizes::new(vec![2, 0]).is_err());
        assert!("2,x".parse::<PartSizes>().is_err());
    }

    #[test]
    fn moving_vertices() {
        let p = PartSizes::new(vec![4, 2, 2]).unwrap();
        assert_eq!(p.moved(0, 1).unwrap().parts(), &[3, 3, 2]);
        let q = PartSizes::new(vec![1, 2]).unwrap();
        assert_eq!(q.moved(0, 1).unwrap().parts(), &[3]);
    }
}
