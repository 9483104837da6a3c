//! Flag densities in labelled host graphs.

use super::{TypeSigma, TypedFlag, MAX_TYPE_SIZE};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{binomial, canonical_labeling, for_each_subset, CanonKey, Graph};
use crate::symbolic::Q;
use num_bigint::BigInt;
use std::collections::HashMap;

/// A host graph with an injective labelling `θ`: label `i` sits on vertex
/// `theta[i]`. Unlike [`TypedFlag`] it is not canonicalized, so it may be
/// large (up to 32 vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    theta: Vec<usize>,
    free: Vec<usize>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, theta: Vec<usize>) -> Result<Self> {
        let n = graph.order();
        if theta.len() > MAX_TYPE_SIZE {
            return Err(Error::InvalidFlag(format!("type size {} exceeds {MAX_TYPE_SIZE}", theta.len())));
        }
        let mut seen = 0u32;
        for &v in &theta {
            if v >= n || seen >> v & 1 == 1 {
                return Err(Error::InvalidFlag(format!("θ = {theta:?} is not injective into {n} vertices")));
            }
            seen |= 1 << v;
        }
        let free = (0..n).filter(|v| seen >> v & 1 == 0).collect();
        Ok(LabeledGraph { graph, theta, free })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn type_size(&self) -> usize {
        self.theta.len()
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn sigma(&self) -> TypeSigma {
        TypeSigma::new(&self.graph.induced(&self.theta)).expect("type size checked")
    }

    /// Canonical flag induced by the labelled vertices plus the free
    /// vertices selected by `mask` (bit `i` = `free[i]`).
    fn flag_at(&self, mask: u32) -> CanonKey {
        let mut verts = self.theta.clone();
        verts.extend(crate::graph::bits(mask).map(|i| self.free[i]));
        canonical_labeling(&self.graph.induced(&verts), self.theta.len()).0
    }
}

impl From<&TypedFlag> for LabeledGraph {
    fn from(f: &TypedFlag) -> Self {
        f.host()
    }
}

/// Counts of each σ-flag on `ell` vertices induced in `host`, with the
/// number of `(ell - s)`-subsets examined.
pub fn flag_profile(host: &LabeledGraph, ell: usize) -> (HashMap<CanonKey, u64>, u64) {
    let s = host.type_size();
    let mut counts = HashMap::new();
    if ell < s || ell > host.order() {
        return (counts, 0);
    }
    let m = host.free.len();
    for_each_subset(m, ell - s, |mask| {
        *counts.entry(host.flag_at(mask)).or_insert(0) += 1;
    });
    (counts, binomial(m as u64, (ell - s) as u64))
}

/// Counts of flag pairs `(F1, F2)` induced by ordered disjoint pairs of
/// free-vertex sets of sizes `a` and `b`, with the number of pairs examined.
pub fn pair_profile(host: &LabeledGraph, a: usize, b: usize, exec: Exec) -> (HashMap<(CanonKey, CanonKey), u64>, u64) {
    let m = host.free.len();
    if a + b > m {
        return (HashMap::new(), 0);
    }
    let subsets = |r: usize| {
        let mut v = Vec::new();
        for_each_subset(m, r, |mask| v.push(mask));
        v
    };
    let xs = subsets(a);
    let ys = if a == b { xs.clone() } else { subsets(b) };
    let kx: Vec<CanonKey> = exec.map(&xs, |&x| host.flag_at(x));
    let ky: Vec<CanonKey> = if a == b { kx.clone() } else { exec.map(&ys, |&y| host.flag_at(y)) };
    let idx: Vec<usize> = (0..xs.len()).collect();
    let partial: Vec<HashMap<(CanonKey, CanonKey), u64>> = exec.map(&idx, |&i| {
        let mut local = HashMap::new();
        for (j, &y) in ys.iter().enumerate() {
            if xs[i] & y == 0 {
                *local.entry((kx[i], ky[j])).or_insert(0) += 1;
            }
        }
        local
    });
    let mut counts = HashMap::new();
    for p in partial {
        for (k, v) in p {
            *counts.entry(k).or_insert(0) += v;
        }
    }
    let total = binomial(m as u64, a as u64) * binomial((m - a) as u64, b as u64);
    (counts, total)
}

fn check_type(f: &TypedFlag, host: &LabeledGraph) -> Result<()> {
    if f.sigma() != host.sigma() {
        return Err(Error::BasisMismatch(format!("flag {f} and host have different types")));
    }
    Ok(())
}

fn ratio(num: u64, den: u64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `P(F, G)`: probability that a uniform `(|F| - s)`-set of unlabelled host
/// vertices induces `F` together with the labels.
pub fn flag_density(f: &TypedFlag, host: &LabeledGraph) -> Result<Q> {
    check_type(f, host)?;
    if f.order() > host.order() {
        return Err(Error::Precondition(format!(
            "flag order {} exceeds host order {}",
            f.order(),
            host.order()
        )));
    }
    let (counts, total) = flag_profile(host, f.order());
    Ok(ratio(counts.get(&f.key()).copied().unwrap_or(0), total))
}

/// `P(F1, F2; G)` over uniformly random disjoint sets of the right sizes.
pub fn pair_density(f1: &TypedFlag, f2: &TypedFlag, host: &LabeledGraph) -> Result<Q> {
    check_type(f1, host)?;
    check_type(f2, host)?;
    let s = host.type_size();
    let (a, b) = (f1.order() - s, f2.order() - s);
    if s + a + b > host.order() {
        return Err(Error::Precondition(format!(
            "|F1| + |F2| - s = {} exceeds host order {}",
            s + a + b,
            host.order()
        )));
    }
    let (counts, total) = pair_profile(host, a, b, Exec::Sequential);
    Ok(ratio(counts.get(&(f1.key(), f2.key())).copied().unwrap_or(0), total))
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_flags;
    use super::*;
    use crate::symbolic::{q, qi};

    fn rooted(g: Graph, theta: &[usize]) -> LabeledGraph {
        LabeledGraph::new(g, theta.to_vec()).unwrap()
    }

    #[test]
    fn single_root_densities() {
        let edge = TypedFlag::new(&Graph::complete(2), &[0]).unwrap();
        let star = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(flag_density(&edge, &rooted(star, &[0])).unwrap(), qi(1));
        assert_eq!(flag_density(&edge, &rooted(Graph::path(3), &[0])).unwrap(), q(1, 2));
        let f = TypedFlag::new(&Graph::cycle(5), &[1, 3]).unwrap();
        assert_eq!(flag_density(&f, &f.host()).unwrap(), qi(1));
    }

    #[test]
    fn type_mismatch_is_an_error() {
        let edge = TypedFlag::new(&Graph::complete(2), &[0]).unwrap();
        assert!(flag_density(&edge, &rooted(Graph::path(3), &[0, 1])).is_err());
        assert!(pair_density(&edge, &edge, &rooted(Graph::path(2), &[0])).is_err());
    }

    #[test]
    fn sigma_only_pair_is_one() {
        let g = Graph::cycle(6);
        let host = rooted(g, &[0, 1]);
        let sigma = TypedFlag::new(&Graph::complete(2), &[0, 1]).unwrap();
        assert_eq!(pair_density(&sigma, &sigma, &host).unwrap(), qi(1));
    }

    #[test]
    fn pair_density_is_symmetric_on_tight_hosts() {
        let sigma = TypeSigma::new(&Graph::from_edges(2, &[(0, 1)]).unwrap()).unwrap();
        let flags = enumerate_flags(sigma, 3).unwrap();
        for host in enumerate_flags(sigma, 4).unwrap().iter() {
            let h = host.host();
            for f1 in flags.iter() {
                for f2 in flags.iter() {
                    assert_eq!(pair_density(f1, f2, &h).unwrap(), pair_density(f2, f1, &h).unwrap());
                }
            }
        }
    }

    #[test]
    fn profiles_are_distributions() {
        let host = rooted(Graph::cycle(7), &[0, 3]);
        let (c, total) = flag_profile(&host, 4);
        assert_eq!(c.values().sum::<u64>(), total);
        let (p, total) = pair_profile(&host, 1, 2, Exec::Parallel);
        assert_eq!(p.values().sum::<u64>(), total);
        assert_eq!(total, 5 * 6);
        let (pseq, _) = pair_profile(&host, 1, 2, Exec::Sequential);
        assert_eq!(p, pseq);
    }
}
