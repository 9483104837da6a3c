//! Subgraph statistics: counts, induced densities, cliques, edit distance.

use super::canon::canonical_labeling;
use super::{bits, for_each_subset, low_mask, CanonGraph, Graph};
use crate::error::{Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Largest order accepted by [`edit_distance`].
pub const MAX_EDIT_ORDER: usize = 8;

impl AsRef<Graph> for Graph {
    fn as_ref(&self) -> &Graph {
        self
    }
}

impl AsRef<Graph> for CanonGraph {
    fn as_ref(&self) -> &Graph {
        self.graph()
    }
}

pub fn c5() -> Graph {
    Graph::cycle(5)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of injective maps `V(H) -> V(G)` sending edges to edges.
pub fn count_embeddings(h: impl AsRef<Graph>, g: impl AsRef<Graph>) -> u64 {
    let (h, g) = (h.as_ref(), g.as_ref());
    if h.order() > g.order() {
        return 0;
    }
    let mut image = vec![0usize; h.order()];
    embed(h, g, 0, 0, &mut image)
}

fn embed(h: &Graph, g: &Graph, depth: usize, used: u32, image: &mut [usize]) -> u64 {
    if depth == h.order() {
        return 1;
    }
    // candidates must be adjacent to the images of earlier H-neighbours
    let mut cand = low_mask(g.order()) & !used;
    for u in bits(h.neighbors(depth) & low_mask(depth)) {
        cand &= g.neighbors(image[u]);
    }
    let mut total = 0;
    for v in bits(cand) {
        image[depth] = v;
        total += embed(h, g, depth + 1, used | 1 << v, image);
    }
    total
}

/// `|Aut(H)|`.
pub fn aut_count(h: impl AsRef<Graph>) -> u64 {
    let h = h.as_ref();
    // an edge-preserving bijection of H onto itself is an automorphism
    count_embeddings(h, h)
}

/// `ν(H, G)`: the number of (not necessarily induced) subgraphs of `G`
/// isomorphic to `H`.
pub fn count_subgraphs(h: impl AsRef<Graph>, g: impl AsRef<Graph>) -> u64 {
    let h = h.as_ref();
    count_embeddings(h, g) / aut_count(h)
}

/// `ν(C5, G)`.
pub fn count_c5(g: impl AsRef<Graph>) -> u64 {
    count_embeddings(c5(), g) / 10
}

/// Number of `|H|`-subsets `X` with `G[X] ≅ H`.
pub fn induced_count(h: impl AsRef<Graph>, g: impl AsRef<Graph>) -> u64 {
    let (h, g) = (h.as_ref(), g.as_ref());
    let target = canonical_labeling(h, 0).0;
    let mut count = 0;
    for_each_subset(g.order(), h.order(), |mask| {
        if canonical_labeling(&g.induced_mask(mask), 0).0 == target {
            count += 1;
        }
    });
    count
}

/// `P(H, G)`, exact.
pub fn induced_density(h: impl AsRef<Graph>, g: impl AsRef<Graph>) -> BigRational {
    let (h, g) = (h.as_ref(), g.as_ref());
    let total = binomial(g.order() as u64, h.order() as u64);
    if total == 0 {
        return BigRational::from_integer(0.into());
    }
    BigRational::new(BigInt::from(induced_count(h, g)), BigInt::from(total))
}

/// Size of a largest clique.
pub fn clique_number(g: impl AsRef<Graph>) -> usize {
    let g = g.as_ref();
    fn grow(g: &Graph, size: usize, cand: u32, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(g, size + 1, rest & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    grow(g, 0, low_mask(g.order()), &mut best);
    best
}

/// True iff `G` is complete multipartite, i.e. non-adjacency is transitive.
pub fn is_complete_multipartite(g: impl AsRef<Graph>) -> bool {
    let g = g.as_ref();
    let n = g.order();
    let full = low_mask(n);
    (0..n).all(|v| {
        let non = !g.neighbors(v) & full;
        // every non-neighbour of v has exactly the same neighbourhood
        bits(non).all(|u| g.neighbors(u) == g.neighbors(v))
    })
}

/// Minimum number of adjacency changes turning `G` into a copy of `H`.
pub fn edit_distance(g: impl AsRef<Graph>, h: impl AsRef<Graph>) -> Result<usize> {
    let (g, h) = (g.as_ref(), h.as_ref());
    if g.order() != h.order() {
        return Err(Error::OrderMismatch(g.order(), h.order()));
    }
    let n = g.order();
    if n > MAX_EDIT_ORDER {
        return Err(Error::TooLarge {
            operation: "edit_distance",
            order: n,
            max: MAX_EDIT_ORDER,
        });
    }
    let best = (0..n)
        .permutations(n)
        .map(|perm| {
            let p = h.permuted(&perm);
            (0..n)
                .map(|v| (g.neighbors(v) ^ p.neighbors(v)).count_ones() as usize)
                .sum::<usize>()
                / 2
        })
        .min()
        .unwrap_or(0);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::super::{canonical_form, complete_multipartite, enumerate_graphs, PartSizes};
    use super::*;

    fn parts(p: &[u64]) -> Graph {
        PartSizes::new(p.to_vec()).unwrap().graph().unwrap()
    }

    /// Oracle: 5-cycles as 5-sets with a cyclic order, each cycle counted
    /// once by fixing the smallest vertex first and the direction.
    fn c5_by_cyclic_orders(g: &Graph) -> u64 {
        let mut c = 0;
        for_each_subset(g.order(), 5, |mask| {
            let vs: Vec<usize> = bits(mask).collect();
            for rest in vs[1..].iter().permutations(4) {
                if rest[0] > rest[3] {
                    continue;
                }
                let cyc = [vs[0], *rest[0], *rest[1], *rest[2], *rest[3]];
                if (0..5).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % 5])) {
                    c += 1;
                }
            }
        });
        c
    }

    #[test]
    fn c5_counts() {
        assert_eq!(count_c5(Graph::complete(5)), 12);
        assert_eq!(count_c5(c5()), 1);
        assert_eq!(count_c5(parts(&[2, 2, 1])), 4);
        assert_eq!(count_subgraphs(c5(), parts(&[2, 1, 1, 1])), 6);
        for g in enumerate_graphs(6).unwrap() {
            assert_eq!(count_c5(g), c5_by_cyclic_orders(g.graph()));
        }
    }

    #[test]
    fn subgraph_counts_small() {
        let k2 = Graph::complete(2);
        assert_eq!(count_subgraphs(k2, Graph::complete(4)), 6);
        assert_eq!(count_subgraphs(Graph::complete(3), Graph::complete(4)), 4);
        assert_eq!(count_subgraphs(Graph::path(3), Graph::complete(3)), 3);
        assert_eq!(aut_count(c5()), 10);
        assert_eq!(aut_count(Graph::complete(4)), 24);
    }

    #[test]
    fn induced_densities() {
        let k2 = Graph::complete(2);
        assert_eq!(induced_density(k2, Graph::complete(3)), BigRational::new(1.into(), 1.into()));
        assert_eq!(induced_density(k2, Graph::path(3)), BigRational::new(2.into(), 3.into()));
        let g = Graph::cycle(7);
        assert_eq!(induced_density(g, g), BigRational::new(1.into(), 1.into()));
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(c5()), 2);
        assert_eq!(clique_number(parts(&[2, 2, 1])), 3);
        assert_eq!(clique_number(Graph::complete(5)), 5);
        assert_eq!(clique_number(Graph::empty(4)), 1);
        assert_eq!(clique_number(Graph::empty(0)), 0);
    }

    #[test]
    fn multipartite_recognition() {
        let five = enumerate_graphs(5).unwrap();
        let multi = five.iter().filter(|g| is_complete_multipartite(g)).count();
        assert_eq!(multi, 7);
        assert!(is_complete_multipartite(parts(&[3, 1, 1])));
        assert!(!is_complete_multipartite(c5()));
    }

    #[test]
    fn edit_distances() {
        let c = c5();
        assert_eq!(edit_distance(c, c).unwrap(), 0);
        assert_eq!(edit_distance(Graph::complete(3), Graph::empty(3)).unwrap(), 3);
        assert_eq!(edit_distance(c, Graph::complete(5)).unwrap(), 5);
        assert!(edit_distance(c, Graph::complete(4)).is_err());
        assert!(edit_distance(Graph::empty(9), Graph::empty(9)).is_err());
    }

    #[test]
    fn total_probability_over_classes() {
        // Σ_H P(H,G) = 1 over all classes H of order h
        for n in 0..=7usize {
            for g in enumerate_graphs(n).unwrap().iter().step_by(7) {
                for h in 0..=n.min(5) {
                    let sum: BigRational = enumerate_graphs(h)
                        .unwrap()
                        .iter()
                        .map(|hc| induced_density(hc, g))
                        .sum();
                    assert_eq!(sum, BigRational::from_integer(1.into()), "n={n} h={h}");
                }
            }
        }
    }

    #[test]
    fn multipartite_is_canonical_input() {
        let a = complete_multipartite(&PartSizes::new(vec![2, 2, 1]).unwrap()).unwrap();
        let b = canonical_form(&parts(&[1, 2, 2])).unwrap();
        assert_eq!(a, b);
    }
}
