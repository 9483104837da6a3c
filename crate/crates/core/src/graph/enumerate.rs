//! Isomorphism classes by vertex augmentation.
//!
//! Every graph on `n` vertices is a one-vertex extension of some class on
//! `n - 1` vertices, so extending each parent class by every neighbourhood
//! and deduplicating on the canonical key gives each class exactly once.

use super::canon::{canonical_labeling, CanonGraph, CanonKey};
use super::Graph;
use crate::error::{Error, Result};
use crate::exec::Exec;
use std::sync::OnceLock;

pub const MAX_ENUM_ORDER: usize = 8;

static CACHE: [OnceLock<Vec<CanonGraph>>; MAX_ENUM_ORDER + 1] = [const { OnceLock::new() }; MAX_ENUM_ORDER + 1];

/// All isomorphism classes on `n` vertices sorted by canonical key. The
/// result is computed once per process.
pub fn enumerate_graphs(n: usize) -> Result<&'static [CanonGraph]> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::TooLarge {
            operation: "enumerate_graphs",
            order: n,
            max: MAX_ENUM_ORDER,
        });
    }
    Ok(enumerate_cached(n, Exec::default()))
}

fn enumerate_cached(n: usize, exec: Exec) -> &'static [CanonGraph] {
    CACHE[n].get_or_init(|| {
        if n == 0 {
            vec![CanonGraph::from_key(canonical_labeling(&Graph::empty(0), 0).0)]
        } else {
            augment_classes(enumerate_cached(n - 1, exec), exec)
        }
    })
}

/// Classes on `n + 1` vertices from the classes on `n` vertices.
pub fn augment_classes(parents: &[CanonGraph], exec: Exec) -> Vec<CanonGraph> {
    let Some(n) = parents.first().map(|p| p.order()) else {
        return Vec::new();
    };
    let per_parent: Vec<Vec<CanonKey>> = exec.map(parents, |p| {
        let mut keys: Vec<CanonKey> = (0..1u32 << n)
            .map(|mask| canonical_labeling(&p.graph().extend(mask), 0).0)
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys
    });
    let mut all: Vec<CanonKey> = per_parent.into_iter().flatten().collect();
    all.sort_unstable();
    all.dedup();
    all.into_iter().map(CanonGraph::from_key).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_class_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn sorted_and_self_consistent() {
        let g5 = enumerate_graphs(5).unwrap();
        assert!(g5.windows(2).all(|w| w[0].key() < w[1].key()));
        assert_eq!(g5[0].graph().edge_count(), 0);
        assert_eq!(g5[33].graph().edge_count(), 10);
    }

    #[test]
    fn sequential_matches_parallel() {
        let p = enumerate_graphs(5).unwrap();
        assert_eq!(augment_classes(p, Exec::Sequential), augment_classes(p, Exec::Parallel));
    }

    #[test]
    fn rejects_nine() {
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn three_vertices_by_brute_force() {
        let mut keys = std::collections::BTreeSet::new();
        for m in 0..8u32 {
            let mut g = Graph::empty(3);
            for (b, (u, v)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
                if m >> b & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            keys.insert(canonical_labeling(&g, 0).0);
        }
        let listed: Vec<_> = enumerate_graphs(3).unwrap().iter().map(|c| c.key()).collect();
        assert_eq!(keys.into_iter().collect::<Vec<_>>(), listed);
    }
}
