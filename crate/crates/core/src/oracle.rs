//! Exhaustive ground truth on small orders.

use crate::counts::{multipartite_c5_count, opt_value};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{
    canonical_labeling, clique_number, count_c5, graph6, turan_graph, CanonGraph, CanonKey, Graph, PartSizes,
    MAX_ENUM_ORDER,
};
use crate::symbolic::{fmt_q, qi, Q};
use num_bigint::BigInt;
use serde::Serialize;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::TooLarge {
            operation: "clique-free enumeration",
            order: n,
            max: MAX_ENUM_ORDER,
        });
    }
    Ok(())
}

/// Every class on `n` vertices with no `K_r`, each once, sorted by key.
///
/// Grown one vertex at a time from the `K_r`-free classes one order down,
/// adding only neighbourhoods without a `K_{r-1}`.
pub fn enumerate_clique_free(n: usize, r: usize, exec: Exec) -> Result<Vec<CanonGraph>> {
    check_order(n)?;
    let mut level = vec![CanonGraph::from_key(canonical_labeling(&Graph::empty(0), 0).0)];
    if r == 0 {
        return Ok(Vec::new());
    }
    for m in 0..n {
        let per_parent: Vec<Vec<CanonKey>> = exec.map(&level, |p| {
            let g = p.graph();
            let mut keys: Vec<CanonKey> = (0..1u32 << m)
                .filter(|&mask| clique_number(g.induced_mask(mask)) + 1 < r)
                .map(|mask| canonical_labeling(&g.extend(mask), 0).0)
                .collect();
            keys.sort_unstable();
            keys.dedup();
            keys
        });
        let mut all: Vec<CanonKey> = per_parent.into_iter().flatten().collect();
        all.sort_unstable();
        all.dedup();
        level = all.into_iter().map(CanonGraph::from_key).collect();
    }
    Ok(level)
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub r: usize,
    pub max_count: u64,
    /// graph6 strings of the maximizers.
    pub argmax: Vec<String>,
    #[serde(skip)]
    pub argmax_graphs: Vec<CanonGraph>,
    /// `T_{r-1}(n)`'s count.
    pub turan_count: u64,
    pub is_turan_among_argmax: bool,
    pub turan_unique: bool,
    pub classes_scanned: usize,
}

/// Maximum number of pentagons in a `K_r`-free graph on `n` vertices.
pub fn max_c5(n: usize, r: usize, exec: Exec) -> Result<ExtremalRecord> {
    if r < 2 {
        return Err(Error::Precondition(format!("forbidden clique size must be at least 2, got {r}")));
    }
    let classes = enumerate_clique_free(n, r, exec)?;
    let counts = exec.map(&classes, |g| count_c5(g));
    let max_count = counts.iter().copied().max().unwrap_or(0);
    let argmax_graphs: Vec<CanonGraph> = classes
        .iter()
        .zip(&counts)
        .filter(|&(_, &c)| c == max_count)
        .map(|(g, _)| g.clone())
        .collect();
    let (turan_count, turan_key) = if n == 0 {
        (0, None)
    } else {
        let t = turan_graph((r - 1) as u64, n as u64)?;
        (count_c5(&t), Some(t.key()))
    };
    let among = argmax_graphs.iter().any(|g| Some(g.key()) == turan_key);
    Ok(ExtremalRecord {
        n,
        r,
        max_count,
        argmax: argmax_graphs.iter().map(|g| graph6::encode(g.graph())).collect(),
        is_turan_among_argmax: among,
        turan_unique: among && argmax_graphs.len() == 1,
        argmax_graphs,
        turan_count,
        classes_scanned: classes.len(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityVerdict {
    pub k: u64,
    pub n: usize,
    pub holds: bool,
    pub classes: usize,
    /// Largest `ν(C5, G) 5! / n^5`.
    pub max_density: String,
    pub opt: String,
    /// A violating class in graph6, if any.
    pub counterexample: Option<String>,
    /// The Turán graph's count equals the multipartite formula.
    pub turan_formula_agrees: bool,
}

/// `ν(C5, G) 5!/n^5 <= OPT_k` over every `K_{k+1}`-free `G` on `n` vertices.
pub fn verify_density_bound(k: u64, n: usize, exec: Exec) -> Result<DensityVerdict> {
    if k < 3 || n == 0 {
        return Err(Error::Precondition(format!("needs k >= 3 and n >= 1, got k = {k}, n = {n}")));
    }
    let classes = enumerate_clique_free(n, k as usize + 1, exec)?;
    let opt = opt_value(k);
    let scale = qi(120) / Q::from(BigInt::from(n).pow(5));
    let counts = exec.map(&classes, |g| count_c5(g));
    let (best, at) = counts
        .iter()
        .enumerate()
        .max_by_key(|&(_, c)| *c)
        .map(|(i, &c)| (c, i))
        .expect("the empty graph is always present");
    let max_density = qi(best as i64) * &scale;
    let holds = max_density <= opt;
    let turan = PartSizes::turan(k, n as u64)?;
    Ok(DensityVerdict {
        k,
        n,
        holds,
        classes: classes.len(),
        max_density: fmt_q(&max_density),
        opt: fmt_q(&opt),
        counterexample: (!holds).then(|| graph6::encode(classes[at].graph())),
        turan_formula_agrees: BigInt::from(count_c5(turan.graph()?)) == multipartite_c5_count(&turan),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    #[test]
    fn clique_free_counts() {
        assert_eq!(enumerate_clique_free(5, 3, Exec::default()).unwrap().len(), 14);
        assert_eq!(enumerate_clique_free(5, 6, Exec::default()).unwrap().len(), 34);
        assert_eq!(enumerate_clique_free(5, 5, Exec::default()).unwrap().len(), 33);
        assert_eq!(enumerate_clique_free(3, 3, Exec::default()).unwrap().len(), 3);
        assert!(enumerate_clique_free(9, 3, Exec::default()).is_err());
    }

    #[test]
    fn pruned_generation_matches_filter() {
        for n in 0..=7 {
            for r in 2..=5 {
                let filtered: Vec<CanonGraph> =
                    enumerate_graphs(n).unwrap().iter().filter(|g| clique_number(*g) < r).cloned().collect();
                assert_eq!(enumerate_clique_free(n, r, Exec::Sequential).unwrap(), filtered, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn small_maxima() {
        let r = max_c5(5, 4, Exec::default()).unwrap();
        assert_eq!(r.max_count, 4);
        let r = max_c5(6, 4, Exec::default()).unwrap();
        assert!(r.max_count >= 24);
        assert!(r.is_turan_among_argmax);
        assert!(r.argmax.contains(&graph6::encode(turan_graph(3, 6).unwrap().graph())));
        let r = max_c5(5, 6, Exec::default()).unwrap();
        assert_eq!((r.max_count, r.argmax.len()), (12, 1));
        assert_eq!(r.argmax_graphs[0].graph().edge_count(), 10);
    }

    #[test]
    fn monotone_in_n_and_r() {
        let mut table = vec![vec![0u64; 7]; 8];
        for n in 1..=7 {
            for r in 2..=6 {
                table[n][r] = max_c5(n, r, Exec::default()).unwrap().max_count;
                assert!(table[n][r] >= table[n - 1][r], "n={n} r={r}");
                assert!(table[n][r] >= table[n][r - 1], "n={n} r={r}");
            }
            for r in 4..=6 {
                let t = multipartite_c5_count(&PartSizes::turan(r as u64 - 1, n as u64).unwrap());
                assert!(BigInt::from(table[n][r]) >= t);
            }
        }
    }

    #[test]
    fn density_shadow() {
        for k in 3..=5 {
            for n in 5..=7 {
                let v = verify_density_bound(k, n, Exec::default()).unwrap();
                assert!(v.holds && v.turan_formula_agrees, "{v:?}");
            }
        }
        // T3(6): 24 * 120 / 6^5 = 10/27
        let v = verify_density_bound(3, 6, Exec::default()).unwrap();
        assert_eq!(v.max_density, "10/27");
    }
}
