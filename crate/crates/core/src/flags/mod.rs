//! Typed flags and the finite flag-algebra calculus.
//!
//! A σ-flag on `ℓ` vertices is stored canonically: the labelled vertices
//! are `0..s` in label order and the [`CanonKey`] is taken with those `s`
//! vertices as distinguished singleton colours, so two flags are equal iff
//! some isomorphism fixes every label.

mod algebra;
pub mod checks;
mod density;

pub use algebra::{product_expand, square_unlabel, unlabel, unlabel_factor, Basis, FlagVector, GramTable};
pub use density::{flag_density, flag_profile, pair_density, pair_profile, LabeledGraph};

use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, enumerate_graphs, graph6, CanonKey, Graph, MAX_CANON_ORDER};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest flag order handled by [`enumerate_flags`].
pub const MAX_FLAG_ORDER: usize = 6;
/// Largest supported type size.
pub const MAX_TYPE_SIZE: usize = 3;

/// A type: a graph on `s` labelled vertices `0..s`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TypeSigma {
    key: CanonKey,
}

impl TypeSigma {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.order() > MAX_TYPE_SIZE {
            return Err(Error::TooLarge {
                operation: "type",
                order: g.order(),
                max: MAX_TYPE_SIZE,
            });
        }
        let s = g.order();
        Ok(TypeSigma {
            key: canonical_labeling(g, s).0,
        })
    }

    pub fn empty() -> Self {
        TypeSigma::new(&Graph::empty(0)).expect("order 0")
    }

    /// Every labelled type on `s` vertices (`2^(s choose 2)` of them).
    pub fn all(s: usize) -> Vec<TypeSigma> {
        assert!(s <= MAX_TYPE_SIZE);
        let pairs: Vec<(usize, usize)> = (0..s).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut out: Vec<TypeSigma> = (0..1u32 << pairs.len())
            .map(|m| {
                let mut g = Graph::empty(s);
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if m >> b & 1 == 1 {
                        g.add_edge(i, j);
                    }
                }
                TypeSigma::new(&g).expect("small")
            })
            .collect();
        out.sort();
        out
    }

    pub fn size(&self) -> usize {
        self.key.n as usize
    }

    pub fn key(&self) -> CanonKey {
        self.key
    }

    pub fn graph(&self) -> Graph {
        self.key.graph()
    }
}

/// A σ-flag in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypedFlag {
    key: CanonKey,
}

impl TypedFlag {
    /// The flag `(g, θ)`, where label `i` sits on vertex `theta[i]`.
    pub fn new(g: &Graph, theta: &[usize]) -> Result<Self> {
        let n = g.order();
        if n > MAX_CANON_ORDER {
            return Err(Error::TooLarge {
                operation: "flag canonicalization",
                order: n,
                max: MAX_CANON_ORDER,
            });
        }
        let mut seen = 0u32;
        for &v in theta {
            if v >= n || seen >> v & 1 == 1 {
                return Err(Error::InvalidFlag(format!("θ = {theta:?} is not injective into {n} vertices")));
            }
            seen |= 1 << v;
        }
        let order: Vec<usize> = theta.iter().copied().chain((0..n).filter(|v| seen >> v & 1 == 0)).collect();
        Ok(TypedFlag {
            key: canonical_labeling(&g.permuted(&order), theta.len()).0,
        })
    }

    pub(crate) fn from_key(key: CanonKey) -> Self {
        TypedFlag { key }
    }

    /// A plain graph viewed as a flag over the empty type.
    pub fn unlabeled(g: &Graph) -> Result<Self> {
        TypedFlag::new(g, &[])
    }

    pub fn key(&self) -> CanonKey {
        self.key
    }

    pub fn order(&self) -> usize {
        self.key.n as usize
    }

    pub fn type_size(&self) -> usize {
        self.key.s as usize
    }

    /// Canonical representative; labels on `0..s`.
    pub fn graph(&self) -> Graph {
        self.key.graph()
    }

    pub fn sigma(&self) -> TypeSigma {
        let s = self.type_size();
        let verts: Vec<usize> = (0..s).collect();
        TypeSigma::new(&self.graph().induced(&verts)).expect("s <= 3 by construction")
    }

    pub fn underlying(&self) -> CanonKey {
        self.key.unlabeled()
    }

    pub fn host(&self) -> LabeledGraph {
        LabeledGraph::new(self.graph(), (0..self.type_size()).collect()).expect("valid labels")
    }
}

impl fmt::Display for TypedFlag {
    /// `graph6|θ:0,1,2`, the graph6 of the canonical representative
    /// followed by the vertices carrying labels `0, 1, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.type_size()).map(|i| i.to_string()).collect();
        write!(f, "{}|θ:{}", graph6::encode(&self.graph()), labels.join(","))
    }
}

impl fmt::Debug for TypedFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypedFlag({self})")
    }
}

impl FromStr for TypedFlag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (g6, labels) = s
            .split_once("|θ:")
            .ok_or_else(|| Error::InvalidFlag(format!("missing '|θ:' in {s:?}")))?;
        let g = graph6::decode(g6)?;
        let theta = if labels.is_empty() {
            Vec::new()
        } else {
            labels
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::InvalidFlag(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        };
        if theta.len() > MAX_TYPE_SIZE {
            return Err(Error::InvalidFlag(format!("type size {} exceeds {MAX_TYPE_SIZE}", theta.len())));
        }
        TypedFlag::new(&g, &theta)
    }
}

type FlagCache = Mutex<HashMap<(TypeSigma, usize), Arc<Vec<TypedFlag>>>>;

/// All σ-flags on `ell` vertices, sorted by key. Cached per process.
pub fn enumerate_flags(sigma: TypeSigma, ell: usize) -> Result<Arc<Vec<TypedFlag>>> {
    let s = sigma.size();
    if ell > MAX_FLAG_ORDER || ell < s {
        return Err(Error::Precondition(format!(
            "flag order {ell} must lie in {s}..={MAX_FLAG_ORDER}"
        )));
    }
    static CACHE: OnceLock<FlagCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("poisoned").get(&(sigma, ell)) {
        return Ok(v.clone());
    }
    let flags = if s == 0 {
        enumerate_graphs(ell)?
            .iter()
            .map(|c| TypedFlag::from_key(c.key()))
            .collect()
    } else {
        let base = {
            let mut g = sigma.graph();
            for _ in s..ell {
                g = g.extend(0);
            }
            g
        };
        let free: Vec<(usize, usize)> = (s..ell).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut keys: Vec<TypedFlag> = (0..1u64 << free.len())
            .map(|m| {
                let mut g = base;
                for (b, &(i, j)) in free.iter().enumerate() {
                    if m >> b & 1 == 1 {
                        g.add_edge(i, j);
                    }
                }
                TypedFlag::from_key(canonical_labeling(&g, s).0)
            })
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys
    };
    let flags = Arc::new(flags);
    cache.lock().expect("poisoned").insert((sigma, ell), flags.clone());
    Ok(flags)
}
