//! Flag vectors, products and the unlabelling operator.

use super::density::pair_profile;
use super::{enumerate_flags, TypeSigma, TypedFlag, MAX_FLAG_ORDER};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::CanonKey;
use crate::symbolic::{Poly, RationalFunction, Q};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// What a [`FlagVector`] is expanded over: σ-flags of one order, or plain
/// graphs of one order when σ is empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Basis {
    pub sigma: TypeSigma,
    pub order: usize,
}

impl Basis {
    pub fn unlabeled(order: usize) -> Self {
        Basis {
            sigma: TypeSigma::empty(),
            order,
        }
    }

    pub fn is_unlabeled(&self) -> bool {
        self.sigma.size() == 0
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unlabeled() {
            write!(f, "unlabeled order {}", self.order)
        } else {
            write!(f, "σ-flags (σ = {:?}) of order {}", self.sigma.key(), self.order)
        }
    }
}

/// Finite linear combination over one basis; zero coefficients are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagVector {
    basis: Basis,
    coeffs: BTreeMap<CanonKey, RationalFunction>,
}

impl FlagVector {
    pub fn zero(basis: Basis) -> Self {
        FlagVector {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, key: CanonKey, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn get(&self, key: &CanonKey) -> RationalFunction {
        self.coeffs.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonKey, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = FlagVector::zero(self.basis);
        for (k, v) in &self.coeffs {
            out.add_term(*k, &(v * c));
        }
        out
    }

    pub fn checked_add(&self, other: &FlagVector) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!("{} vs {}", self.basis, other.basis)));
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(*k, v);
        }
        Ok(out)
    }
}

/// `q_σ(F)`: the probability that a uniformly random injective labelling of
/// the underlying graph of `F` yields a flag isomorphic to `F`.
pub fn unlabel_factor(f: &TypedFlag) -> Q {
    let g = f.graph();
    let (n, s) = (f.order(), f.type_size());
    let mut hits = 0u64;
    let mut total = 0u64;
    let mut theta = Vec::with_capacity(s);
    injections(n, s, &mut theta, &mut |t| {
        total += 1;
        if TypedFlag::new(&g, t).expect("injective") == *f {
            hits += 1;
        }
    });
    Q::new(BigInt::from(hits), BigInt::from(total))
}

fn injections(n: usize, s: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == s {
        f(cur);
        return;
    }
    for v in 0..n {
        if !cur.contains(&v) {
            cur.push(v);
            injections(n, s, cur, f);
            cur.pop();
        }
    }
}

/// `⟦v⟧_σ`, as a combination of unlabelled graphs.
pub fn unlabel(v: &FlagVector) -> FlagVector {
    let mut out = FlagVector::zero(Basis::unlabeled(v.basis.order));
    for (key, c) in v.iter() {
        let f = TypedFlag::from_key(*key);
        out.add_term(f.underlying(), &c.scale(&unlabel_factor(&f)));
    }
    out
}

fn product_basis(f1: &TypedFlag, f2: &TypedFlag) -> Result<Basis> {
    let sigma = f1.sigma();
    if sigma != f2.sigma() {
        return Err(Error::BasisMismatch(format!("{f1} and {f2} have different types")));
    }
    let s = sigma.size();
    let ell = f1.order() + f2.order() - s;
    if ell > MAX_FLAG_ORDER {
        return Err(Error::TooLarge {
            operation: "flag product",
            order: ell,
            max: MAX_FLAG_ORDER,
        });
    }
    Ok(Basis { sigma, order: ell })
}

/// `F1 · F2 = Σ_F P(F1, F2; F) F` over σ-flags `F` on `|F1| + |F2| - s`
/// vertices.
pub fn product_expand(f1: &TypedFlag, f2: &TypedFlag) -> Result<FlagVector> {
    let basis = product_basis(f1, f2)?;
    let s = basis.sigma.size();
    let (a, b) = (f1.order() - s, f2.order() - s);
    let mut out = FlagVector::zero(basis);
    for f in enumerate_flags(basis.sigma, basis.order)?.iter() {
        let (counts, total) = pair_profile(&f.host(), a, b, Exec::Sequential);
        let hit = counts.get(&(f1.key(), f2.key())).copied().unwrap_or(0);
        if hit > 0 {
            out.add_term(f.key(), &RationalFunction::constant(Q::new(hit.into(), total.into())));
        }
    }
    Ok(out)
}

/// `⟦(Σ a_i F_i)^2⟧_σ` for flags sharing one type and one order.
pub fn square_unlabel(terms: &[(RationalFunction, TypedFlag)]) -> Result<FlagVector> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::Precondition("empty combination has no type".into()));
    };
    for (_, f) in terms {
        if f.sigma() != first.sigma() || f.order() != first.order() {
            return Err(Error::BasisMismatch(format!("{f} vs {first}")));
        }
    }
    let basis = product_basis(first, first)?;
    let mut out = FlagVector::zero(Basis::unlabeled(basis.order));
    for (ai, fi) in terms {
        for (aj, fj) in terms {
            let coeff = ai * aj;
            if coeff.is_zero() {
                continue;
            }
            let prod = unlabel(&product_expand(fi, fj)?).scale(&coeff);
            out = out.checked_add(&prod)?;
        }
    }
    Ok(out)
}

/// Every unlabelled product `⟦F_i · F_j⟧_σ` of the σ-flags of one order,
/// so that squares of many combinations can be formed cheaply.
#[derive(Clone, Debug)]
pub struct GramTable {
    sigma: TypeSigma,
    flags: Vec<TypedFlag>,
    /// `entries[i][j]` maps unlabelled classes to rational coefficients.
    entries: Vec<Vec<BTreeMap<CanonKey, Q>>>,
    order: usize,
}

impl GramTable {
    pub fn new(sigma: TypeSigma, flag_order: usize, exec: Exec) -> Result<Self> {
        let flags: Vec<TypedFlag> = enumerate_flags(sigma, flag_order)?.to_vec();
        let order = 2 * flag_order - sigma.size();
        let pairs: Vec<(usize, usize)> = (0..flags.len())
            .flat_map(|i| (0..flags.len()).map(move |j| (i, j)))
            .collect();
        let products: Vec<Result<BTreeMap<CanonKey, Q>>> = exec.map(&pairs, |&(i, j)| {
            let v = unlabel(&product_expand(&flags[i], &flags[j])?);
            Ok(v.iter()
                .map(|(k, c)| (*k, c.as_constant().expect("densities are constants")))
                .collect())
        });
        let mut entries = vec![vec![BTreeMap::new(); flags.len()]; flags.len()];
        for (&(i, j), p) in pairs.iter().zip(products) {
            entries[i][j] = p?;
        }
        Ok(GramTable {
            sigma,
            flags,
            entries,
            order,
        })
    }

    pub fn sigma(&self) -> TypeSigma {
        self.sigma
    }

    pub fn flags(&self) -> &[TypedFlag] {
        &self.flags
    }

    pub fn entry(&self, i: usize, j: usize) -> &BTreeMap<CanonKey, Q> {
        &self.entries[i][j]
    }

    /// `⟦(Σ a_i F_{idx_i})^2⟧_σ`.
    pub fn square(&self, terms: &[(RationalFunction, usize)]) -> FlagVector {
        // accumulate numerators over the common denominator Π den(a_i)^2 so
        // that no gcd is taken per term
        let den = terms
            .iter()
            .fold(Poly::one(), |acc, (a, _)| &acc * a.den());
        let nums: Vec<Poly> = terms
            .iter()
            .map(|(a, _)| a.numerator_over(&den).expect("den is a common multiple"))
            .collect();
        let mut acc: BTreeMap<CanonKey, Poly> = BTreeMap::new();
        for (ai, (_, i)) in nums.iter().zip(terms) {
            for (aj, (_, j)) in nums.iter().zip(terms) {
                let c = ai * aj;
                for (key, v) in &self.entries[*i][*j] {
                    let e = acc.entry(*key).or_default();
                    *e = &*e + &c.scale(v);
                }
            }
        }
        let den2 = &den * &den;
        let mut out = FlagVector::zero(Basis::unlabeled(self.order));
        for (k, v) in acc {
            out.add_term(k, &RationalFunction::new(v, den2.clone()).expect("nonzero den"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, Graph};
    use crate::symbolic::{q, qi};
    use num_traits::Zero;

    fn key(g: &Graph) -> CanonKey {
        canonical_form(g).unwrap().key()
    }

    #[test]
    fn unlabel_factors() {
        let edge = TypedFlag::new(&Graph::complete(2), &[0]).unwrap();
        assert_eq!(unlabel_factor(&edge), qi(1));
        let centre = TypedFlag::new(&Graph::path(3), &[1]).unwrap();
        let end = TypedFlag::new(&Graph::path(3), &[0]).unwrap();
        assert_eq!(unlabel_factor(&centre), q(1, 3));
        assert_eq!(unlabel_factor(&end), q(2, 3));
    }

    #[test]
    fn unlabel_mass_partitions_injections() {
        // summed over every labelled type of size s, the factors of the
        // flags on H partition the injections [s] -> V(H)
        for s in 0..=3usize {
            let mut mass: BTreeMap<CanonKey, Q> = BTreeMap::new();
            for sigma in TypeSigma::all(s) {
                for f in enumerate_flags(sigma, 5).unwrap().iter() {
                    *mass.entry(f.underlying()).or_insert_with(Q::zero) += unlabel_factor(f);
                }
            }
            assert_eq!(mass.len(), 34);
            assert!(mass.values().all(|m| *m == qi(1)), "s={s}");
        }
    }

    #[test]
    fn edge_square_on_four_vertices() {
        let k2 = TypedFlag::unlabeled(&Graph::complete(2)).unwrap();
        let v = product_expand(&k2, &k2).unwrap();
        let matching = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(v.get(&key(&matching)), RationalFunction::constant(q(1, 3)));
        assert_eq!(v.get(&key(&Graph::complete(4))), RationalFunction::one());
        assert_eq!(v.get(&key(&Graph::path(4))), RationalFunction::constant(q(1, 3)));
    }

    #[test]
    fn sigma_flag_is_a_unit() {
        let sigma = TypedFlag::new(&Graph::path(2), &[0, 1]).unwrap();
        let f = TypedFlag::new(&Graph::cycle(4), &[0, 1]).unwrap();
        let v = product_expand(&sigma, &f).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v.get(&f.key()), RationalFunction::one());
    }

    #[test]
    fn triangle_pendant_square() {
        // labelled triangle plus a vertex hanging off label 0
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let f = TypedFlag::new(&g, &[0, 1, 2]).unwrap();
        let v = product_expand(&f, &f).unwrap();
        let two = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap();
        let two = TypedFlag::new(&two, &[0, 1, 2]).unwrap();
        assert!(v.get(&two.key()).as_constant().unwrap() > qi(0));
        assert_eq!(v.get(&two.key()), RationalFunction::one());
    }

    #[test]
    fn squares() {
        let sigma = TypeSigma::new(&Graph::complete(3)).unwrap();
        let flags = enumerate_flags(sigma, 4).unwrap();
        let zero = square_unlabel(&[(RationalFunction::zero(), flags[0])]).unwrap();
        assert!(zero.is_empty());
        let single = square_unlabel(&[(RationalFunction::one(), flags[3])]).unwrap();
        assert!(single.iter().all(|(_, c)| c.as_constant().unwrap() > qi(0)));
        let table = GramTable::new(sigma, 4, Exec::default()).unwrap();
        let k = RationalFunction::k();
        let terms = [(&k - &RationalFunction::one(), 1), (-RationalFunction::one(), 6)];
        let direct = square_unlabel(&[(terms[0].0.clone(), flags[1]), (terms[1].0.clone(), flags[6])]).unwrap();
        assert_eq!(table.square(&terms), direct);
        let mixed = TypedFlag::new(&Graph::path(4), &[0, 1, 2]).unwrap();
        assert!(square_unlabel(&[(k.clone(), flags[0]), (k, mixed)]).is_err());
    }
}
