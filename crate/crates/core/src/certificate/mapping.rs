//! Recovering the figure ordering of the 34 five-vertex graphs.
//!
//! Each index carries data that a graph class either has or lacks: its
//! pentagon count, membership in the tight set and in the `K4` set, and
//! its entry in every square `P_j`. For each `P_j` we search all types on
//! three labelled vertices and all flag tuples on four vertices for squares
//! of the stated shape whose value multiset equals the table's; any choice
//! of one such square per `P_j` fixes a signature for every class, and the
//! admissible bijections are exactly the signature-preserving ones.

use super::tables::{reference_tables, ReferenceTables, K3_REMOVED, K5_INDEX, NUM_CLASSES, TIGHT_INDICES};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::flags::{GramTable, TypeSigma, TypedFlag};
use crate::graph::{clique_number, count_c5, enumerate_graphs, is_complete_multipartite, CanonKey};
use crate::symbolic::{parse_ratfun, RationalFunction, Q};
use num_traits::{One, Signed};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

/// Structural shape of `P_j`: `multiplier * ⟦(Σ c_i F_i)^2⟧_σ` with a
/// three-vertex type and four-vertex flags.
#[derive(Clone, Debug)]
pub struct SquareShape {
    pub name: &'static str,
    /// `None`: recover a positive multiplier from the data.
    pub multiplier: Option<i64>,
    pub coeffs: &'static [&'static str],
    /// Compare on `K4`-free classes only (the square is used when `k = 3`).
    pub k4_free_only: bool,
}

pub const SHAPES: [SquareShape; 6] = [
    SquareShape { name: "P1", multiplier: Some(10), coeffs: &["k - 1", "-1"], k4_free_only: false },
    SquareShape { name: "P2", multiplier: Some(30), coeffs: &["k - 2", "-1"], k4_free_only: false },
    SquareShape { name: "P3", multiplier: Some(30), coeffs: &["k - 2", "-1"], k4_free_only: false },
    SquareShape { name: "P4", multiplier: Some(30), coeffs: &["1", "-1"], k4_free_only: false },
    SquareShape { name: "P5", multiplier: Some(30), coeffs: &["k - 3", "k - 3", "-2"], k4_free_only: false },
    SquareShape { name: "P6", multiplier: None, coeffs: &["1", "1", "-1"], k4_free_only: true },
];

/// Facts about one of the 34 classes.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub key: CanonKey,
    pub c5: u64,
    pub multipartite: bool,
    pub has_k4: bool,
    pub is_k5: bool,
}

pub fn class_infos() -> &'static [ClassInfo] {
    static INFO: OnceLock<Vec<ClassInfo>> = OnceLock::new();
    INFO.get_or_init(|| {
        enumerate_graphs(5)
            .expect("order 5")
            .iter()
            .map(|c| ClassInfo {
                key: c.key(),
                c5: count_c5(c),
                multipartite: is_complete_multipartite(c),
                has_k4: clique_number(c) >= 4,
                is_k5: c.graph().edge_count() == 10,
            })
            .collect()
    })
}

/// A square reproducing (or, for [`MappingReconstruction::nearest`],
/// approximating) one table vector.
#[derive(Clone, Debug)]
pub struct SquareWitness {
    pub square: usize,
    pub sigma: TypeSigma,
    pub flags: Vec<TypedFlag>,
    pub multiplier: Q,
    /// The scaled square over the 34 classes.
    pub vector: BTreeMap<CanonKey, RationalFunction>,
}

impl SquareWitness {
    pub fn value(&self, class: &CanonKey) -> RationalFunction {
        self.vector.get(class).cloned().unwrap_or_default()
    }

    pub fn describe(&self) -> String {
        let flags: Vec<String> = self.flags.iter().map(|f| f.to_string()).collect();
        format!(
            "P{} = {} * [[({})^2]] over σ = {}",
            self.square,
            crate::symbolic::fmt_q(&self.multiplier),
            SHAPES[self.square - 1]
                .coeffs
                .iter()
                .zip(&flags)
                .map(|(c, f)| format!("({c})*{f}"))
                .collect::<Vec<_>>()
                .join(" + "),
            TypedFlag::new(&self.sigma.graph(), &(0..self.sigma.size()).collect::<Vec<_>>())
                .expect("type as flag")
        )
    }
}

/// One admissible bijection (the representative of its class of
/// signature-equivalent bijections).
#[derive(Clone, Debug)]
pub struct IndexMapping {
    /// `classes[i]` is the graph denoted by index `i`.
    pub classes: [CanonKey; NUM_CLASSES],
    /// The witnesses used, by square number; `None` for squares left out.
    pub witnesses: [Option<SquareWitness>; 6],
    /// Number of bijections equivalent to this one.
    pub bijections: u128,
}

impl IndexMapping {
    pub fn info(&self, i: usize) -> &'static ClassInfo {
        let key = self.classes[i];
        class_infos().iter().find(|c| c.key == key).expect("known class")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareSearch {
    pub square: String,
    pub candidates: usize,
}

#[derive(Clone, Debug)]
pub struct MappingReconstruction {
    /// Solutions under every constraint, one per choice of witnesses.
    pub strict: Vec<IndexMapping>,
    /// Solutions using only the squares that have witnesses.
    pub relaxed: Vec<IndexMapping>,
    /// Squares with no witness of their stated shape.
    pub unmatched: Vec<usize>,
    /// For each unmatched square, the closest square of the right shape
    /// and the table entries it disagrees on (by index, after mapping).
    pub nearest: BTreeMap<usize, (SquareWitness, Vec<usize>)>,
    pub searches: Vec<SquareSearch>,
}

impl MappingReconstruction {
    pub fn strict_solutions(&self) -> u128 {
        self.strict.iter().map(|m| m.bijections).sum()
    }

    pub fn relaxed_solutions(&self) -> u128 {
        self.relaxed.iter().map(|m| m.bijections).sum()
    }

    /// The mapping used downstream: the first strict solution, else the
    /// first relaxed one.
    pub fn primary(&self) -> &IndexMapping {
        self.strict.first().or(self.relaxed.first()).expect("constructed with a solution")
    }
}

fn restricted(shape: &SquareShape, v: &BTreeMap<CanonKey, RationalFunction>) -> BTreeMap<CanonKey, RationalFunction> {
    let infos = class_infos();
    v.iter()
        .filter(|(k, _)| !shape.k4_free_only || !infos.iter().any(|c| c.key == **k && c.has_k4))
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (*k, c.clone()))
        .collect()
}

fn multiset<'a>(vals: impl Iterator<Item = &'a RationalFunction>) -> Vec<String> {
    let mut v: Vec<String> = vals.filter(|c| !c.is_zero()).map(|c| c.to_string()).collect();
    v.sort();
    v
}

fn common(a: &[String], b: &[String]) -> usize {
    let mut counts: HashMap<&String, i64> = HashMap::new();
    for x in a {
        *counts.entry(x).or_insert(0) += 1;
    }
    let mut n = 0;
    for x in b {
        if let Some(c) = counts.get_mut(x) {
            if *c > 0 {
                *c -= 1;
                n += 1;
            }
        }
    }
    n
}

fn tuples(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                go(n, r, cur, out);
                cur.pop();
            }
        }
    }
    go(n, r, &mut cur, &mut out);
    out
}

struct Candidates {
    exact: Vec<SquareWitness>,
    /// Distinct squares of the right shape whose value multiset is closest
    /// to the table's.
    nearest: Vec<SquareWitness>,
}

fn search_square(j: usize, tables: &ReferenceTables, grams: &[GramTable], exec: Exec) -> Candidates {
    let shape = &SHAPES[j - 1];
    let coeffs: Vec<RationalFunction> = shape.coeffs.iter().map(|c| parse_ratfun(c).expect("shape parses")).collect();
    let target_vals: Vec<RationalFunction> = tables.squares[j - 1].values().map(|p| p.clone().into()).collect();
    let target = multiset(target_vals.iter());
    let jobs: Vec<(usize, Vec<usize>)> = (0..grams.len())
        .flat_map(|g| tuples(grams[g].flags().len(), coeffs.len()).into_iter().map(move |t| (g, t)))
        .collect();
    let evaluated: Vec<(Option<SquareWitness>, SquareWitness, i64)> = exec.map(&jobs, |(g, t)| {
        let gram = &grams[*g];
        let terms: Vec<(RationalFunction, usize)> = coeffs.iter().cloned().zip(t.iter().copied()).collect();
        let raw: BTreeMap<CanonKey, RationalFunction> =
            gram.square(&terms).iter().map(|(k, v)| (*k, v.clone())).collect();
        let make = |m: Q| SquareWitness {
            square: j,
            sigma: gram.sigma(),
            flags: t.iter().map(|&i| gram.flags()[i]).collect(),
            multiplier: m.clone(),
            vector: raw.iter().map(|(k, v)| (*k, v.scale(&m))).collect(),
        };
        let multipliers: Vec<Q> = match shape.multiplier {
            Some(m) => vec![Q::from_integer(m.into())],
            None => {
                // t0 / v for every entry v; only positive constants qualify
                let r = restricted(shape, &raw);
                let t0 = target_vals.first().and_then(|t| t.as_constant());
                let mut ms: Vec<Q> = r
                    .values()
                    .filter_map(|v| Some(t0.clone()? / v.as_constant()?))
                    .filter(|m| m.is_positive())
                    .collect();
                ms.sort();
                ms.dedup();
                if ms.is_empty() {
                    ms.push(Q::one());
                }
                ms
            }
        };
        let mut best: Option<(SquareWitness, i64)> = None;
        let mut exact = None;
        for m in multipliers {
            let w = make(m);
            let got = multiset(restricted(shape, &w.vector).values());
            if got == target {
                exact.get_or_insert(w.clone());
            }
            // minus the size of the multiset symmetric difference
            let score = 2 * common(&got, &target) as i64 - (got.len() + target.len()) as i64;
            if best.as_ref().is_none_or(|(_, s)| score > *s) {
                best = Some((w, score));
            }
        }
        let (w, s) = best.expect("at least one multiplier");
        (exact, w, s)
    });
    let mut exact: Vec<SquareWitness> = Vec::new();
    let best = evaluated.iter().map(|e| e.2).max();
    let mut nearest: Vec<SquareWitness> = Vec::new();
    for (e, w, s) in evaluated {
        if let Some(e) = e {
            if !exact.iter().any(|x| restricted(shape, &x.vector) == restricted(shape, &e.vector)) {
                exact.push(e);
            }
        }
        if Some(s) == best && !nearest.iter().any(|x| x.vector == w.vector) {
            nearest.push(w);
        }
    }
    Candidates { exact, nearest }
}

fn index_signature(tables: &ReferenceTables, i: usize, used: &[usize]) -> Vec<String> {
    let mut sig = vec![
        tables.five_cycles[i].to_string(),
        TIGHT_INDICES.contains(&i).to_string(),
        K3_REMOVED.contains(&i).to_string(),
        (i == K5_INDEX).to_string(),
    ];
    for &j in used {
        sig.push(tables.square_entry(j, i).to_string());
    }
    sig
}

fn class_signature(c: &ClassInfo, used: &[usize], chosen: &[&SquareWitness]) -> Vec<String> {
    let mut sig = vec![
        c.c5.to_string(),
        c.multipartite.to_string(),
        c.has_k4.to_string(),
        c.is_k5.to_string(),
    ];
    for (&j, w) in used.iter().zip(chosen) {
        let v = if SHAPES[j - 1].k4_free_only && c.has_k4 {
            RationalFunction::zero()
        } else {
            w.value(&c.key)
        };
        sig.push(v.to_string());
    }
    sig
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All signature-preserving bijections for one choice of witnesses, as a
/// representative plus a count.
fn solve(tables: &ReferenceTables, used: &[usize], chosen: &[&SquareWitness]) -> Option<IndexMapping> {
    let infos = class_infos();
    let mut by_sig: BTreeMap<Vec<String>, (Vec<usize>, Vec<CanonKey>)> = BTreeMap::new();
    for i in 0..NUM_CLASSES {
        by_sig.entry(index_signature(tables, i, used)).or_default().0.push(i);
    }
    for c in infos {
        by_sig.entry(class_signature(c, used, chosen)).or_default().1.push(c.key);
    }
    let mut classes = [infos[0].key; NUM_CLASSES];
    let mut bijections: u128 = 1;
    for (idx, keys) in by_sig.values() {
        if idx.len() != keys.len() {
            return None;
        }
        bijections *= factorial(idx.len());
        for (&i, &k) in idx.iter().zip(keys) {
            classes[i] = k;
        }
    }
    let mut witnesses: [Option<SquareWitness>; 6] = Default::default();
    for (&j, w) in used.iter().zip(chosen) {
        witnesses[j - 1] = Some((*w).clone());
    }
    Some(IndexMapping {
        classes,
        witnesses,
        bijections,
    })
}

fn solve_all(tables: &ReferenceTables, used: &[usize], cands: &BTreeMap<usize, Vec<SquareWitness>>) -> Vec<IndexMapping> {
    let lists: Vec<&Vec<SquareWitness>> = used.iter().map(|j| &cands[j]).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; lists.len()];
    if lists.iter().any(|l| l.is_empty()) {
        return out;
    }
    loop {
        let chosen: Vec<&SquareWitness> = lists.iter().zip(&choice).map(|(l, &c)| &l[c]).collect();
        if let Some(m) = solve(tables, used, &chosen) {
            out.push(m);
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < lists[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Runs the search. Errors only if no bijection satisfies even the
/// constraints that do have witnesses.
pub fn reconstruct_mapping(exec: Exec) -> Result<MappingReconstruction> {
    let tables = reference_tables();
    let grams: Vec<GramTable> = TypeSigma::all(3)
        .into_iter()
        .map(|s| GramTable::new(s, 4, exec))
        .collect::<Result<_>>()?;
    let mut cands: BTreeMap<usize, Vec<SquareWitness>> = BTreeMap::new();
    let mut nearest_raw: BTreeMap<usize, Vec<SquareWitness>> = BTreeMap::new();
    let mut searches = Vec::new();
    for j in 1..=6 {
        let c = search_square(j, tables, &grams, exec);
        searches.push(SquareSearch {
            square: SHAPES[j - 1].name.to_string(),
            candidates: c.exact.len(),
        });
        if c.exact.is_empty() && !c.nearest.is_empty() {
            nearest_raw.insert(j, c.nearest);
        }
        cands.insert(j, c.exact);
    }
    let all: Vec<usize> = (1..=6).collect();
    let strict = solve_all(tables, &all, &cands);
    let unmatched: Vec<usize> = all.iter().copied().filter(|j| cands[j].is_empty()).collect();
    let usable: Vec<usize> = all.iter().copied().filter(|j| !cands[j].is_empty()).collect();
    let relaxed = solve_all(tables, &usable, &cands);
    let Some(first) = relaxed.first() else {
        return Err(Error::Precondition(format!(
            "no bijection satisfies the pentagon counts, tight set, K4 set and squares {usable:?}"
        )));
    };
    let nearest = nearest_raw
        .into_iter()
        .map(|(j, ws)| {
            // the candidate disagreeing with the table on the fewest indices
            let best = ws
                .into_iter()
                .map(|w| {
                    let bad: Vec<usize> = (0..NUM_CLASSES)
                        .filter(|&i| w.value(&first.classes[i]) != tables.square_entry(j, i).into())
                        .collect();
                    (w, bad)
                })
                .min_by_key(|(_, bad)| bad.len())
                .expect("nonempty");
            (j, best)
        })
        .collect();
    Ok(MappingReconstruction {
        strict,
        relaxed,
        unmatched,
        nearest,
        searches,
    })
}

/// Cached [`reconstruct_mapping`] with the default executor.
pub fn mapping() -> Result<&'static MappingReconstruction> {
    static MAP: OnceLock<std::result::Result<MappingReconstruction, Error>> = OnceLock::new();
    MAP.get_or_init(|| reconstruct_mapping(Exec::default())).as_ref().map_err(Clone::clone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, Graph, PartSizes};

    fn key(g: &Graph) -> CanonKey {
        canonical_form(g).unwrap().key()
    }

    #[test]
    fn reconstruction() {
        let r = mapping().unwrap();
        for s in &r.searches {
            eprintln!("{} {}", s.square, s.candidates);
        }
        eprintln!("strict {} relaxed {} ({} reps)", r.strict_solutions(), r.relaxed_solutions(), r.relaxed.len());
        let m = r.primary();
        assert_eq!(m.classes[33], key(&Graph::complete(5)));
        assert_eq!(m.classes[31], key(&PartSizes::new(vec![2, 2, 1]).unwrap().graph().unwrap()));
        let mut k5e = Graph::complete(5);
        k5e.remove_edge(0, 1);
        assert_eq!(m.classes[32], key(&k5e));
        for w in m.witnesses.iter().flatten() {
            eprintln!("{}", w.describe());
        }
        for (j, (w, bad)) in &r.nearest {
            eprintln!("nearest P{j}: {} differs at {bad:?}", w.describe());
        }
    }
}
