//! The certificate data, transcribed as text and parsed on first use.
//!
//! Indices `0..=33` are the positions of the 34 five-vertex graphs in the
//! published figure ordering. That ordering is only available as drawings;
//! [`super::reconstruct_mapping`] recovers which graph each index denotes.

use crate::symbolic::{parse_poly, parse_ratfun, Poly, RationalFunction, Q};
use std::collections::BTreeMap;
use std::sync::OnceLock;

pub const NUM_CLASSES: usize = 34;

/// The seven tight graphs (complete multipartite) for `k >= 4`.
pub const TIGHT_INDICES: [usize; 7] = [0, 4, 18, 19, 31, 32, 33];
/// Graphs containing `K4`, dropped when `k = 3`.
pub const K3_REMOVED: [usize; 5] = [20, 24, 30, 32, 33];
pub const K5_INDEX: usize = 33;

const DEN: &str = "5*k^7 - 35*k^6 + 75*k^5 - 48*k^4";

const Z_GENERIC: &str = "(k^4 - 10*k^3 + 35*k^2 - 50*k + 24)/k^4";
const Z_K5: &str = "(-10*k^3 + 35*k^2 - 50*k + 24)/k^4";
const Z_SCALE: &str = "6*(5*k^3 - 20*k^2 + 30*k - 16)/(5*k^3 - 35*k^2 + 75*k - 48)";

const P_SCALES: [&str; 5] = [
    "3*(k^5 - 8*k^4 + 22*k^3 - 24*k^2 + 8*k)/(5*k^7 - 35*k^6 + 75*k^5 - 48*k^4)",
    "(10*k^5 - 60*k^4 + 109*k^3 - 76*k^2 + 18*k)/(5*k^7 - 35*k^6 + 75*k^5 - 48*k^4)",
    "(5*k^5 - 28*k^4 + 45*k^3 - 28*k^2 + 6*k)/(5*k^7 - 35*k^6 + 75*k^5 - 48*k^4)",
    "(1/4)*(5*k^7 - 30*k^6 + 53*k^5 - 52*k^4 + 94*k^3 - 96*k^2 + 24*k)/(5*k^7 - 35*k^6 + 75*k^5 - 48*k^4)",
    "(1/4)*(15*k^5 - 60*k^4 + 78*k^3 - 40*k^2 + 8*k)/(5*k^7 - 35*k^6 + 75*k^5 - 48*k^4)",
];

const P1: &[(usize, &str)] = &[
    (0, "10*k^2 - 20*k + 10"),
    (1, "k^2 - 2*k + 1"),
    (3, "-k + 1"),
    (4, "-4*k + 4"),
    (18, "1"),
    (19, "1"),
];
const P2: &[(usize, &str)] = &[
    (18, "3*k^2 - 12*k + 12"),
    (29, "k^2 - 6*k + 8"),
    (31, "-4*k + 10"),
    (32, "3"),
];
const P3: &[(usize, &str)] = &[
    (4, "6*k^2 - 24*k + 24"),
    (11, "k^2 - 4*k + 4"),
    (17, "-k + 2"),
    (19, "-6*k + 12"),
    (31, "2"),
    (32, "3"),
];
const P4: &[(usize, &str)] = &[(19, "6"), (28, "-1"), (30, "2"), (31, "-4")];
const P5: &[(usize, &str)] = &[
    (19, "6*k^2 - 36*k + 54"),
    (30, "2*k^2 - 20*k + 42"),
    (31, "4*k^2 - 24*k + 36"),
    (32, "-24*k + 84"),
    (33, "120"),
];
// The k = 3 listing numbers the 29 K4-free graphs consecutively; these are
// its entries mapped back to 0..=33 (21->20 ... 28->31 after skipping the
// removed indices).
const P6: &[(usize, &str)] = &[
    (11, "1"),
    (25, "2"),
    (23, "-1"),
    (29, "-2"),
    (17, "1"),
    (19, "6"),
    (31, "-4"),
];

const C_DISPLAY: [&str; 10] = [
    "60*k^7 - 720*k^6 + 3600*k^5 - 9876*k^4 + 16320*k^3 - 16440*k^2 + 9360*k - 2304",
    "33*k^7 - 450*k^6 + 2547*k^5 - 7824*k^4 + 14214*k^3 - 15360*k^2 + 9144*k - 2304",
    "30*k^7 - 420*k^6 + 2430*k^5 - 7596*k^4 + 13980*k^3 - 15240*k^2 + 9120*k - 2304",
    "30*k^7 - 423*k^6 + 2457*k^5 - 7686*k^4 + 14118*k^3 - 15336*k^2 + 9144*k - 2304",
    "35*k^7 - 468*k^6 + 2607*k^5 - 7916*k^4 + 14278*k^3 - 15367*k^2 + 9144*k - 2304",
    "30*k^7 - 425*k^6 + 2468*k^5 - 7697*k^4 + 14098*k^3 - 15302*k^2 + 9132*k - 2304",
    "35*k^7 - 455*k^6 + 2505*k^5 - 7644*k^4 + 13980*k^3 - 15240*k^2 + 9120*k - 2304",
    "(135/4)*k^7 - (895/2)*k^6 + (9967/4)*k^5 - 7631*k^4 + (27913/2)*k^3 - 15216*k^2 + 9114*k - 2304",
    "50*k^7 - 610*k^6 + 3129*k^5 - 8902*k^4 + 15326*k^3 - 15956*k^2 + 9264*k - 2304",
    "50*k^7 - 610*k^6 + 3103*k^5 - 8758*k^4 + 15050*k^3 - 15748*k^2 + 9216*k - 2304",
];

/// Which displayed `C_j` (1-based) each index is claimed to carry.
const C_LABELS: [(usize, &[usize]); 10] = [
    (1, &TIGHT_INDICES),
    (2, &[1]),
    (3, &[2, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 20, 21, 22, 23, 24, 25]),
    (4, &[3]),
    (5, &[11]),
    (6, &[17]),
    (7, &[26, 27]),
    (8, &[28]),
    (9, &[29]),
    (10, &[30]),
];

const K3_P: [(&str, (i64, i64)); 5] = [
    ("p1", (1, 27)),
    ("p2", (13, 27)),
    ("p3", (8, 27)),
    ("p4", (2, 9)),
    ("p6", (17, 54)),
];

/// The nonzero `k = 3` coefficients as listed.
const K3_EXPECTED: [(&[usize], (i64, i64)); 9] = [
    (&[0, 4, 18, 19, 31], (40, 27)),
    (&[1], (4, 27)),
    (&[3], (-2, 27)),
    (&[11], (11, 18)),
    (&[17], (1, 54)),
    (&[23], (-17, 54)),
    (&[26, 27], (1, 1)),
    (&[28], (7, 9)),
    (&[29], (8, 9)),
];

/// The certificate's numbers.
#[derive(Clone, Debug)]
pub struct ReferenceTables {
    pub den: Poly,
    pub z: RationalFunction,
    /// `p1..p5`.
    pub p: [RationalFunction; 5],
    /// `P1..P6` as index -> polynomial in `k` (`P6` is constant).
    pub squares: [BTreeMap<usize, Poly>; 6],
    pub five_cycles: [u64; NUM_CLASSES],
    pub z_generic: RationalFunction,
    pub z_k5: RationalFunction,
    /// Displayed numerators of `C1..C10` over [`Self::den`].
    pub c_display: [Poly; 10],
    /// `c_label[i]` = the `j` of the `C_j` displayed for index `i`.
    pub c_label: [usize; NUM_CLASSES],
    pub k3_p: BTreeMap<&'static str, Q>,
    pub k3_expected: BTreeMap<usize, Q>,
}

impl ReferenceTables {
    /// `C_j(k)` as a rational function.
    pub fn c_display_fn(&self, j: usize) -> RationalFunction {
        RationalFunction::new(self.c_display[j - 1].clone(), self.den.clone()).expect("den is nonzero")
    }

    /// `P_j` at index `i` (zero when absent).
    pub fn square_entry(&self, j: usize, i: usize) -> Poly {
        self.squares[j - 1].get(&i).cloned().unwrap_or_else(Poly::zero)
    }

    /// `Z_i`: the generic value except at `K5`.
    pub fn zykov_entry(&self, i: usize) -> &RationalFunction {
        if i == K5_INDEX {
            &self.z_k5
        } else {
            &self.z_generic
        }
    }
}

fn poly_map(entries: &[(usize, &str)]) -> BTreeMap<usize, Poly> {
    entries
        .iter()
        .map(|&(i, s)| (i, parse_poly(s).expect("table entry parses")))
        .collect()
}

pub fn reference_tables() -> &'static ReferenceTables {
    static TABLES: OnceLock<ReferenceTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let rf = |s: &str| parse_ratfun(s).expect("table entry parses");
        let mut five_cycles = [0u64; NUM_CLASSES];
        five_cycles[26..].copy_from_slice(&[1, 1, 1, 2, 2, 4, 6, 12]);
        let mut c_label = [0usize; NUM_CLASSES];
        for (j, idx) in C_LABELS {
            for &i in idx {
                c_label[i] = j;
            }
        }
        let mut k3_expected = BTreeMap::new();
        for (idx, (n, d)) in K3_EXPECTED {
            for &i in idx {
                k3_expected.insert(i, crate::symbolic::q(n, d));
            }
        }
        ReferenceTables {
            den: parse_poly(DEN).expect("den parses"),
            z: rf(Z_SCALE),
            p: P_SCALES.map(rf),
            squares: [P1, P2, P3, P4, P5, P6].map(poly_map),
            five_cycles,
            z_generic: rf(Z_GENERIC),
            z_k5: rf(Z_K5),
            c_display: C_DISPLAY.map(|s| parse_poly(s).expect("display parses")),
            c_label,
            k3_p: K3_P.iter().map(|&(name, (n, d))| (name, crate::symbolic::q(n, d))).collect(),
            k3_expected,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_cover_every_index_once() {
        let t = reference_tables();
        let total: usize = C_LABELS.iter().map(|(_, idx)| idx.len()).sum();
        assert_eq!(total, NUM_CLASSES);
        assert!(t.c_label.iter().all(|&j| (1..=10).contains(&j)));
    }

    #[test]
    fn five_cycle_vector() {
        let t = reference_tables();
        assert!(t.five_cycles[..26].iter().all(|&c| c == 0));
        assert_eq!(t.five_cycles.iter().sum::<u64>(), 29);
        assert_eq!(t.five_cycles[K5_INDEX], 12);
    }

    #[test]
    fn zykov_entries() {
        let t = reference_tables();
        assert_eq!(&t.z_k5 + &RationalFunction::one(), t.z_generic);
        assert_eq!(t.z_generic.eval_int(5), Some(crate::symbolic::q(24, 625)));
    }

    #[test]
    fn k3_p_weights() {
        let t = reference_tables();
        assert_eq!(t.k3_p.len(), 5);
        assert_eq!(t.k3_expected.len(), 14);
    }
}
