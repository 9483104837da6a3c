//! Nonnegativity of a rational function at all integers `k >= k0`.
//!
//! The argument is a finite exact sweep plus a tail: beyond the Cauchy root
//! bound `1 + max |a_i / a_d|` neither numerator nor denominator has a real
//! root, so both keep the sign of their leading coefficient.

use super::poly::eval_int;
use super::{RationalFunction, Q};
use crate::exec::Exec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub const DEFAULT_SWEEP_MAX: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NonnegVerdict {
    /// Exact values checked on `k0..=swept_to`; beyond `tail_from` the sign
    /// is fixed by the leading coefficients.
    Holds { swept_to: u64, tail_from: u64 },
    FailsAt { k: u64, value: String },
    /// The denominator vanishes at an integer in range.
    DenominatorRoot { k: u64 },
    /// The sweep stopped short of the root bound.
    Inconclusive { required: u64 },
}

impl NonnegVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, NonnegVerdict::Holds { .. })
    }
}

/// Smallest integer `b >= 0` such that every real root of the polynomial
/// with integer coefficients `c` lies in `(-b, b)`; 0 when there are none.
pub fn cauchy_bound(c: &[BigInt]) -> u64 {
    if c.len() <= 1 {
        return 0;
    }
    let lead = c.last().expect("nonempty").abs();
    let max = c[..c.len() - 1].iter().map(|a| a.abs()).max().expect("nonempty");
    // 1 + ceil(max / lead); roots satisfy |x| < 1 + max/lead <= this
    let (q, r) = max.div_rem(&lead);
    let b = BigInt::from(1) + q + if r.is_zero() { 0 } else { 1 };
    u64::try_from(b).unwrap_or(u64::MAX)
}

fn sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Proves or refutes `R(k) >= 0` for all integers `k >= k0`, sweeping
/// `k0..=sweep_max` exactly.
pub fn prove_nonneg_int(r: &RationalFunction, k0: u64, sweep_max: u64, exec: Exec) -> NonnegVerdict {
    if r.is_zero() {
        // the denominator is the constant 1 in normal form
        return NonnegVerdict::Holds {
            swept_to: sweep_max,
            tail_from: k0,
        };
    }
    let (cn, num) = r.num().integer_primitive();
    let (cd, den) = r.den().integer_primitive();
    debug_assert!(cn.is_positive() && cd.is_positive());
    let tail_from = cauchy_bound(&num).max(cauchy_bound(&den)).max(k0);
    let lead_sign = sign(num.last().expect("nonzero")) * sign(den.last().expect("nonzero"));

    // first bad integer in the sweep, if any
    let end = sweep_max.max(k0.saturating_sub(1)).saturating_add(1).max(k0);
    let bad = exec.find_first(k0, end, |k| {
        let x = BigInt::from(k);
        let d = eval_int(&den, &x);
        if d.is_zero() {
            return Some(None);
        }
        let n = eval_int(&num, &x);
        (sign(&n) * sign(&d) < 0).then(|| Some(Q::new(n, d) * &cn / &cd))
    });
    match bad {
        Some((k, None)) => return NonnegVerdict::DenominatorRoot { k },
        Some((k, Some(v))) => {
            return NonnegVerdict::FailsAt {
                k,
                value: super::fmt_q(&v),
            }
        }
        None => {}
    }
    if lead_sign < 0 {
        // negative for every k at or beyond the bound
        let k = tail_from.max(end);
        let value = r.eval(&Q::from_integer(BigInt::from(k))).expect("no roots past the bound");
        return NonnegVerdict::FailsAt {
            k,
            value: super::fmt_q(&value),
        };
    }
    if sweep_max.saturating_add(1) < tail_from {
        return NonnegVerdict::Inconclusive {
            required: tail_from - 1,
        };
    }
    NonnegVerdict::Holds {
        swept_to: sweep_max,
        tail_from,
    }
}
