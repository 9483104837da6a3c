//! Exact arithmetic in one indeterminate `k`.
//!
//! [`Poly`] is a dense polynomial over ℚ, [`RationalFunction`] a reduced
//! quotient of two of them, and [`EpsPoly`] a polynomial in a second
//! variable `ε` with rational-function coefficients. [`prove_nonneg_int`]
//! certifies `R(k) >= 0` for every integer `k >= k0`.

mod eps;
mod nonneg;
mod parse;
mod poly;
mod ratfun;

pub use eps::EpsPoly;
pub use nonneg::{cauchy_bound, prove_nonneg_int, NonnegVerdict, DEFAULT_SWEEP_MAX};
pub use parse::{parse_poly, parse_ratfun};
pub use poly::Poly;
pub use ratfun::RationalFunction;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rationals.
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Renders a rational as `a` or `a/b`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
