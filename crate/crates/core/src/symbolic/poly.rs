use super::{fmt_q, Q};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial in `k` over ℚ; `coeffs[i]` multiplies `k^i`. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        Poly::monomial(Q::one(), 1)
    }

    pub fn monomial(c: Q, deg: usize) -> Self {
        let mut coeffs = vec![Q::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Q) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// `self(other(k))`.
    pub fn compose(&self, other: &Poly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * other) + &Poly::constant(c.clone()))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&(Q::one() / l)),
        }
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.leading().expect("nonzero").clone();
        let mut r = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if sd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut qc = vec![Q::zero(); sd - dd + 1];
        for i in (dd..=sd).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] / &lead;
            for (j, c) in d.coeffs.iter().enumerate() {
                r[i - dd + j] -= &f * c;
            }
            qc[i - dd] = f;
        }
        r.truncate(dd);
        Ok((Poly::new(qc), Poly::new(r)))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("b is nonzero").1;
            // keep coefficient growth in check
            a = b.monic();
            b = r;
        }
        a.monic()
    }

    /// Writes `self = c * p` with `p` integral, primitive and `c > 0`.
    pub fn integer_primitive(&self) -> (Q, Vec<BigInt>) {
        if self.is_zero() {
            return (Q::one(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let ints: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
        (Q::new(g, lcm), ints)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
                .collect(),
        )
    }
}

/// Evaluates an integer coefficient vector at an integer point.
pub(crate) fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match deg {
                0 => String::new(),
                1 => "k".to_string(),
                d => format!("k^{d}"),
            };
            if var.is_empty() {
                f.write_str(&fmt_q(&mag))?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{var}", fmt_q(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Poly, Add add, Sub sub, Mul mul);
pub(crate) use forward_owned;

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q, qi};
    use super::*;
    use proptest::prelude::*;

    fn den() -> Poly {
        Poly::from_ints(&[0, 0, 0, 0, -48, 75, -35, 5])
    }

    #[test]
    fn product_and_display() {
        let a = Poly::from_ints(&[-1, 1]);
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(den().to_string(), "5*k^7 - 35*k^6 + 75*k^5 - 48*k^4");
        assert_eq!(Poly::from_ints(&[0, -1, 0, 1]).to_string(), "k^3 - k");
        assert_eq!(Poly::new(vec![q(-1, 2)]).to_string(), "-1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        assert_eq!(den().eval(&qi(4)), qi(81920 - 143360 + 76800 - 12288));
        let x = BigInt::from(4);
        let (c, ints) = den().integer_primitive();
        assert_eq!(c, qi(1));
        assert_eq!(eval_int(&ints, &x), BigInt::from(3072));
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-2, 0, 2]);
        let b = Poly::from_ints(&[-2, 2]);
        let (qq, r) = a.div_rem(&b).unwrap();
        assert_eq!(qq, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(Poly::gcd(&a, &b), Poly::from_ints(&[-1, 1]));
        assert!(a.div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn primitive_form() {
        let p = Poly::new(vec![q(3, 4), q(-9, 2)]);
        let (c, ints) = p.integer_primitive();
        assert_eq!(c, q(3, 4));
        assert_eq!(ints, vec![BigInt::from(1), BigInt::from(-6)]);
    }

    #[test]
    fn composition() {
        let p = Poly::from_ints(&[0, 0, 1]);
        let s = Poly::from_ints(&[1, 1]);
        assert_eq!(p.compose(&s), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(s.derivative(), Poly::one());
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(-20i64..20, 0..6).prop_map(|c| Poly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn distributive(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn division_identity(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (qq, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&qq * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }
    }
}
