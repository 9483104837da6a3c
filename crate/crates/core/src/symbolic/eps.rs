use super::RationalFunction;
use std::ops::{Add, Mul, Sub};

/// Polynomial in `ε` with coefficients in ℚ(k); `coeffs[i]` multiplies `ε^i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EpsPoly {
    coeffs: Vec<RationalFunction>,
}

impl EpsPoly {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        EpsPoly { coeffs }
    }

    pub fn constant(c: RationalFunction) -> Self {
        EpsPoly::new(vec![c])
    }

    /// `a + b ε`.
    pub fn linear(a: RationalFunction, b: RationalFunction) -> Self {
        EpsPoly::new(vec![a, b])
    }

    pub fn eps() -> Self {
        Self::linear(RationalFunction::zero(), RationalFunction::one())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Collected coefficients, `ε^0` first.
    pub fn coefficients(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RationalFunction {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        EpsPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = EpsPoly::constant(RationalFunction::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add<&EpsPoly> for &EpsPoly {
    type Output = EpsPoly;
    fn add(self, rhs: &EpsPoly) -> EpsPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        EpsPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub<&EpsPoly> for &EpsPoly {
    type Output = EpsPoly;
    fn sub(self, rhs: &EpsPoly) -> EpsPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        EpsPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul<&EpsPoly> for &EpsPoly {
    type Output = EpsPoly;
    fn mul(self, rhs: &EpsPoly) -> EpsPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return EpsPoly::default();
        }
        let mut out = vec![RationalFunction::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        EpsPoly::new(out)
    }
}

super::poly::forward_owned!(EpsPoly, Add add, Sub sub, Mul mul);
