use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, ToPrimitive, Zero};
use num::{BigInt, BigRational};

use crate::{Error, Result};

/// Power series in one variable, truncated after `u^order`, with exact
/// rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalPowerSeries {
    coeffs: Vec<BigRational>,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl FormalPowerSeries {
    pub fn zero(order: usize) -> Self {
        FormalPowerSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// `c * u^e` (zero when `e > order`).
    pub fn monomial(order: usize, e: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = int(c);
        }
        s
    }

    /// `sum_i coeffs[i] u^i`, truncated to `order`.
    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = int(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, e: usize) -> &BigRational {
        &self.coeffs[e]
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = int(c);
        FormalPowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::arg("power series with zero constant term has no inverse"));
        }
        let n = self.order();
        let mut inv = vec![BigRational::zero(); n + 1];
        inv[0] = c0.recip();
        for k in 1..=n {
            let mut s = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &inv[k - j];
                }
            }
            inv[k] = -(s / c0);
        }
        Ok(FormalPowerSeries { coeffs: inv })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Integer coefficients, or the first index holding a non-integer.
    pub fn to_integers(&self, context: &str) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if !c.is_integer() {
                    return Err(Error::NotIntegral {
                        context: context.to_string(),
                        index,
                    });
                }
                c.to_integer()
                    .to_i64()
                    .ok_or(Error::Overflow("power series coefficient"))
            })
            .collect()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

impl Add for &FormalPowerSeries {
    type Output = FormalPowerSeries;
    fn add(self, rhs: Self) -> FormalPowerSeries {
        let n = self.order().min(rhs.order());
        FormalPowerSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &FormalPowerSeries {
    type Output = FormalPowerSeries;
    fn sub(self, rhs: Self) -> FormalPowerSeries {
        self + &(-rhs)
    }
}

impl Neg for &FormalPowerSeries {
    type Output = FormalPowerSeries;
    fn neg(self) -> FormalPowerSeries {
        FormalPowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &FormalPowerSeries {
    type Output = FormalPowerSeries;
    fn mul(self, rhs: Self) -> FormalPowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        FormalPowerSeries { coeffs: out }
    }
}
