use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::fps::FormalPowerSeries;
use crate::arith::{LegendreChar, Multiplicative};
use crate::{Error, Result};

/// Local factors are represented up to this power of `u = p^-s`, which
/// covers every `p^e < 2^64`.
pub const MAX_LOCAL_ORDER: usize = 64;

/// The Euler-product families attached to the residue classes of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `P_q`, for `q = +-1 mod 8`.
    P,
    /// The product attached to `q = +-3 mod 8`; for `q = +-11 mod 24` this is `R_q`.
    R,
    /// `L_q / zeta(qs)`, for `q = +-19, +-29 mod 120`.
    L,
    /// `script-L_q / zeta(qs)`, for `q = +-43, +-53 mod 120`.
    ScriptL,
    /// `K_q / zeta(qs)`, for `q = +-5 mod 24`.
    K,
}

impl Family {
    pub fn admits(self, q: u64) -> bool {
        match self {
            Family::P => matches!(q % 8, 1 | 7),
            Family::R => matches!(q % 8, 3 | 5),
            Family::L => matches!(q % 120, 19 | 101 | 29 | 91),
            Family::ScriptL => matches!(q % 120, 43 | 77 | 53 | 67),
            Family::K => matches!(q % 24, 5 | 19),
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Family::P => "family P (q = +-1 mod 8)",
            Family::R => "family R (q = +-3 mod 8)",
            Family::L => "family L (q = +-19, +-29 mod 120)",
            Family::ScriptL => "family script-L (q = +-43, +-53 mod 120)",
            Family::K => "family K (q = +-5 mod 24)",
        }
    }
}

type Generator = dyn Fn(u64, u32) -> i64 + Send + Sync;

/// One Euler factor: the coefficient of `u^e`, `u = p^-s`, as a function of
/// the prime `p` and the exponent `e`.
#[derive(Clone)]
pub struct LocalFactor {
    label: String,
    coeff: Arc<Generator>,
}

impl LocalFactor {
    pub fn from_fn(label: impl Into<String>, f: impl Fn(u64, u32) -> i64 + Send + Sync + 'static) -> Self {
        LocalFactor {
            label: label.into(),
            coeff: Arc::new(f),
        }
    }

    /// Prime-independent factor `sum_e coeffs[e] u^e`; coefficients past the
    /// end of `coeffs` are zero.
    pub fn from_series(label: impl Into<String>, coeffs: Vec<i64>) -> Self {
        Self::from_fn(label, move |_, e| coeffs.get(e as usize).copied().unwrap_or(0))
    }

    /// Local factor of `zeta(r s)`: `1 + u^r + u^{2r} + ...`.
    pub fn zeta_multiple(r: u32) -> Self {
        assert!(r >= 1);
        Self::from_fn(format!("zeta({r}s)"), move |_, e| i64::from(e % r == 0))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coefficient(&self, p: u64, e: u32) -> i64 {
        (self.coeff)(p, e)
    }

    /// Coefficients of `u^0 ..= u^order` at the prime `p`.
    pub fn coefficients(&self, p: u64, order: u32) -> Vec<i64> {
        (0..=order).map(|e| self.coefficient(p, e)).collect()
    }

    /// Product of two local factors (Cauchy product at each prime).
    pub fn times(&self, other: &LocalFactor) -> LocalFactor {
        let (a, b) = (Arc::clone(&self.coeff), Arc::clone(&other.coeff));
        LocalFactor::from_fn(format!("{} * {}", self.label, other.label), move |p, e| {
            (0..=e).map(|i| a(p, i) * b(p, e - i)).sum()
        })
    }
}

impl Multiplicative for LocalFactor {
    fn at_prime_power(&self, p: u64, e: u32) -> i64 {
        self.coefficient(p, e)
    }
}

impl fmt::Debug for LocalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalFactor")
            .field("label", &self.label)
            .field("at_2", &self.coefficients(2, 8))
            .finish()
    }
}

/// The Euler factor of `family` for the prime `q`, written as a series in
/// `u = p^-s`. The rational-function factors are transcribed literally and
/// expanded with exact rational arithmetic; every coefficient must come out
/// an integer.
pub fn local_factor_for(q: u64, family: Family) -> Result<LocalFactor> {
    let chi = LegendreChar::new(q)?;
    if !family.admits(q) {
        return Err(Error::Classification {
            q,
            family: family.describe().to_string(),
        });
    }
    let x = |m: u64| chi.eval(m as i64) as i64;
    let top = (q - 1).min(MAX_LOCAL_ORDER as u64);
    let n = MAX_LOCAL_ORDER;
    // sum_{m = from}^{q - 1} ((m + 1)/q) + (m/q)) u^m
    let plus_tail = |from: u64| {
        let mut c = vec![0i64; n + 1];
        for m in from..=top {
            c[m as usize] = x(m + 1) + x(m);
        }
        FormalPowerSeries::from_integers(n, &c)
    };
    let poly = |c: &[i64]| FormalPowerSeries::from_integers(n, c);
    let one = FormalPowerSeries::one(n);

    let (label, series) = match family {
        Family::P => {
            let mut c = vec![0i64; top as usize + 1];
            c[0] = 1;
            for m in 2..=top {
                c[m as usize] = x(m + 1) - x(m);
            }
            (format!("P_{q}"), poly(&c))
        }
        Family::R => {
            let mut c = vec![0i64; top as usize + 1];
            c[0] = 1;
            for m in 2..=top {
                c[m as usize] = x(m + 1) + x(m);
            }
            (format!("R_{q}"), poly(&c))
        }
        Family::L => {
            // 1 + 2(u^5 + u^6 + u^7)/(1 - u^2) + (1 + u^2)/(1 - u^2) * tail
            let one_minus_u2 = poly(&[1, 0, -1]);
            let a = poly(&[0, 0, 0, 0, 0, 2, 2, 2]).div(&one_minus_u2)?;
            let b = &poly(&[1, 0, 1]).div(&one_minus_u2)? * &plus_tail(6);
            (format!("L_{q}/zeta({q}s)"), &(&one + &a) + &b)
        }
        Family::ScriptL => {
            // 1 - u^6 (2 - u^2) / D + tail / D,  D = (1 - u^2)^3 (1 + u^2)
            let one_minus_u2 = poly(&[1, 0, -1]);
            let d = &(&(&one_minus_u2 * &one_minus_u2) * &one_minus_u2) * &poly(&[1, 0, 1]);
            let a = poly(&[0, 0, 0, 0, 0, 0, 2, 0, -1]).div(&d)?;
            let b = plus_tail(6).div(&d)?;
            (format!("scriptL_{q}/zeta({q}s)"), &(&one - &a) + &b)
        }
        Family::K => {
            // 1 - u^4 / (1 - u^2)^2 + tail / (1 - u^2)^2
            let one_minus_u2 = poly(&[1, 0, -1]);
            let d = &one_minus_u2 * &one_minus_u2;
            let a = poly(&[0, 0, 0, 0, 1]).div(&d)?;
            let b = plus_tail(4).div(&d)?;
            (format!("K_{q}/zeta({q}s)"), &(&one - &a) + &b)
        }
    };
    let coeffs = series.to_integers(&label)?;
    if coeffs[0] != 1 {
        return Err(Error::Invariant(format!("{label} has constant term {}", coeffs[0])));
    }
    Ok(LocalFactor::from_series(label, coeffs))
}
