use num::rational::Ratio;
use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exec::{blocks, map_ordered};
use crate::{Error, Result, Settings};

/// `f(n) = scale / n^exponent` on `[n, 2n]`, and a width `delta`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveConfig {
    pub scale: f64,
    pub exponent: Ratio<i64>,
    pub n: u64,
    pub delta: f64,
    /// Settle points too close to `delta` for floating point by exact rational
    /// comparison. When off, such points are an [`Error::Undecidable`].
    pub resolve_exactly: bool,
}

impl CurveConfig {
    pub fn new(scale: f64, exponent: Ratio<i64>, n: u64, delta: f64) -> Self {
        CurveConfig {
            scale,
            exponent,
            n,
            delta,
            resolve_exactly: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::arg(format!(
                "curve scale must be positive and finite, got {}",
                self.scale
            )));
        }
        if *self.exponent.numer() <= 0 || *self.exponent.denom() <= 0 {
            return Err(Error::arg(format!(
                "curve exponent must be positive, got {}",
                self.exponent
            )));
        }
        if self.n == 0 || self.n > u64::MAX / 2 {
            return Err(Error::arg(format!("window start must be in [1, 2^63), got {}", self.n)));
        }
        if !(self.delta > 0.0 && self.delta < 0.25) {
            return Err(Error::arg(format!("delta must lie in (0, 1/4), got {}", self.delta)));
        }
        Ok(())
    }
}

/// Exact `||f(n)|| < delta` with `f(n)^q = scale^q / n^p` for `exponent = p/q`.
fn near_exact(cfg: &CurveConfig, n: u64, approx: f64) -> Option<bool> {
    let (p, q) = (*cfg.exponent.numer(), *cfg.exponent.denom());
    if p > 4096 || q > 64 {
        return None;
    }
    let (p, q) = (p as usize, q as usize);
    let scale = BigRational::from_float(cfg.scale)?;
    let delta = BigRational::from_float(cfg.delta)?;
    let fq = num::pow(scale, q) / BigRational::from_integer(num::pow(BigInt::from(n), p));
    let k0 = approx.floor() as i64;
    // delta < 1/4, so at most one integer is that close; the float estimate
    // puts it within these candidates.
    Some((k0 - 1..=k0 + 2).any(|k| {
        let k = BigRational::from_integer(BigInt::from(k));
        let lower = &k - &delta;
        let upper = &k + &delta;
        if !upper.is_positive() {
            return false;
        }
        let below = fq < num::pow(upper, q);
        let above = !lower.is_positive() || num::pow(lower, q) < fq;
        below && above
    }))
}

/// Number of `n` in `[N, 2N]` with `||scale / n^exponent|| < delta`.
pub fn count_near_curve(cfg: &CurveConfig, settings: &Settings) -> Result<u64> {
    cfg.validate()?;
    let s = cfg.exponent.to_f64().expect("ratio of i64 fits f64");
    let eps = f64::EPSILON;
    let parts = map_ordered(settings, "near-curve", blocks(cfg.n, 2 * cfg.n, 1 << 16), |(lo, hi)| {
        let mut count = 0u64;
        let mut undecided = Vec::new();
        for n in lo..=hi {
            let f = cfg.scale * (n as f64).powf(-s);
            let dist = (f - f.round()).abs();
            // Rounding of s, powf, the product and the subtraction.
            let guard = (1e-12f64).max((8.0 + 2.0 * s * (n as f64).ln()) * eps * f * 2.0);
            if (dist - cfg.delta).abs() > guard && f < 2f64.powi(50) {
                count += (dist < cfg.delta) as u64;
                continue;
            }
            match cfg.resolve_exactly.then(|| near_exact(cfg, n, f)).flatten() {
                Some(hit) => count += hit as u64,
                None => undecided.push(n),
            }
        }
        Ok((count, undecided))
    })?;
    let mut total = 0;
    let mut undecided = Vec::new();
    for (c, u) in parts {
        total += c;
        undecided.extend(u);
    }
    if !undecided.is_empty() {
        return Err(Error::Undecidable(undecided));
    }
    Ok(total)
}

/// Exact `||sqrt(a)|| < sqrt(b)` for rationals `a >= 0` and `0 < b < 1/16`.
pub fn near_integer_sqrt(a: &BigRational, b: &BigRational) -> bool {
    debug_assert!(!a.is_negative() && b.is_positive());
    let four = BigRational::from_integer(BigInt::from(4));
    let k0 = a.floor().to_integer().sqrt();
    [k0.clone(), k0 + 1].into_iter().any(|k| {
        let k = BigRational::from_integer(k);
        let four_k2b = &four * &k * &k * b;
        // sqrt(a) < k + sqrt(b)  <=>  a - k^2 - b < 2k sqrt(b)
        let t = a - &k * &k - b;
        let below = t.is_negative() || (k.is_positive() && &t * &t < four_k2b);
        // sqrt(a) > k - sqrt(b), where k - sqrt(b) > 0 for k >= 1
        let u = &k * &k + b - a;
        let above = k.is_zero() || u.is_negative() || &u * &u < four_k2b;
        below && above
    })
}

/// `||sqrt(num / den)|| < sqrt(bnum / bden)` on integers.
pub(crate) fn near_integer_sqrt_int(num: u128, den: u128, bnum: u128, bden: u128) -> bool {
    let r = |a: u128, b: u128| BigRational::new(BigInt::from(a), BigInt::from(b));
    near_integer_sqrt(&r(num, den), &r(bnum, bden))
}
